#include "ruled/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "ruled/companion.hpp"

namespace ruled {

DevelopabilityVerdict verdict_from_rows(std::span<const kernels::SweepRow> rows, const VerdictOptions& opts) {
  DevelopabilityVerdict v;
  v.convention = opts.convention;
  v.samples = rows.size();
  v.cylinder = !rows.empty();

  const kernels::SweepRow* largest = nullptr;
  const kernels::SweepRow* smallest = nullptr;
  const auto pick = [&](const kernels::SweepRow& r) {
    return opts.convention == DenominatorConvention::PaperExpanded ? r.p_paper : r.p_lorentzian;
  };
  for (const auto& r : rows) {
    v.max_abs_numerator = std::max(v.max_abs_numerator, std::abs(r.numerator));
    if (r.director_derivative_norm > opts.cylinder_tol) v.cylinder = false;
    const auto p = pick(r);
    if (!p) {
      ++v.undefined_count;
      continue;
    }
    if (!largest || std::abs(*p) > std::abs(*pick(*largest))) largest = &r;
    if (!smallest || std::abs(*p) < std::abs(*pick(*smallest))) smallest = &r;
  }
  if (largest) {
    v.max_abs_P = std::abs(*pick(*largest));
    v.witnesses.push_back({largest->s, *pick(*largest)});
    if (smallest != largest) v.witnesses.push_back({smallest->s, *pick(*smallest)});
  }
  v.developable = v.cylinder || (largest != nullptr && v.max_abs_P <= opts.verdict_tol);
  return v;
}

DevelopabilityVerdict developability_verdict(const RuledSurface& surface, std::span<const double> grid,
                                             const VerdictOptions& opts) {
  const auto rows = kernels::sweep(surface, grid, opts.tol, opts.execution);
  return verdict_from_rows(rows, opts);
}

bool cylinder_check(const RuledSurface& surface, std::span<const double> grid, double tol, const Tolerance& numeric) {
  for (double s : grid) {
    if (euclid_norm(surface.director_derivative_at(surface.frame(s, numeric))) > tol) return false;
  }
  return true;
}

MannheimResult mannheim_constancy(const ProperTimeCurve& alpha, std::span<const double> grid, double tol,
                                  const Tolerance& numeric) {
  if (grid.empty()) throw std::invalid_argument("mannheim_constancy: empty grid");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  for (double s : grid) {
    const FrenetFrame f = frenet_apparatus(alpha, s, numeric);
    const double q = f.k1 / (f.k1 * f.k1 + f.k2 * f.k2);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
    sum += q;
  }
  MannheimResult r;
  r.mean = sum / static_cast<double>(grid.size());
  r.relative_spread = (hi - lo) / std::abs(r.mean);
  r.constant = r.relative_spread <= tol;
  return r;
}

std::string_view to_string(ZeroPattern p) {
  switch (p) {
    case ZeroPattern::Zero: return "zero";
    case ZeroPattern::Nonzero: return "nonzero";
    case ZeroPattern::Undefined: return "undefined";
  }
  return "unknown";
}

FrameCoefficients case_sample(PlaneClass c) {
  switch (c) {
    case PlaneClass::AxisT: return validate_coefficients(1.0, 0.0, 0.0, -1);
    case PlaneClass::AxisN: return validate_coefficients(0.0, 1.0, 0.0, 1);
    case PlaneClass::AxisB: return validate_coefficients(0.0, 0.0, 1.0, 1);
    case PlaneClass::NormalPlane: return validate_coefficients(0.0, 0.6, 0.8, 1);
    case PlaneClass::OsculatingPlane: return validate_coefficients(0.75, 1.25, 0.0, 1);
    case PlaneClass::RectifyingPlane: return validate_coefficients(0.75, 0.0, 1.25, 1);
    case PlaneClass::General: return validate_coefficients(1.0, 1.0, 1.0, 1);
  }
  throw std::invalid_argument("case_sample: unknown class");
}

std::vector<CaseRow> case_table(const CurvePtr& alpha, std::span<const double> grid, double verdict_tol,
                                const Tolerance& tol, kernels::Execution exec) {
  std::vector<CaseRow> rows;
  rows.reserve(18);
  for (const FrameVector& lambda : kAxisLambdas) {
    CompanionPtr beta;
    if (lambda != kAxisLambdas[0]) {
      beta = std::make_shared<const CompanionCurve>(integrate_companion(alpha, CompanionSpec{lambda, {}}, grid, tol));
    }
    for (PlaneClass cls : kCatalogueClasses) {
      const FrameCoefficients x = case_sample(cls);
      const RuledSurface surface =
          beta ? RuledSurface::over_companion(beta, x) : RuledSurface::over_base(alpha, x);

      CaseRow row;
      row.lambda = lambda;
      row.case_class = cls;
      row.x = x.vector();
      row.causal_sign = x.causal_sign();
      const double x1 = x.x1(), x2 = x.x2(), x3 = x.x3();
      row.numerator_k1 = -lambda.t * x1 * x3 + lambda.n * x2 * x3 + lambda.b * (x1 * x1 - x2 * x2);
      row.numerator_k2 = lambda.t * (x2 * x2 + x3 * x3) - lambda.n * x1 * x2 - lambda.b * x1 * x3;
      row.denominator_k1k1 = x1 * x1 + x2 * x2;
      row.denominator_k1k2 = -2.0 * x1 * x3;
      row.denominator_k2k2 = x2 * x2 + x3 * x3;

      const auto sweep = kernels::sweep(surface, grid, tol, exec);
      const auto oracle = kernels::oracle(surface, grid, DenominatorConvention::PaperExpanded, tol, exec);
      row.p_min = std::numeric_limits<double>::infinity();
      row.p_max = -row.p_min;
      double max_abs = 0.0;
      for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (!sweep[i].p_paper) {
          ++row.undefined_count;
          continue;
        }
        const double p = *sweep[i].p_paper;
        row.p_min = std::min(row.p_min, p);
        row.p_max = std::max(row.p_max, p);
        max_abs = std::max(max_abs, std::abs(p));
        const double o = oracle[i].value.value_or(std::numeric_limits<double>::infinity());
        row.max_oracle_deviation = std::max(row.max_oracle_deviation, std::abs(p - o));
      }
      if (row.undefined_count == sweep.size()) {
        row.pattern = ZeroPattern::Undefined;
        row.p_min = row.p_max = 0.0;
      } else {
        row.pattern = max_abs <= verdict_tol ? ZeroPattern::Zero : ZeroPattern::Nonzero;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace ruled
