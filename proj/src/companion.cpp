#include "ruled/companion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ruled/errors.hpp"
#include "ruled/numerics.hpp"

namespace ruled {

namespace {

constexpr double kTotalQuadTol = 1e-10;

}  // namespace

CausalCharacter companion_causal_character(const CompanionSpec& spec, double tol) {
  const FrameVector& l = spec.lambda;
  if (!std::isfinite(l.t) || !std::isfinite(l.n) || !std::isfinite(l.b)) {
    throw GeometryError(ErrorCode::NullCompanion, "lambda must be finite");
  }
  const double q = frame_quadratic(l);
  const double scale = l.t * l.t + l.n * l.n + l.b * l.b;
  if (std::abs(q) <= tol * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os.precision(17);
    os << "-l1^2 + l2^2 + l3^2 = " << q << " (beta' would be null)";
    throw GeometryError(ErrorCode::NullCompanion, os.str());
  }
  return q < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

double CompanionCurve::segment_tol() const {
  return kTotalQuadTol / static_cast<double>(std::max<std::size_t>(knots_.size(), 2) - 1);
}

Vec3 CompanionCurve::derivative(double s) const {
  return to_ambient(frenet_apparatus(*base_, s, tol_), spec_.lambda);
}

Vec3 CompanionCurve::position(double s) const {
  const Interval& d = domain();
  if (!d.contains(s)) {
    std::ostringstream os;
    os.precision(17);
    os << "s " << s << " outside [" << d.lo << ", " << d.hi << "]";
    throw GeometryError(ErrorCode::OutOfDomain, os.str());
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(knots_.begin(), it));
  i = i == 0 ? 0 : i - 1;
  if (i >= knots_.size() - 1) return positions_.back();
  if (s == knots_[i]) return positions_[i];
  const auto integrand = [this](double x) { return derivative(x); };
  return positions_[i] + numerics::adaptive_simpson(integrand, knots_[i], s, segment_tol());
}

CompanionCurve integrate_companion(CurvePtr base, CompanionSpec spec, std::span<const double> grid,
                                   const Tolerance& tol) {
  companion_causal_character(spec, tol.zero_tol);
  const Interval d = base->domain();

  std::vector<double> knots;
  knots.reserve(grid.size() + 2);
  knots.push_back(d.lo);
  for (double s : grid) {
    if (s > d.lo && s < d.hi) knots.push_back(s);
  }
  knots.push_back(d.hi);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  if (!spec.start_point) spec.start_point = base->position(d.lo);
  CompanionCurve out(std::move(base), spec, tol);
  out.knots_ = std::move(knots);
  out.positions_.resize(out.knots_.size());
  out.positions_[0] = *spec.start_point;

  const double seg_tol = out.segment_tol();
  const auto integrand = [&out](double x) { return out.derivative(x); };
  for (std::size_t i = 1; i < out.knots_.size(); ++i) {
    out.positions_[i] =
        out.positions_[i - 1] + numerics::adaptive_simpson(integrand, out.knots_[i - 1], out.knots_[i], seg_tol);
  }
  return out;
}

CompanionCurve integrate_companion(CurvePtr base, CompanionSpec spec, const Tolerance& tol) {
  const Interval d = base->domain();
  const auto grid = numerics::uniform_grid(d.lo, d.hi, 65);
  return integrate_companion(std::move(base), spec, grid, tol);
}

}  // namespace ruled
