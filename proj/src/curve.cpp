#include "ruled/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ruled/errors.hpp"
#include "ruled/numerics.hpp"

namespace ruled {

namespace {

constexpr std::size_t kTableSegments = 64;
constexpr double kSegmentQuadTol = 1e-12;
constexpr double kInversionTol = 1e-14;

[[noreturn]] void out_of_domain(double x, const Interval& d, const char* what) {
  std::ostringstream os;
  os.precision(17);
  os << what << " " << x << " outside [" << d.lo << ", " << d.hi << "]";
  throw GeometryError(ErrorCode::OutOfDomain, os.str());
}

}  // namespace

// ---------------------------------------------------------------------------
// ParamCurve

ParamCurve::ParamCurve(Sampler position, std::array<Sampler, 3> derivatives, Interval domain,
                       DerivativeMode mode, double fd_step)
    : position_(std::move(position)),
      derivatives_(std::move(derivatives)),
      domain_(domain),
      mode_(mode),
      fd_step_(fd_step) {
  if (!(domain_.lo < domain_.hi)) throw std::invalid_argument("ParamCurve: empty domain");
  if (!position_) throw std::invalid_argument("ParamCurve: missing sampler");
}

ParamCurve ParamCurve::analytic(Sampler position, std::array<Sampler, 3> derivatives, Interval domain) {
  for (const auto& d : derivatives) {
    if (!d) throw std::invalid_argument("ParamCurve::analytic: all three derivatives are required");
  }
  return ParamCurve(std::move(position), std::move(derivatives), domain, DerivativeMode::Analytic, 1e-5);
}

ParamCurve ParamCurve::finite_difference(Sampler position, Interval domain, double fd_step) {
  Tolerance{1e-9, fd_step}.validate();
  return ParamCurve(std::move(position), {}, domain, DerivativeMode::FiniteDifference, fd_step);
}

Vec3 ParamCurve::position(double t) const {
  if (!domain_.contains(t)) out_of_domain(t, domain_, "t");
  return position_(t);
}

double ParamCurve::step_for_order(int order) const {
  static constexpr double kScale[] = {1.0, 100.0, 1000.0};
  if (order < 1 || order > 3) throw std::invalid_argument("derivative order must be 1, 2 or 3");
  return fd_step_ * kScale[order - 1];
}

Interval ParamCurve::derivative_domain() const {
  if (mode_ == DerivativeMode::Analytic) return domain_;
  const double reach = numerics::stencil_reach(step_for_order(3), 3);
  return {domain_.lo + reach, domain_.hi - reach};
}

Vec3 ParamCurve::derive(double t, int order) const {
  if (order < 1 || order > 3) throw std::invalid_argument("derivative order must be 1, 2 or 3");
  if (!domain_.contains(t)) out_of_domain(t, domain_, "t");
  if (mode_ == DerivativeMode::Analytic) return derivatives_[order - 1](t);

  const double h = step_for_order(order);
  const double reach = numerics::stencil_reach(h, order);
  if (t - reach < domain_.lo || t + reach > domain_.hi) out_of_domain(t, domain_, "finite-difference stencil at t");
  return numerics::richardson_derivative(position_, t, h, order);
}

double validate_derivatives(const ParamCurve& curve, std::size_t n, double fd_step) {
  if (curve.mode() != DerivativeMode::Analytic) return 0.0;
  const Interval& d = curve.domain();
  const ParamCurve fd = ParamCurve::finite_difference([&curve](double t) { return curve.position(t); }, d, fd_step);
  const double margin = 2.0 * fd.step_for_order(3);
  if (d.length() <= 2.0 * margin) throw std::invalid_argument("validate_derivatives: domain too short");
  double worst = 0.0;
  for (double t : numerics::uniform_grid(d.lo + margin, d.hi - margin, n)) {
    for (int order = 1; order <= 3; ++order) {
      const Vec3 exact = curve.derive(t, order);
      const Vec3 approx = fd.derive(t, order);
      const double scale = std::max(1.0, euclid_norm(exact));
      worst = std::max(worst, euclid_norm(exact - approx) / scale);
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// ProperTimeCurve

double ProperTimeCurve::speed(double t) const {
  const Vec3 d = curve_.derive(t, 1);
  const double q = inner(d, d);
  if (!(q < 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "<alpha', alpha'> = " << q << " at t = " << t;
    throw GeometryError(ErrorCode::NotTimelike, os.str());
  }
  return std::sqrt(-q);
}

std::size_t ProperTimeCurve::segment_of_t(double t) const {
  const auto it = std::upper_bound(t_knots_.begin(), t_knots_.end(), t);
  const auto idx = static_cast<std::size_t>(std::distance(t_knots_.begin(), it));
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, t_knots_.size() - 2);
}

double ProperTimeCurve::s_of_t(double t) const {
  const Interval d{t_knots_.front(), t_knots_.back()};
  if (!d.contains(t)) out_of_domain(t, d, "t");
  const std::size_t i = segment_of_t(t);
  const auto sp = [this](double x) { return speed(x); };
  return s_knots_[i] + numerics::adaptive_simpson(sp, t_knots_[i], t, kSegmentQuadTol);
}

double ProperTimeCurve::t_of_s(double s) const {
  if (!s_domain_.contains(s)) out_of_domain(s, s_domain_, "s");
  const auto it = std::upper_bound(s_knots_.begin(), s_knots_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(s_knots_.begin(), it));
  i = std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, s_knots_.size() - 2);
  if (s == s_knots_[i]) return t_knots_[i];
  if (s == s_knots_[i + 1]) return t_knots_[i + 1];

  const double t0 = t_knots_[i];
  const double t1 = t_knots_[i + 1];
  const auto sp = [this](double x) { return speed(x); };
  const auto g = [&](double t) { return s_knots_[i] + numerics::adaptive_simpson(sp, t0, t, kSegmentQuadTol) - s; };
  const double guess = t0 + (t1 - t0) * (s - s_knots_[i]) / (s_knots_[i + 1] - s_knots_[i]);
  return numerics::bracketed_newton(g, sp, t0, t1, guess, kInversionTol).x;
}

Vec3 ProperTimeCurve::position(double s) const { return curve_.position(t_of_s(s)); }

std::array<Vec3, 3> ProperTimeCurve::jet(double s, int max_order) const {
  if (max_order < 1 || max_order > 3) throw std::invalid_argument("derivative order must be 1, 2 or 3");
  std::array<Vec3, 3> out{};
  const double t = t_of_s(s);
  const Vec3 a1 = curve_.derive(t, 1);
  const double sigma = std::sqrt(-inner(a1, a1));
  const double t1 = 1.0 / sigma;
  out[0] = a1 * t1;
  if (max_order == 1) return out;

  const Vec3 a2 = curve_.derive(t, 2);
  const double sigma_t = -inner(a1, a2) / sigma;
  const double t2 = -sigma_t / (sigma * sigma * sigma);
  out[1] = a2 * (t1 * t1) + a1 * t2;
  if (max_order == 2) return out;

  const Vec3 a3 = curve_.derive(t, 3);
  const double sigma_tt = (-inner(a2, a2) - inner(a1, a3) - sigma_t * sigma_t) / sigma;
  const double s2 = sigma * sigma;
  const double t3 = -sigma_tt / (s2 * s2) + 3.0 * sigma_t * sigma_t / (s2 * s2 * sigma);
  out[2] = a3 * (t1 * t1 * t1) + a2 * (3.0 * t1 * t2) + a1 * t3;
  return out;
}

Vec3 ProperTimeCurve::derivative(double s, int order) const { return jet(s, order)[order - 1]; }

ParamCurve ProperTimeCurve::as_param_curve() const {
  auto self = std::make_shared<const ProperTimeCurve>(*this);
  return ParamCurve::analytic([self](double s) { return self->position(s); },
                              {[self](double s) { return self->derivative(s, 1); },
                               [self](double s) { return self->derivative(s, 2); },
                               [self](double s) { return self->derivative(s, 3); }},
                              s_domain_);
}

ProperTimeCurve reparametrize_proper_time(ParamCurve curve, double s_start, const Tolerance& tol) {
  ProperTimeCurve out(std::move(curve));
  const Interval d = out.curve_.derivative_domain();
  if (!(d.lo < d.hi)) throw std::invalid_argument("reparametrize_proper_time: domain shorter than derivative stencil");

  // Timelike check on knots and segment midpoints.
  const auto probe = numerics::uniform_grid(d.lo, d.hi, 2 * kTableSegments + 1);
  double worst = -std::numeric_limits<double>::infinity();
  double worst_t = d.lo;
  for (double t : probe) {
    const Vec3 a1 = out.curve_.derive(t, 1);
    const double q = inner(a1, a1) / std::max(1.0, euclid_dot(a1, a1));
    if (q > worst) {
      worst = q;
      worst_t = t;
    }
  }
  if (worst >= -tol.zero_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "tangent is not timelike at t = " << worst_t << " (normalized <alpha', alpha'> = " << worst << ")";
    throw GeometryError(ErrorCode::NotTimelike, os.str());
  }

  out.t_knots_ = numerics::uniform_grid(d.lo, d.hi, kTableSegments + 1);
  out.s_knots_.assign(out.t_knots_.size(), s_start);
  const auto sp = [&out](double x) { return out.speed(x); };
  for (std::size_t i = 1; i < out.t_knots_.size(); ++i) {
    out.s_knots_[i] =
        out.s_knots_[i - 1] + numerics::adaptive_simpson(sp, out.t_knots_[i - 1], out.t_knots_[i], kSegmentQuadTol);
  }
  out.s_domain_ = {out.s_knots_.front(), out.s_knots_.back()};
  return out;
}

// ---------------------------------------------------------------------------
// Frenet apparatus

FrenetFrame frenet_apparatus(const ProperTimeCurve& curve, double s, const Tolerance& tol) {
  FrenetFrame f;
  f.s = s;
  const auto d = curve.jet(s, 3);
  f.T = d[0];
  const Vec3& dT = d[1];
  const double q = inner(dT, dT);
  f.k1 = q > 0.0 ? std::sqrt(q) : 0.0;
  if (f.k1 <= tol.zero_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "k1 = " << f.k1 << " at s = " << s;
    throw GeometryError(ErrorCode::VanishingCurvature, os.str());
  }
  f.N = dT / f.k1;
  f.B = lorentz_cross(f.T, f.N);
  // <T', B> = 0, so <N', B> reduces to <T'', B> / k1.
  f.k2 = inner(d[2], f.B) / f.k1;
  return f;
}

double frenet_residual(const ProperTimeCurve& curve, double s, const Tolerance& tol) {
  const double h = tol.fd_step;
  const Interval& d = curve.domain();
  if (s - h < d.lo || s + h > d.hi) out_of_domain(s, d, "finite-difference stencil at s");

  const FrenetFrame c = frenet_apparatus(curve, s, tol);
  const FrenetFrame p1 = frenet_apparatus(curve, s + h, tol);
  const FrenetFrame m1 = frenet_apparatus(curve, s - h, tol);
  const FrenetFrame p2 = frenet_apparatus(curve, s + 0.5 * h, tol);
  const FrenetFrame m2 = frenet_apparatus(curve, s - 0.5 * h, tol);

  const auto rich = [h](const Vec3& plus1, const Vec3& minus1, const Vec3& plus2, const Vec3& minus2) {
    const Vec3 coarse = (plus1 - minus1) / (2.0 * h);
    const Vec3 fine = (plus2 - minus2) / h;
    return (4.0 * fine - coarse) / 3.0;
  };
  const Vec3 dT = rich(p1.T, m1.T, p2.T, m2.T);
  const Vec3 dN = rich(p1.N, m1.N, p2.N, m2.N);
  const Vec3 dB = rich(p1.B, m1.B, p2.B, m2.B);

  const double rT = euclid_norm(dT - c.k1 * c.N);
  const double rN = euclid_norm(dN - (c.k1 * c.T + c.k2 * c.B));
  const double rB = euclid_norm(dB + c.k2 * c.N);
  return std::max({rT, rN, rB});
}

CurveClass classify_curve(const ProperTimeCurve& curve, std::span<const double> grid, const ClassifyOptions& opts,
                          const Tolerance& tol) {
  if (grid.empty()) throw std::invalid_argument("classify_curve: empty grid");
  CurveClass out;
  std::vector<double> k1(grid.size());
  std::vector<double> k2(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const FrenetFrame f = frenet_apparatus(curve, grid[i], tol);
    k1[i] = f.k1;
    k2[i] = f.k2;
  }
  const auto [k1lo, k1hi] = std::minmax_element(k1.begin(), k1.end());
  const auto [k2lo, k2hi] = std::minmax_element(k2.begin(), k2.end());
  out.k1_min = *k1lo;
  out.k1_max = *k1hi;
  out.k2_min = *k2lo;
  out.k2_max = *k2hi;

  const double max_abs_k2 = std::max(std::abs(out.k2_min), std::abs(out.k2_max));
  out.planar = max_abs_k2 <= opts.planar_tol * out.k1_max;
  if (out.planar) return out;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  bool ratio_defined = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(k2[i]) <= opts.planar_tol * k1[i]) {
      // torsion vanishes at an isolated point: k1/k2 is unbounded there
      ratio_defined = false;
      break;
    }
    const double h = k1[i] / k2[i];
    lo = std::min(lo, h);
    hi = std::max(hi, h);
    sum += h;
  }
  if (!ratio_defined) return out;
  const double mean = sum / static_cast<double>(grid.size());
  out.h_mean = mean;
  out.h_relative_spread = (hi - lo) / std::abs(mean);
  out.helix = *out.h_relative_spread <= opts.helix_tol;
  return out;
}

}  // namespace ruled
