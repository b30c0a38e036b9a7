#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ruled/minkowski.hpp"

namespace ruled {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
  double length() const { return hi - lo; }
};

enum class DerivativeMode { Analytic, FiniteDifference };

/// A C^3 parametric curve t -> R^3_1 on a closed interval. Derivatives are
/// either supplied in closed form or taken by Richardson-extrapolated central
/// differences of the sampler.
class ParamCurve {
 public:
  using Sampler = std::function<Vec3(double)>;

  static ParamCurve analytic(Sampler position, std::array<Sampler, 3> derivatives, Interval domain);
  static ParamCurve finite_difference(Sampler position, Interval domain, double fd_step = 1e-5);

  Vec3 position(double t) const;

  /// order-th derivative, order in {1, 2, 3}. Throws OutOfDomain when t (or,
  /// in finite-difference mode, the stencil around t) leaves the domain.
  Vec3 derive(double t, int order) const;

  /// Finite-difference step used for the given derivative order. Higher orders
  /// take larger steps so that round-off stays below truncation error.
  double step_for_order(int order) const;

  DerivativeMode mode() const { return mode_; }
  const Interval& domain() const { return domain_; }

  /// Sub-interval on which all derivative orders can be evaluated; equals
  /// domain() for analytic curves and is inset by the widest stencil otherwise.
  Interval derivative_domain() const;

 private:
  ParamCurve(Sampler position, std::array<Sampler, 3> derivatives, Interval domain, DerivativeMode mode,
             double fd_step);

  Sampler position_;
  std::array<Sampler, 3> derivatives_;
  Interval domain_;
  DerivativeMode mode_;
  double fd_step_;
};

inline Vec3 derive(const ParamCurve& curve, double t, int order) { return curve.derive(t, order); }

/// Largest relative disagreement between supplied derivatives and
/// Richardson central differences over n interior samples (orders 1..3).
/// Returns 0 for finite-difference curves.
double validate_derivatives(const ParamCurve& curve, std::size_t n = 25, double fd_step = 1e-5);

/// Unit-speed (proper time) view of a timelike ParamCurve. The arc-length
/// table is built eagerly, so every query is read-only.
class ProperTimeCurve {
 public:
  const ParamCurve& parametrization() const { return curve_; }
  const Interval& domain() const { return s_domain_; }

  double s_of_t(double t) const;
  double t_of_s(double s) const;

  Vec3 position(double s) const;

  /// d^order alpha / ds^order for order in {1, 2, 3}, by the chain rule
  /// through the speed of the underlying parametrization.
  Vec3 derivative(double s, int order) const;

  /// First max_order derivatives in s, sharing one parameter inversion.
  std::array<Vec3, 3> jet(double s, int max_order) const;

  /// The same curve as an analytic ParamCurve in the parameter s.
  ParamCurve as_param_curve() const;

 private:
  friend ProperTimeCurve reparametrize_proper_time(ParamCurve curve, double s_start, const Tolerance& tol);

  explicit ProperTimeCurve(ParamCurve curve) : curve_(std::move(curve)) {}

  double speed(double t) const;
  std::size_t segment_of_t(double t) const;

  ParamCurve curve_;
  Interval s_domain_;
  std::vector<double> t_knots_;
  std::vector<double> s_knots_;
};

/// s(t) = s_start + integral of sqrt(-<alpha', alpha'>) from t_min to t.
/// Throws NotTimelike if the tangent is not timelike on the validation grid.
ProperTimeCurve reparametrize_proper_time(ParamCurve curve, double s_start = 0.0, const Tolerance& tol = {});

struct FrenetFrame {
  double s = 0.0;
  Vec3 T;
  Vec3 N;
  Vec3 B;
  double k1 = 0.0;  // curvature, nonnegative
  double k2 = 0.0;  // torsion, signed
};

/// Throws VanishingCurvature when k1 <= tol.zero_tol.
FrenetFrame frenet_apparatus(const ProperTimeCurve& curve, double s, const Tolerance& tol = {});

/// Largest Euclidean norm among T' - k1 N, N' - (k1 T + k2 B) and B' + k2 N,
/// with the primes taken by finite differences of the frame fields.
double frenet_residual(const ProperTimeCurve& curve, double s, const Tolerance& tol = {});

struct ClassifyOptions {
  double planar_tol = 1e-9;
  double helix_tol = 1e-6;
};

struct CurveClass {
  bool planar = false;
  bool helix = false;
  std::optional<double> h_mean;             // mean of k1/k2; empty when planar
  std::optional<double> h_relative_spread;  // (max - min) / |mean| of k1/k2
  double k1_min = 0.0, k1_max = 0.0;
  double k2_min = 0.0, k2_max = 0.0;
};

CurveClass classify_curve(const ProperTimeCurve& curve, std::span<const double> grid,
                          const ClassifyOptions& opts = {}, const Tolerance& tol = {});

using CurvePtr = std::shared_ptr<const ProperTimeCurve>;

}  // namespace ruled
