#pragma once

#include <string_view>

#include "ruled/curve.hpp"
#include "ruled/minkowski.hpp"

namespace ruled {

/// Components of a vector along the Frenet frame {T, N, B}.
struct FrameVector {
  double t = 0.0;
  double n = 0.0;
  double b = 0.0;

  friend constexpr bool operator==(const FrameVector&, const FrameVector&) = default;
};

/// -t^2 + n^2 + b^2: the Lorentzian square of a frame-expressed vector.
constexpr double frame_quadratic(const FrameVector& v) { return -v.t * v.t + v.n * v.n + v.b * v.b; }

/// Component determinant with the three frame vectors as rows.
constexpr double frame_det(const FrameVector& u, const FrameVector& v, const FrameVector& w) {
  return u.t * (v.n * w.b - v.b * w.n) - u.n * (v.t * w.b - v.b * w.t) + u.b * (v.t * w.n - v.n * w.t);
}

Vec3 to_ambient(const FrenetFrame& frame, const FrameVector& v);

/// Projects an ambient vector onto {T, N, B}; the T component carries the
/// sign flip from <T, T> = -1.
FrameVector to_frame(const FrenetFrame& frame, const Vec3& v);

/// Constant director coefficients X = x1 T + x2 N + x3 B with
/// -x1^2 + x2^2 + x3^2 = causal_sign. Only validate_coefficients builds one.
class FrameCoefficients {
 public:
  double x1() const { return x_.t; }
  double x2() const { return x_.n; }
  double x3() const { return x_.b; }
  int causal_sign() const { return sign_; }
  const FrameVector& vector() const { return x_; }

  FrameCoefficients negated() const { return FrameCoefficients({-x_.t, -x_.n, -x_.b}, sign_); }

 private:
  friend FrameCoefficients validate_coefficients(double, double, double, int);
  FrameCoefficients(FrameVector x, int sign) : x_(x), sign_(sign) {}

  FrameVector x_;
  int sign_;
};

inline constexpr double kCausalConstraintTol = 1e-9;

/// Throws NullDirector when the quadratic form vanishes and
/// CausalConstraintViolation when it differs from causal_sign (+1 or -1).
FrameCoefficients validate_coefficients(double x1, double x2, double x3, int causal_sign);

enum class PlaneClass { AxisT, AxisN, AxisB, NormalPlane, OsculatingPlane, RectifyingPlane, General };

std::string_view to_string(PlaneClass c);

/// Axis classes take precedence over plane classes.
PlaneClass classify_case(const FrameCoefficients& x, double tol = 1e-9);

Vec3 director_ambient(const FrenetFrame& frame, const FrameCoefficients& x);

/// X' in frame components: (x2 k1, x1 k1 - x3 k2, x2 k2).
constexpr FrameVector director_derivative_closed(const FrameVector& x, double k1, double k2) {
  return {x.n * k1, x.t * k1 - x.b * k2, x.n * k2};
}

inline FrameVector director_derivative_closed(const FrameCoefficients& x, double k1, double k2) {
  return director_derivative_closed(x.vector(), k1, k2);
}

}  // namespace ruled
