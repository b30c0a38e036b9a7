#pragma once

#include <cmath>
#include <string_view>
#include <utility>

namespace ruled {

/// Vector of Minkowski 3-space in the ambient basis {e1, e2, e3}; e3 is the
/// timelike axis.
struct Vec3 {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : c1(a), c2(b), c3(c) {}

  constexpr Vec3& operator+=(const Vec3& o) {
    c1 += o.c1;
    c2 += o.c2;
    c3 += o.c3;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    c1 -= o.c1;
    c2 -= o.c2;
    c3 -= o.c3;
    return *this;
  }
  constexpr Vec3& operator*=(double k) {
    c1 *= k;
    c2 *= k;
    c3 *= k;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.c1, -a.c2, -a.c3}; }
  friend constexpr Vec3 operator*(double k, Vec3 a) { return a *= k; }
  friend constexpr Vec3 operator*(Vec3 a, double k) { return a *= k; }
  friend constexpr Vec3 operator/(Vec3 a, double k) { return a *= (1.0 / k); }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  bool is_finite() const { return std::isfinite(c1) && std::isfinite(c2) && std::isfinite(c3); }
};

enum class CausalCharacter { Spacelike, Timelike, Null, Zero };

std::string_view to_string(CausalCharacter c);

/// Numeric thresholds shared by the whole library.
struct Tolerance {
  double zero_tol = 1e-9;  // relative threshold for treating a scalar as zero
  double fd_step = 1e-5;   // base finite-difference step

  /// Throws std::invalid_argument unless 0 < fd_step < 1e-2 and 0 < zero_tol < 1e-3.
  void validate() const;
};

/// Lorentzian inner product u1 v1 + u2 v2 - u3 v3.
constexpr double inner(const Vec3& u, const Vec3& v) { return u.c1 * v.c1 + u.c2 * v.c2 - u.c3 * v.c3; }

constexpr double euclid_dot(const Vec3& u, const Vec3& v) { return u.c1 * v.c1 + u.c2 * v.c2 + u.c3 * v.c3; }

inline double euclid_norm(const Vec3& u) { return std::sqrt(euclid_dot(u, u)); }

/// Plain 3x3 component determinant with u, v, w as rows.
constexpr double det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u.c1 * (v.c2 * w.c3 - v.c3 * w.c2) - u.c2 * (v.c1 * w.c3 - v.c3 * w.c1) +
         u.c3 * (v.c1 * w.c2 - v.c2 * w.c1);
}

/// Lorentzian cross product, fixed by <u x v, w> = det(u, v, w) for every w.
constexpr Vec3 lorentz_cross(const Vec3& u, const Vec3& v) {
  return {u.c2 * v.c3 - u.c3 * v.c2, u.c3 * v.c1 - u.c1 * v.c3, -(u.c1 * v.c2 - u.c2 * v.c1)};
}

/// Euclidean cross product; used only for rank tests.
constexpr Vec3 euclid_cross(const Vec3& u, const Vec3& v) {
  return {u.c2 * v.c3 - u.c3 * v.c2, u.c3 * v.c1 - u.c1 * v.c3, u.c1 * v.c2 - u.c2 * v.c1};
}

CausalCharacter causal_character(const Vec3& u, const Tolerance& tol = {});

/// Scales u to <w,w> = +-1. Throws GeometryError(NullOrZeroVector) for null or
/// zero input.
std::pair<Vec3, CausalCharacter> normalize(const Vec3& u, const Tolerance& tol = {});

}  // namespace ruled
