#pragma once

#include <cmath>
#include <memory>
#include <random>

#include "ruled/catalogue.hpp"
#include "ruled/curve.hpp"
#include "ruled/director.hpp"
#include "ruled/minkowski.hpp"

namespace testing {

using namespace ruled;

enum class Helix { Circular, Hyperbolic };

// Circular helix (a cos t, a sin t, b t) or hyperbolic helix (b t, a cosh t,
// a sinh t) in proper time s with t = s / c.
struct HelixParams {
  Helix kind = Helix::Circular;
  double a = 1.0;
  double b = 2.0;

  double speed() const { return kind == Helix::Circular ? std::sqrt(b * b - a * a) : std::sqrt(a * a - b * b); }
  double k1() const { return a / (speed() * speed()); }
  double k2() const { return b / (speed() * speed()); }
};

inline HelixParams circular() { return {Helix::Circular, 1.0, 2.0}; }
inline HelixParams hyperbolic() { return {Helix::Hyperbolic, 2.0, 1.0}; }

inline CurvePtr make_curve(const HelixParams& p, double s_min = -3.0, double s_max = 3.0) {
  const double c = p.speed();
  const Interval dom{s_min / c, s_max / c};
  ParamCurve pc = p.kind == Helix::Circular ? catalogue::circular_helix(p.a, p.b, dom)
                                            : catalogue::hyperbolic_helix(p.a, p.b, dom);
  return std::make_shared<const ProperTimeCurve>(reparametrize_proper_time(std::move(pc), s_min));
}

// Hand-derived frame and its s-derivative; shares nothing with the library.
struct ExplicitFrame {
  Vec3 pos, T, N, B, dT, dN, dB;
};

inline ExplicitFrame explicit_frame(const HelixParams& p, double s) {
  const double c = p.speed();
  const double t = s / c;
  const double a = p.a, b = p.b;
  ExplicitFrame f;
  if (p.kind == Helix::Circular) {
    const double co = std::cos(t), si = std::sin(t);
    f.pos = {a * co, a * si, b * t};
    f.T = Vec3{-a * si, a * co, b} / c;
    f.N = {-co, -si, 0.0};
    f.B = Vec3{b * si, -b * co, -a} / c;
    f.dT = Vec3{-a * co, -a * si, 0.0} / (c * c);
    f.dN = Vec3{si, -co, 0.0} / c;
    f.dB = Vec3{b * co, b * si, 0.0} / (c * c);
  } else {
    const double ch = std::cosh(t), sh = std::sinh(t);
    f.pos = {b * t, a * ch, a * sh};
    f.T = Vec3{b, a * sh, a * ch} / c;
    f.N = {0.0, ch, sh};
    f.B = Vec3{-a, -b * sh, -b * ch} / c;
    f.dT = Vec3{0.0, a * ch, a * sh} / (c * c);
    f.dN = Vec3{0.0, sh, ch} / c;
    f.dB = Vec3{0.0, -b * ch, -b * sh} / (c * c);
  }
  return f;
}

inline double lor(const Vec3& u, const Vec3& v) { return u.c1 * v.c1 + u.c2 * v.c2 - u.c3 * v.c3; }

inline double brute_det(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u.c1 * v.c2 * w.c3 + u.c2 * v.c3 * w.c1 + u.c3 * v.c1 * w.c2 - u.c3 * v.c2 * w.c1 -
         u.c2 * v.c1 * w.c3 - u.c1 * v.c3 * w.c2;
}

struct ExplicitP {
  double numerator;
  double paper_den;
  double lorentz_den;
};

// det(beta', X, X') with paper and Lorentzian denominators from the explicit frame.
inline ExplicitP explicit_P(const HelixParams& p, double s, const FrameVector& l, const FrameVector& x) {
  const ExplicitFrame f = explicit_frame(p, s);
  const Vec3 bp = l.t * f.T + l.n * f.N + l.b * f.B;
  const Vec3 X = x.t * f.T + x.n * f.N + x.b * f.B;
  const Vec3 dX = x.t * f.dT + x.n * f.dN + x.b * f.dB;
  const double cT = -lor(dX, f.T), cN = lor(dX, f.N), cB = lor(dX, f.B);
  return {brute_det(bp, X, dX), cT * cT + cN * cN + cB * cB, lor(dX, dX)};
}

// Director with -x1^2 + x2^2 + x3^2 = sign from free (x1, x2) and a random
// split, staying away from the null cone.
inline FrameCoefficients random_director(std::mt19937_64& rng, int sign) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  if (sign > 0) {
    const double x1 = u(rng);
    const double r = std::sqrt(1.0 + x1 * x1);
    const double th = ang(rng);
    return validate_coefficients(x1, r * std::cos(th), r * std::sin(th), 1);
  }
  std::uniform_real_distribution<double> rr(0.0, 1.5);
  const double r = rr(rng);
  const double th = ang(rng);
  const double x1 = std::sqrt(1.0 + r * r) * (u(rng) < 0 ? -1.0 : 1.0);
  return validate_coefficients(x1, r * std::cos(th), r * std::sin(th), -1);
}

inline FrameVector random_lambda(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const FrameVector l{u(rng), u(rng), u(rng)};
    if (std::abs(frame_quadratic(l)) > 0.05) return l;
  }
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace testing
