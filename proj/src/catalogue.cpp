#include "ruled/catalogue.hpp"

#include <cmath>
#include <sstream>

#include "ruled/errors.hpp"

namespace ruled::catalogue {

namespace {

[[noreturn]] void not_timelike(const char* kind, const char* condition, double a, double b) {
  std::ostringstream os;
  os << kind << " with a = " << a << ", b = " << b << " is not timelike (requires " << condition << ")";
  throw GeometryError(ErrorCode::NotTimelike, os.str());
}

}  // namespace

ParamCurve circular_helix(double a, double b, Interval t_domain) {
  if (!(a >= 0.0 && b > a)) not_timelike("circular helix", "b > a >= 0", a, b);
  return ParamCurve::analytic(
      [a, b](double t) { return Vec3{a * std::cos(t), a * std::sin(t), b * t}; },
      {[a, b](double t) { return Vec3{-a * std::sin(t), a * std::cos(t), b}; },
       [a](double t) { return Vec3{-a * std::cos(t), -a * std::sin(t), 0.0}; },
       [a](double t) { return Vec3{a * std::sin(t), -a * std::cos(t), 0.0}; }},
      t_domain);
}

ParamCurve hyperbolic_helix(double a, double b, Interval t_domain) {
  if (!(b >= 0.0 && a > b)) not_timelike("hyperbolic helix", "a > b >= 0", a, b);
  return ParamCurve::analytic(
      [a, b](double t) { return Vec3{b * t, a * std::cosh(t), a * std::sinh(t)}; },
      {[a, b](double t) { return Vec3{b, a * std::sinh(t), a * std::cosh(t)}; },
       [a](double t) { return Vec3{0.0, a * std::cosh(t), a * std::sinh(t)}; },
       [a](double t) { return Vec3{0.0, a * std::sinh(t), a * std::cosh(t)}; }},
      t_domain);
}

ParamCurve timelike_line(double a, double b, Interval t_domain) {
  if (!(b > std::abs(a))) not_timelike("line", "b > |a|", a, b);
  return ParamCurve::analytic([a, b](double t) { return Vec3{a * t, 0.0, b * t}; },
                              {[a, b](double) { return Vec3{a, 0.0, b}; }, [](double) { return Vec3{}; },
                               [](double) { return Vec3{}; }},
                              t_domain);
}

ParamCurve planar_hyperbola(double a, Interval t_domain) {
  if (!(a > 0.0)) not_timelike("planar hyperbola", "a > 0", a, 0.0);
  return ParamCurve::analytic(
      [a](double t) { return Vec3{0.0, a * std::cosh(t), a * std::sinh(t)}; },
      {[a](double t) { return Vec3{0.0, a * std::sinh(t), a * std::cosh(t)}; },
       [a](double t) { return Vec3{0.0, a * std::cosh(t), a * std::sinh(t)}; },
       [a](double t) { return Vec3{0.0, a * std::sinh(t), a * std::cosh(t)}; }},
      t_domain);
}

ParamCurve variable_pitch_helix(double a, double b, double c, Interval t_domain) {
  for (double t : {t_domain.lo, t_domain.hi}) {
    if (!(std::abs(b + c * t) > a)) not_timelike("variable-pitch helix", "|b + c t| > a on the domain", a, b);
  }
  return ParamCurve::analytic(
      [a, b, c](double t) { return Vec3{a * std::cos(t), a * std::sin(t), b * t + 0.5 * c * t * t}; },
      {[a, b, c](double t) { return Vec3{-a * std::sin(t), a * std::cos(t), b + c * t}; },
       [a, c](double t) { return Vec3{-a * std::cos(t), -a * std::sin(t), c}; },
       [a](double t) { return Vec3{a * std::sin(t), -a * std::cos(t), 0.0}; }},
      t_domain);
}

}  // namespace ruled::catalogue
