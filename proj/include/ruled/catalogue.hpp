#pragma once

// Closed-form timelike test curves with analytic derivatives.

#include "ruled/curve.hpp"

namespace ruled::catalogue {

/// (a cos t, a sin t, b t); timelike iff b > a >= 0. Proper-time speed sqrt(b^2 - a^2),
/// k1 = a / (b^2 - a^2), k2 = b / (b^2 - a^2).
ParamCurve circular_helix(double a, double b, Interval t_domain);

/// (b t, a cosh t, a sinh t); timelike iff a > b >= 0. Speed sqrt(a^2 - b^2),
/// k1 = a / (a^2 - b^2), k2 = b / (a^2 - b^2).
ParamCurve hyperbolic_helix(double a, double b, Interval t_domain);

/// (a t, 0, b t); timelike iff b > |a|. Curvature vanishes identically.
ParamCurve timelike_line(double a, double b, Interval t_domain);

/// (0, a cosh t, a sinh t), a > 0: a torsion-free hyperbola in the e2-e3 plane
/// with speed a and k1 = 1 / a.
ParamCurve planar_hyperbola(double a, Interval t_domain);

/// (a cos t, a sin t, b t + c t^2 / 2); timelike where |b + c t| > a. Its
/// curvature ratio k1/k2 varies along t whenever c != 0.
ParamCurve variable_pitch_helix(double a, double b, double c, Interval t_domain);

}  // namespace ruled::catalogue
