#pragma once

// Quadrature, differentiation and root-finding shared by the curve and
// surface modules. Header-only because every routine is templated on the
// integrand/value type (double or Vec3).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ruled/minkowski.hpp"

namespace ruled::numerics {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Vec3& v) { return euclid_norm(v); }

namespace detail {

template <class F, class V>
V simpson_step(const F& f, double a, double b, const V& fa, const V& fm, const V& fb, const V& whole,
               double tol, int depth, int min_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const V flm = f(lm);
  const V frm = f(rm);
  const V left = ((m - a) / 6.0) * (fa + 4.0 * flm + fm);
  const V right = ((b - m) / 6.0) * (fm + 4.0 * frm + fb);
  const V delta = left + right - whole;
  if (depth <= 0 || (min_depth <= 0 && magnitude(delta) <= 15.0 * tol)) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, min_depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, min_depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with Richardson correction of each accepted
/// panel. `tol` is an absolute tolerance on the Euclidean magnitude of the
/// result.
template <class F>
auto adaptive_simpson(const F& f, double a, double b, double tol, int max_depth = 40, int min_depth = 2) {
  using V = decltype(f(a));
  if (a == b) return V{} * 0.0;
  const double m = 0.5 * (a + b);
  const V fa = f(a);
  const V fm = f(m);
  const V fb = f(b);
  const V whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth, min_depth);
}

/// Second-order central difference of the given order (1..3) with step h.
template <class F>
auto central_difference(const F& f, double x, double h, int order) {
  switch (order) {
    case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3: return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h);
    default: throw std::invalid_argument("central_difference: order must be 1, 2 or 3");
  }
}

/// Distance from x to the farthest stencil point of central_difference.
constexpr double stencil_reach(double h, int order) { return order == 3 ? 2.0 * h : h; }

/// Central difference at steps h and h/2 combined by one Richardson step;
/// the leading h^2 error term cancels.
template <class F>
auto richardson_derivative(const F& f, double x, double h, int order) {
  const auto coarse = central_difference(f, x, h, order);
  const auto fine = central_difference(f, x, 0.5 * h, order);
  return (4.0 * fine - coarse) / 3.0;
}

struct RootResult {
  double x;
  int iterations;
  bool converged;
};

/// Newton iteration kept inside the bracket [lo, hi]; falls back to bisection
/// whenever a Newton step would leave it. Requires g(lo) <= 0 <= g(hi) for an
/// increasing g.
template <class G, class DG>
RootResult bracketed_newton(const G& g, const DG& dg, double lo, double hi, double x0, double xtol,
                            int max_iter = 100) {
  double x = x0;
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int it = 1; it <= max_iter; ++it) {
    const double gx = g(x);
    if (gx == 0.0) return {x, it, true};
    if (gx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = dg(x);
    double next = (d > 0.0) ? x - gx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= xtol * std::max(1.0, std::abs(x)) || hi - lo <= xtol) {
      return {next, it, true};
    }
    x = next;
  }
  return {x, max_iter, false};
}

inline std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  if (n < 2) throw std::invalid_argument("uniform_grid needs at least two points");
  std::vector<double> g(n);
  const double step = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + step * static_cast<double>(i);
  g.back() = b;
  return g;
}

}  // namespace ruled::numerics
