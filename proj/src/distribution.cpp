#include "ruled/distribution.hpp"

#include <cmath>
#include <sstream>

namespace ruled {

std::string_view to_string(DenominatorConvention c) {
  switch (c) {
    case DenominatorConvention::PaperExpanded: return "paper";
    case DenominatorConvention::Lorentzian: return "lorentzian";
  }
  return "unknown";
}

std::string_view to_string(HelixVariant v) {
  switch (v) {
    case HelixVariant::AlphaGeneral: return "AlphaGeneral";
    case HelixVariant::RectifyingAlpha: return "RectifyingAlpha";
    case HelixVariant::BetaN: return "BetaN";
    case HelixVariant::BetaB: return "BetaB";
  }
  return "Unknown";
}

double closed_form_numerator(const FrameVector& l, const FrameVector& x, double k1, double k2) {
  const double x1 = x.t, x2 = x.n, x3 = x.b;
  return l.t * ((x2 * x2 + x3 * x3) * k2 - x1 * x3 * k1) - l.n * (x1 * x2 * k2 - x2 * x3 * k1) +
         l.b * ((x1 * x1 - x2 * x2) * k1 - x1 * x3 * k2);
}

double closed_form_denominator(const FrameVector& x, double k1, double k2, DenominatorConvention conv) {
  const double a = x.n * k1;
  const double mid = x.t * k1 - x.b * k2;
  const double c = x.n * k2;
  const double head = conv == DenominatorConvention::PaperExpanded ? a * a : -a * a;
  return head + mid * mid + c * c;
}

double denominator_scale(const FrameVector& x, double k1, double k2) {
  return (x.t * x.t + x.n * x.n + x.b * x.b) * (k1 * k1 + k2 * k2);
}

DistributionReport evaluate_closed_form(const FrameVector& lambda, const FrameVector& x, double k1, double k2,
                                        DenominatorConvention conv, double zero_tol) {
  DistributionReport r;
  r.convention = conv;
  r.numerator = closed_form_numerator(lambda, x, k1, k2);
  r.denominator = closed_form_denominator(x, k1, k2, conv);
  if (std::abs(r.denominator) > zero_tol * denominator_scale(x, k1, k2)) r.value = r.numerator / r.denominator;
  return r;
}

namespace {

[[noreturn]] void undefined_parameter(const DistributionReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "denominator " << r.denominator << " vanishes under the " << to_string(r.convention)
     << " convention at s = " << r.s;
  throw GeometryError(ErrorCode::UndefinedParameter, os.str());
}

}  // namespace

DistributionReport closed_form_P(const FrameVector& lambda, const FrameCoefficients& x, double k1, double k2,
                                 DenominatorConvention conv, double zero_tol) {
  DistributionReport r = evaluate_closed_form(lambda, x.vector(), k1, k2, conv, zero_tol);
  if (!r.value) undefined_parameter(r);
  return r;
}

DistributionReport evaluate_oracle(const RuledSurface& surface, double s, DenominatorConvention conv,
                                   const Tolerance& tol) {
  const double h = tol.fd_step;
  const Interval& d = surface.domain();
  if (s - h < d.lo || s + h > d.hi) {
    std::ostringstream os;
    os.precision(17);
    os << "oracle stencil at s = " << s << " leaves [" << d.lo << ", " << d.hi << "]";
    throw GeometryError(ErrorCode::OutOfDomain, os.str());
  }
  const auto X = [&](double u) { return surface.director_at(surface.frame(u, tol)); };
  const Vec3 coarse = (X(s + h) - X(s - h)) / (2.0 * h);
  const Vec3 fine = (X(s + 0.5 * h) - X(s - 0.5 * h)) / h;
  const Vec3 dX = (4.0 * fine - coarse) / 3.0;

  const FrenetFrame f = surface.frame(s, tol);
  const Vec3 base_prime = surface.base_derivative(f);

  DistributionReport r;
  r.s = s;
  r.convention = conv;
  r.numerator = det3(base_prime, surface.director_at(f), dX);
  if (conv == DenominatorConvention::Lorentzian) {
    r.denominator = inner(dX, dX);
  } else {
    const FrameVector c = to_frame(f, dX);
    r.denominator = c.t * c.t + c.n * c.n + c.b * c.b;
  }
  if (std::abs(r.denominator) > tol.zero_tol * denominator_scale(surface.director().vector(), f.k1, f.k2)) {
    r.value = r.numerator / r.denominator;
  }
  return r;
}

DistributionReport distribution_parameter_oracle(const RuledSurface& surface, double s, DenominatorConvention conv,
                                                 const Tolerance& tol) {
  DistributionReport r = evaluate_oracle(surface, s, conv, tol);
  if (!r.value) undefined_parameter(r);
  return r;
}

double helix_condition(const FrameCoefficients& x, double h, HelixVariant variant, double tol) {
  const double x1 = x.x1(), x2 = x.x2(), x3 = x.x3();
  double num = 0.0;
  double den = 0.0;
  switch (variant) {
    case HelixVariant::AlphaGeneral:
      num = x2 * x2 + x3 * x3;
      den = x1 * x3;
      break;
    case HelixVariant::RectifyingAlpha:
      num = x3;
      den = x1;
      break;
    case HelixVariant::BetaN:
      num = x1;
      den = x3;
      break;
    case HelixVariant::BetaB:
      num = x1 * x3;
      den = x1 * x1 - x2 * x2;
      break;
  }
  if (std::abs(den) <= tol) {
    throw GeometryError(ErrorCode::DegenerateRatio,
                        std::string(to_string(variant)) + ": target ratio has a vanishing denominator");
  }
  return h - num / den;
}

double striction_linear_form(const FrameVector& l, const FrameVector& x, double k1, double k2) {
  return -l.t * x.n * k1 + l.n * (x.t * k1 - x.b * k2) + l.b * x.n * k2;
}

StrictionOffset striction_offset_at(const RuledSurface& surface, const FrenetFrame& frame, const Tolerance& tol) {
  StrictionOffset out;
  const Vec3 dX = surface.director_derivative_at(frame);
  const double norm_dx = euclid_norm(dX);
  if (norm_dx <= tol.zero_tol) {
    out.failure = ErrorCode::CylinderStriction;
    return out;
  }
  const double xx = inner(dX, dX);
  if (std::abs(xx) <= tol.zero_tol * norm_dx * norm_dx) {
    out.failure = ErrorCode::NullRulingDerivative;
    return out;
  }
  const Vec3 bp = surface.base_derivative(frame);
  const double bx = inner(bp, dX);
  out.offset = bx / xx;
  out.coincides_with_base = std::abs(bx) <= tol.zero_tol * euclid_norm(bp) * norm_dx;
  return out;
}

StrictionPoint striction_point(const RuledSurface& surface, double s, const Tolerance& tol) {
  const FrenetFrame f = surface.frame(s, tol);
  const StrictionOffset o = striction_offset_at(surface, f, tol);
  if (o.failure) {
    std::ostringstream os;
    os.precision(17);
    if (*o.failure == ErrorCode::CylinderStriction) {
      os << "X' vanishes at s = " << s << "; the surface is a cylinder and has no striction curve";
    } else {
      os << "X' is a null vector at s = " << s;
    }
    throw GeometryError(*o.failure, os.str());
  }
  StrictionPoint p;
  p.s = s;
  p.offset = *o.offset;
  p.coincides_with_base = o.coincides_with_base;
  p.point = surface.base_point(s) - p.offset * surface.director_at(f);
  return p;
}

}  // namespace ruled
