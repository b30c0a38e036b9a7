#pragma once

#include <optional>
#include <string_view>

#include "ruled/director.hpp"
#include "ruled/errors.hpp"
#include "ruled/surface.hpp"

namespace ruled {

/// How <X', X'> is expanded in the denominator of the distribution parameter.
///   PaperExpanded: x2^2 k1^2 + (x1 k1 - x3 k2)^2 + x2^2 k2^2 (Euclidean square
///                  of the frame components of X')
///   Lorentzian:    -x2^2 k1^2 + (x1 k1 - x3 k2)^2 + x2^2 k2^2
/// Both share the numerator, so their zero sets coincide.
enum class DenominatorConvention { PaperExpanded, Lorentzian };

std::string_view to_string(DenominatorConvention c);

struct DistributionReport {
  double s = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  std::optional<double> value;  // empty when the denominator vanishes
  DenominatorConvention convention = DenominatorConvention::PaperExpanded;
};

/// det(base', X, X') in frame components:
///   l1((x2^2 + x3^2) k2 - x1 x3 k1) - l2(x1 x2 k2 - x2 x3 k1) + l3((x1^2 - x2^2) k1 - x1 x3 k2)
double closed_form_numerator(const FrameVector& lambda, const FrameVector& x, double k1, double k2);

double closed_form_denominator(const FrameVector& x, double k1, double k2, DenominatorConvention conv);

/// Denominators at or below zero_tol times this scale count as vanishing.
double denominator_scale(const FrameVector& x, double k1, double k2);

/// Non-throwing evaluation; value is empty when undefined.
DistributionReport evaluate_closed_form(const FrameVector& lambda, const FrameVector& x, double k1, double k2,
                                        DenominatorConvention conv, double zero_tol = 1e-9);

/// Throws UndefinedParameter when the denominator vanishes (cylinders, and
/// null X' under the Lorentzian convention).
DistributionReport closed_form_P(const FrameVector& lambda, const FrameCoefficients& x, double k1, double k2,
                                 DenominatorConvention conv, double zero_tol = 1e-9);

/// Direct evaluation of det(base', X, X') / <X', X'> from ambient vectors,
/// with X' taken by Richardson central differences of X along s. Shares no
/// code path with the closed forms.
DistributionReport evaluate_oracle(const RuledSurface& surface, double s, DenominatorConvention conv,
                                   const Tolerance& tol = {});

/// Throwing variant of evaluate_oracle.
DistributionReport distribution_parameter_oracle(const RuledSurface& surface, double s, DenominatorConvention conv,
                                                 const Tolerance& tol = {});

enum class HelixVariant { AlphaGeneral, RectifyingAlpha, BetaN, BetaB };

std::string_view to_string(HelixVariant v);

/// h - target ratio, where the ratio is the value of k1/k2 that makes the
/// numerator vanish:
///   AlphaGeneral    (x2^2 + x3^2) / (x1 x3)   base' = T
///   RectifyingAlpha x3 / x1                   base' = T, x2 = 0
///   BetaN           x1 / x3                   base' = N
///   BetaB           x1 x3 / (x1^2 - x2^2)     base' = B
/// Throws DegenerateRatio when the ratio's denominator vanishes.
double helix_condition(const FrameCoefficients& x, double h, HelixVariant variant, double tol = 1e-12);

/// <base', X'> written in frame components: -l1 x2 k1 + l2 (x1 k1 - x3 k2) + l3 x2 k2.
double striction_linear_form(const FrameVector& lambda, const FrameVector& x, double k1, double k2);

struct StrictionPoint {
  double s = 0.0;
  Vec3 point;
  double offset = 0.0;  // <base', X'> / <X', X'>, Lorentzian
  bool coincides_with_base = false;
};

/// Offset alone, from a frame already evaluated at s. Empty on failure, with
/// the reason in `failure`.
struct StrictionOffset {
  std::optional<double> offset;
  bool coincides_with_base = false;
  std::optional<ErrorCode> failure;
};

StrictionOffset striction_offset_at(const RuledSurface& surface, const FrenetFrame& frame, const Tolerance& tol = {});

/// point = base(s) - offset X(s). Throws CylinderStriction when X' vanishes
/// and NullRulingDerivative when X' is a nonzero null vector.
StrictionPoint striction_point(const RuledSurface& surface, double s, const Tolerance& tol = {});

}  // namespace ruled
