#pragma once

#include <string_view>

#include "ruled/companion.hpp"
#include "ruled/curve.hpp"
#include "ruled/director.hpp"

namespace ruled {

/// Phi(s, v) = base(s) + v X(s), where X = x1 T + x2 N + x3 B is carried by
/// the Frenet frame of alpha and the base is either alpha itself or a
/// companion curve beta sharing alpha's parameter.
class RuledSurface {
 public:
  static RuledSurface over_base(CurvePtr alpha, FrameCoefficients director);
  static RuledSurface over_companion(CompanionPtr beta, FrameCoefficients director);

  const ProperTimeCurve& frame_source() const { return *alpha_; }
  const CurvePtr& frame_source_ptr() const { return alpha_; }
  const CompanionPtr& companion() const { return beta_; }
  bool companion_based() const { return static_cast<bool>(beta_); }
  const FrameCoefficients& director() const { return director_; }
  const Interval& domain() const { return alpha_->domain(); }

  /// Frame coefficients of base'; (1, 0, 0) when the base is alpha.
  FrameVector base_lambda() const;

  FrenetFrame frame(double s, const Tolerance& tol = {}) const { return frenet_apparatus(*alpha_, s, tol); }
  Vec3 base_point(double s) const;
  Vec3 base_derivative(const FrenetFrame& frame) const { return to_ambient(frame, base_lambda()); }

  Vec3 director_at(const FrenetFrame& frame) const { return director_ambient(frame, director_); }

  /// X' from the closed-form frame expansion, in ambient coordinates.
  Vec3 director_derivative_at(const FrenetFrame& frame) const;

 private:
  RuledSurface(CurvePtr alpha, CompanionPtr beta, FrameCoefficients director)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), director_(director) {}

  CurvePtr alpha_;
  CompanionPtr beta_;
  FrameCoefficients director_;
};

/// Throws OutOfDomain outside the parameter interval.
Vec3 surface_point(const RuledSurface& surface, double s, double v, const Tolerance& tol = {});

enum class SurfaceCausalType { Timelike, Spacelike, Degenerate };

std::string_view to_string(SurfaceCausalType t);

/// Sign of the determinant of the induced first fundamental form. Throws
/// SingularPoint when Phi_s and Phi_v are linearly dependent.
SurfaceCausalType surface_causal_type(const RuledSurface& surface, double s, double v, const Tolerance& tol = {});

}  // namespace ruled
