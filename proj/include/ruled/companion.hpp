#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ruled/curve.hpp"
#include "ruled/director.hpp"
#include "ruled/minkowski.hpp"

namespace ruled {

/// beta' = lambda1 T + lambda2 N + lambda3 B in the frame of the base curve,
/// with constant lambda. The parameter of beta is the arc length of alpha.
struct CompanionSpec {
  FrameVector lambda{1.0, 0.0, 0.0};
  std::optional<Vec3> start_point;  // beta(s_min); defaults to alpha(s_min)
};

/// Character of beta' (constant in s). Throws NullCompanion when
/// -l1^2 + l2^2 + l3^2 vanishes to tol.
CausalCharacter companion_causal_character(const CompanionSpec& spec, double tol = 1e-9);

class CompanionCurve {
 public:
  const ProperTimeCurve& base() const { return *base_; }
  const CurvePtr& base_ptr() const { return base_; }
  const CompanionSpec& spec() const { return spec_; }
  const Interval& domain() const { return base_->domain(); }
  const std::vector<double>& knots() const { return knots_; }

  Vec3 position(double s) const;

  /// beta'(s) assembled from the base frame at s.
  Vec3 derivative(double s) const;

 private:
  friend CompanionCurve integrate_companion(CurvePtr, CompanionSpec, std::span<const double>, const Tolerance&);

  CompanionCurve(CurvePtr base, CompanionSpec spec, Tolerance tol)
      : base_(std::move(base)), spec_(spec), tol_(tol) {}

  double segment_tol() const;

  CurvePtr base_;
  CompanionSpec spec_;
  Tolerance tol_;
  std::vector<double> knots_;
  std::vector<Vec3> positions_;
};

/// beta(s) = start + integral of beta' from s_min, tabulated at the grid
/// knots (domain ends are always added). Positions between knots integrate
/// from the nearest knot on the left.
CompanionCurve integrate_companion(CurvePtr base, CompanionSpec spec, std::span<const double> grid,
                                   const Tolerance& tol = {});

/// Same with 64 uniform segments over the base domain.
CompanionCurve integrate_companion(CurvePtr base, CompanionSpec spec, const Tolerance& tol = {});

using CompanionPtr = std::shared_ptr<const CompanionCurve>;

}  // namespace ruled
