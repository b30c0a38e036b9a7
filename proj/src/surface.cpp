#include "ruled/surface.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ruled/errors.hpp"

namespace ruled {

RuledSurface RuledSurface::over_base(CurvePtr alpha, FrameCoefficients director) {
  if (!alpha) throw std::invalid_argument("RuledSurface: null base curve");
  return RuledSurface(std::move(alpha), nullptr, director);
}

RuledSurface RuledSurface::over_companion(CompanionPtr beta, FrameCoefficients director) {
  if (!beta) throw std::invalid_argument("RuledSurface: null companion curve");
  CurvePtr alpha = beta->base_ptr();
  return RuledSurface(std::move(alpha), std::move(beta), director);
}

FrameVector RuledSurface::base_lambda() const { return beta_ ? beta_->spec().lambda : FrameVector{1.0, 0.0, 0.0}; }

Vec3 RuledSurface::base_point(double s) const { return beta_ ? beta_->position(s) : alpha_->position(s); }

Vec3 RuledSurface::director_derivative_at(const FrenetFrame& frame) const {
  return to_ambient(frame, director_derivative_closed(director_, frame.k1, frame.k2));
}

Vec3 surface_point(const RuledSurface& surface, double s, double v, const Tolerance& tol) {
  const FrenetFrame f = surface.frame(s, tol);
  return surface.base_point(s) + v * surface.director_at(f);
}

std::string_view to_string(SurfaceCausalType t) {
  switch (t) {
    case SurfaceCausalType::Timelike: return "Timelike";
    case SurfaceCausalType::Spacelike: return "Spacelike";
    case SurfaceCausalType::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

SurfaceCausalType surface_causal_type(const RuledSurface& surface, double s, double v, const Tolerance& tol) {
  const FrenetFrame f = surface.frame(s, tol);
  const Vec3 phi_v = surface.director_at(f);
  const Vec3 phi_s = surface.base_derivative(f) + v * surface.director_derivative_at(f);

  const double ns = euclid_norm(phi_s);
  const double nv = euclid_norm(phi_v);
  if (euclid_norm(euclid_cross(phi_s, phi_v)) <= tol.zero_tol * ns * nv) {
    std::ostringstream os;
    os.precision(17);
    os << "Phi_s and Phi_v are parallel at (s, v) = (" << s << ", " << v << ")";
    throw GeometryError(ErrorCode::SingularPoint, os.str());
  }
  const double e = inner(phi_s, phi_s);
  const double fm = inner(phi_s, phi_v);
  const double g = inner(phi_v, phi_v);
  const double det = e * g - fm * fm;
  const double scale = ns * ns * nv * nv;
  if (std::abs(det) <= tol.zero_tol * scale) return SurfaceCausalType::Degenerate;
  return det < 0.0 ? SurfaceCausalType::Timelike : SurfaceCausalType::Spacelike;
}

}  // namespace ruled
