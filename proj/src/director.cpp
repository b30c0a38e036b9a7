#include "ruled/director.hpp"

#include <cmath>
#include <sstream>

#include "ruled/errors.hpp"

namespace ruled {

Vec3 to_ambient(const FrenetFrame& frame, const FrameVector& v) { return v.t * frame.T + v.n * frame.N + v.b * frame.B; }

FrameVector to_frame(const FrenetFrame& frame, const Vec3& v) {
  return {-inner(v, frame.T), inner(v, frame.N), inner(v, frame.B)};
}

FrameCoefficients validate_coefficients(double x1, double x2, double x3, int causal_sign) {
  if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3)) {
    throw GeometryError(ErrorCode::CausalConstraintViolation, "director coefficients must be finite");
  }
  if (causal_sign != 1 && causal_sign != -1) {
    throw GeometryError(ErrorCode::CausalConstraintViolation, "causal_sign must be +1 or -1");
  }
  const FrameVector x{x1, x2, x3};
  const double q = frame_quadratic(x);
  std::ostringstream os;
  os.precision(17);
  os << "-x1^2 + x2^2 + x3^2 = " << q;
  if (std::abs(q) <= kCausalConstraintTol) throw GeometryError(ErrorCode::NullDirector, os.str());
  if (std::abs(q - causal_sign) > kCausalConstraintTol) {
    os << ", expected " << causal_sign;
    throw GeometryError(ErrorCode::CausalConstraintViolation, os.str());
  }
  return FrameCoefficients(x, causal_sign);
}

std::string_view to_string(PlaneClass c) {
  switch (c) {
    case PlaneClass::AxisT: return "AxisT";
    case PlaneClass::AxisN: return "AxisN";
    case PlaneClass::AxisB: return "AxisB";
    case PlaneClass::NormalPlane: return "NormalPlane";
    case PlaneClass::OsculatingPlane: return "OsculatingPlane";
    case PlaneClass::RectifyingPlane: return "RectifyingPlane";
    case PlaneClass::General: return "General";
  }
  return "Unknown";
}

PlaneClass classify_case(const FrameCoefficients& x, double tol) {
  const bool z1 = std::abs(x.x1()) <= tol;
  const bool z2 = std::abs(x.x2()) <= tol;
  const bool z3 = std::abs(x.x3()) <= tol;
  if (z2 && z3) return PlaneClass::AxisT;
  if (z1 && z3) return PlaneClass::AxisN;
  if (z1 && z2) return PlaneClass::AxisB;
  if (z1) return PlaneClass::NormalPlane;
  if (z3) return PlaneClass::OsculatingPlane;
  if (z2) return PlaneClass::RectifyingPlane;
  return PlaneClass::General;
}

Vec3 director_ambient(const FrenetFrame& frame, const FrameCoefficients& x) { return to_ambient(frame, x.vector()); }

}  // namespace ruled
