#include "ruled/minkowski.hpp"

#include <stdexcept>

#include "ruled/errors.hpp"

namespace ruled {

std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "Spacelike";
    case CausalCharacter::Timelike: return "Timelike";
    case CausalCharacter::Null: return "Null";
    case CausalCharacter::Zero: return "Zero";
  }
  return "Unknown";
}

void Tolerance::validate() const {
  if (!(fd_step > 0.0 && fd_step < 1e-2)) throw std::invalid_argument("fd_step must lie in (0, 1e-2)");
  if (!(zero_tol > 0.0 && zero_tol < 1e-3)) throw std::invalid_argument("zero_tol must lie in (0, 1e-3)");
}

CausalCharacter causal_character(const Vec3& u, const Tolerance& tol) {
  const double e2 = euclid_dot(u, u);
  if (std::sqrt(e2) <= tol.zero_tol) return CausalCharacter::Zero;
  const double q = inner(u, u);
  if (std::abs(q) <= tol.zero_tol * e2) return CausalCharacter::Null;
  return q < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

std::pair<Vec3, CausalCharacter> normalize(const Vec3& u, const Tolerance& tol) {
  const CausalCharacter c = causal_character(u, tol);
  if (c == CausalCharacter::Null || c == CausalCharacter::Zero) {
    throw GeometryError(ErrorCode::NullOrZeroVector,
                        "cannot normalize a " + std::string(to_string(c)) + " vector");
  }
  return {u / std::sqrt(std::abs(inner(u, u))), c};
}

}  // namespace ruled
