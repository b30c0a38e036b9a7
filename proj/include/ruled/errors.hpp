#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ruled {

enum class ErrorCode {
  NullOrZeroVector,
  OutOfDomain,
  NotTimelike,
  VanishingCurvature,
  CausalConstraintViolation,
  NullDirector,
  NullCompanion,
  SingularPoint,
  UndefinedParameter,
  DegenerateRatio,
  CylinderStriction,
  NullRulingDerivative,
  ConfigInvalid,
};

std::string_view to_string(ErrorCode code);

/// Validation failures reject the input; the rest are numeric degeneracies
/// discovered while evaluating otherwise valid input.
bool is_validation_error(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ruled
