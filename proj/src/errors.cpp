#include "ruled/errors.hpp"

namespace ruled {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullOrZeroVector: return "NullOrZeroVector";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotTimelike: return "NotTimelike";
    case ErrorCode::VanishingCurvature: return "VanishingCurvature";
    case ErrorCode::CausalConstraintViolation: return "CausalConstraintViolation";
    case ErrorCode::NullDirector: return "NullDirector";
    case ErrorCode::NullCompanion: return "NullCompanion";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::UndefinedParameter: return "UndefinedParameter";
    case ErrorCode::DegenerateRatio: return "DegenerateRatio";
    case ErrorCode::CylinderStriction: return "CylinderStriction";
    case ErrorCode::NullRulingDerivative: return "NullRulingDerivative";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotTimelike:
    case ErrorCode::CausalConstraintViolation:
    case ErrorCode::NullDirector:
    case ErrorCode::NullCompanion:
    case ErrorCode::ConfigInvalid:
      return true;
    default:
      return false;
  }
}

}  // namespace ruled
