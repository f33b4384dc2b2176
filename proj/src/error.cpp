#include "pps/error.hpp"

namespace pps {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NumericalOverflow: return "NumericalOverflow";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::MaskViolation: return "MaskViolation";
    case ErrorCode::ExistenceViolated: return "ExistenceViolated";
    case ErrorCode::IntegrationFailed: return "IntegrationFailed";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::UnmappedSpecies: return "UnmappedSpecies";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::ConstantColumn: return "ConstantColumn";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NumericalOverflow:
    case ErrorCode::StepUnderflow:
    case ErrorCode::StepBudgetExceeded:
    case ErrorCode::IntegrationFailed:
    case ErrorCode::NonFiniteLoss:
      return true;
    default:
      return false;
  }
}

}  // namespace pps
