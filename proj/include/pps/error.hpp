#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pps {

enum class ErrorCode {
  InvalidParams,
  InvalidConfig,
  ParseError,
  NumericalOverflow,
  StepUnderflow,
  StepBudgetExceeded,
  MaskViolation,
  ExistenceViolated,
  IntegrationFailed,
  NonFiniteLoss,
  TooFewSamples,
  NonUniformGrid,
  MissingColumn,
  NonNumericCell,
  UnmappedSpecies,
  EmptyGroup,
  ConstantColumn,
  DimensionMismatch,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Numerical codes map to CLI exit status 2, everything else to 1.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pps
