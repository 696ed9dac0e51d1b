#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supercon {

enum class ErrorCode {
  DimensionMismatch,
  NotNormalized,
  WeightsNotNormalized,
  ZeroVector,
  NotHermitian,
  NotUnitary,
  NotTwoQubit,
  OutOfRange,
  RegimeViolation,
  DegenerateWeight,
  DeltaOutOfRange,
  SanityFailure,
  InvalidSplit,
  UnknownFixture,
  InternalError,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error kind. The message names the
/// invariant that failed and, where relevant, the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace supercon
