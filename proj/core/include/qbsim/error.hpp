#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbsim {

enum class ErrorCode {
  NonHermitian,
  ConvergenceFailure,
  DimensionMismatch,
  DimensionGuard,
  InvalidParams,
  InvalidState,
  PreconditionB,
  RegimeError,
  NotDefined,
  NoThreshold,
  UnknownFigure,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qbsim
