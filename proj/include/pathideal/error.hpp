#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathideal {

enum class ErrorCode {
  MalformedLine,
  DisconnectedInput,
  CycleDetected,
  DuplicateEdge,
  SelfLoop,
  InvalidVertex,
  InvalidArgument,
  TrimAmbiguous,
  BadFamilyParameters,
  TooLarge,
  ZeroIdeal,
  TooManyGenerators,
  NotEquigenerated,
  NotAnAntichain,
  DivisibilityHypothesisFails,
  NotAPermutation,
  PreconditionViolated,
  BadRange,
  NUnsupported,
  InternalContradiction,
  OracleDisagreement,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this type; `code()` identifies
// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathideal
