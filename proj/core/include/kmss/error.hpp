#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmss {

enum class ErrorCode {
  NotSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroAsymmetry,
  ParseError,
  InvalidArgument,
  InvalidRepresentation,
  FunctorialityViolation,
  CapExceeded,
  BadPrime,
  NotCollapsed,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::ZeroAsymmetry: return "ZeroAsymmetry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::FunctorialityViolation: return "FunctorialityViolation";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotCollapsed: return "NotCollapsed";
  }
  return "Unknown";
}

// Precondition failures (as opposed to malformed input) are the errors a
// caller can provoke with well-formed data: caps, primes, collapse.
constexpr bool is_precondition_failure(ErrorCode code) {
  return code == ErrorCode::CapExceeded || code == ErrorCode::BadPrime ||
         code == ErrorCode::NotCollapsed;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace kmss
