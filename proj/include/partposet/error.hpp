#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace partposet {

enum class ErrorCode {
  EmptyInput,
  NegativeValue,
  Overflow,
  LengthMismatch,
  OperatorUndefined,
  NotInPoset,
  TooSmall,
  TooLarge,
  UnknownCheck,
  UnknownAlgorithm,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OperatorUndefined: return "OperatorUndefined";
    case ErrorCode::NotInPoset: return "NotInPoset";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// All library failures are reported through this exception type; `code()`
/// identifies the failure class, `what()` carries a human-readable message
/// prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace partposet
