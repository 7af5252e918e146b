#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weavekh {

enum class ErrorCode {
  kVariableMismatch,
  kNonExactDivision,
  kOddExponent,
  kZeroWithNegativeExponent,
  kTooManyCrossings,
  kFractionalExponent,
  kNegativeRank,
  kEmptyLine,
  kDegenerateFit,
  kInvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kVariableMismatch: return "VARIABLE_MISMATCH";
    case ErrorCode::kNonExactDivision: return "NON_EXACT_DIVISION";
    case ErrorCode::kOddExponent: return "ODD_EXPONENT";
    case ErrorCode::kZeroWithNegativeExponent: return "ZERO_WITH_NEGATIVE_EXPONENT";
    case ErrorCode::kTooManyCrossings: return "TOO_MANY_CROSSINGS";
    case ErrorCode::kFractionalExponent: return "FRACTIONAL_EXPONENT";
    case ErrorCode::kNegativeRank: return "NEGATIVE_RANK";
    case ErrorCode::kEmptyLine: return "EMPTY_LINE";
    case ErrorCode::kDegenerateFit: return "DEGENERATE_FIT";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Every contract violation in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weavekh
