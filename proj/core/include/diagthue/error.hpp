#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagthue {

enum class ErrorCode {
  kInvalidInput,
  kNotIntegral,
  kDegenerateForm,
  kZeroValue,
  kNotPrimitive,
  kPrecisionExhausted,
  kDigitBudgetExceeded,
  kParameterOutOfRange,
  kSameSolution,
  kWrongClassSize,
  kConditionFailed,
  kBoundExceeded,
};

std::string_view error_code_name(ErrorCode code);

// Every domain failure in the library is reported through this type. The CLI
// maps it to exit status 1 and a structured JSON message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace diagthue
