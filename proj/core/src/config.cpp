#include "diagthue/config.hpp"

#include <cstdlib>
#include <string>

#include "diagthue/error.hpp"

namespace diagthue {

namespace {

std::optional<std::uint64_t> read_positive(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(name);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidInput,
                std::string(name) + " must be a positive integer, got \"" + raw + "\"");
  }
}

}  // namespace

PrecisionPolicy PrecisionPolicy::from_environment() {
  PrecisionPolicy policy;
  if (auto bits = read_positive("DIAGTHUE_MAX_PRECISION")) {
    policy.max_bits = static_cast<mpfr_prec_t>(*bits);
    if (policy.max_bits < policy.start_bits) policy.start_bits = policy.max_bits;
  }
  return policy;
}

std::uint64_t digit_budget_from_environment() {
  return read_positive("DIAGTHUE_DIGIT_BUDGET").value_or(1'000'000);
}

}  // namespace diagthue
