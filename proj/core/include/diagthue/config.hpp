#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>

#include "diagthue/ball.hpp"

namespace diagthue {

// Working-precision bounds for certified evaluations. Evaluations start at
// `start_bits` and double until a sign is certified or `max_bits` is passed.
struct PrecisionPolicy {
  mpfr_prec_t start_bits = 64;
  mpfr_prec_t max_bits = 4096;

  // Reads DIAGTHUE_MAX_PRECISION (default 4096).
  static PrecisionPolicy from_environment();
};

// Reads DIAGTHUE_DIGIT_BUDGET (default 10^6 decimal digits).
std::uint64_t digit_budget_from_environment();

struct CertifiedSign {
  std::optional<int> sign;  // nullopt: undecided at max_bits
  RealBall value;           // enclosure at the last precision tried
  mpfr_prec_t bits;
};

// Evaluates `fn(bits)` at increasing precision until the enclosure excludes 0.
template <class Fn>
CertifiedSign certify_sign(Fn&& fn, const PrecisionPolicy& policy) {
  mpfr_prec_t bits = policy.start_bits;
  for (;;) {
    RealBall value = fn(bits);
    if (auto s = value.sign(); s.has_value() || bits >= policy.max_bits) {
      return CertifiedSign{s, std::move(value), bits};
    }
    bits = std::min<mpfr_prec_t>(bits * 2, policy.max_bits);
  }
}

}  // namespace diagthue
