#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "diagthue/ball.hpp"
#include "diagthue/rational.hpp"

namespace diagthue {

enum class Ordering { kLess = -1, kEqual = 0, kGreater = 1 };

std::string_view to_string(Ordering ordering);

struct PowerFactor {
  Rational base;      // > 0
  Rational exponent;
};

// An exact positive real  prod base_i ^ exponent_i  with rational exponents.
class PowerProduct {
 public:
  PowerProduct() = default;
  PowerProduct(std::initializer_list<PowerFactor> factors);

  static PowerProduct of(const Rational& base, const Rational& exponent = 1);

  const std::vector<PowerFactor>& factors() const { return factors_; }

  PowerProduct& multiply(const Rational& base, const Rational& exponent = 1);
  PowerProduct& operator*=(const PowerProduct& other);
  // Raises the whole product to `exponent`.
  PowerProduct pow(const Rational& exponent) const;
  PowerProduct inverse() const { return pow(Rational(-1)); }

  // Merges equal bases and drops factors that are identically 1.
  PowerProduct normalized() const;

  // Exact exponent of `base` after normalization (0 when absent).
  Rational exponent_of(const Rational& base) const;

  RealBall log(mpfr_prec_t precision) const;
  RealBall log10(mpfr_prec_t precision) const;
  RealBall value(mpfr_prec_t precision) const;

  std::string to_string() const;

 private:
  std::vector<PowerFactor> factors_;
};

struct CompareOptions {
  std::uint64_t digit_budget = 1'000'000;
  bool use_log_fast_path = true;
  mpfr_prec_t log_precision = 256;
};

// Exact three-way comparison. The certified log fast path may answer only when
// its enclosure of log(lhs/rhs) excludes zero; otherwise both sides are raised
// to the lcm of the exponent denominators and compared as exact integers.
// Throws kDigitBudgetExceeded when that would exceed options.digit_budget.
Ordering compare_power_product(const PowerProduct& lhs, const PowerProduct& rhs,
                               const CompareOptions& options = {});

// The two routes on their own.
std::optional<Ordering> compare_by_logs(const PowerProduct& lhs, const PowerProduct& rhs,
                                        mpfr_prec_t precision);
Ordering compare_exact(const PowerProduct& lhs, const PowerProduct& rhs,
                       std::uint64_t digit_budget);

}  // namespace diagthue
