#include "diagthue/power_product.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "diagthue/error.hpp"

namespace diagthue {

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::kLess: return "LESS";
    case Ordering::kEqual: return "EQUAL";
    case Ordering::kGreater: return "GREATER";
  }
  return "?";
}

namespace {

void require_positive(const Rational& base) {
  if (base <= 0) {
    throw Error(ErrorCode::kInvalidInput,
                "power product base must be positive, got " + to_string(base));
  }
}

struct RationalLess {
  bool operator()(const Rational& x, const Rational& y) const { return cmp(x, y) < 0; }
};

}  // namespace

PowerProduct::PowerProduct(std::initializer_list<PowerFactor> factors) {
  for (const auto& f : factors) multiply(f.base, f.exponent);
}

PowerProduct PowerProduct::of(const Rational& base, const Rational& exponent) {
  PowerProduct out;
  out.multiply(base, exponent);
  return out;
}

PowerProduct& PowerProduct::multiply(const Rational& base, const Rational& exponent) {
  require_positive(base);
  factors_.push_back({base, exponent});
  return *this;
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

PowerProduct PowerProduct::pow(const Rational& exponent) const {
  PowerProduct out;
  for (const auto& f : factors_) out.factors_.push_back({f.base, f.exponent * exponent});
  return out;
}

PowerProduct PowerProduct::normalized() const {
  std::map<Rational, Rational, RationalLess> merged;
  for (const auto& f : factors_) {
    if (f.base == 1 || f.exponent == 0) continue;
    // b^e with b < 1 is stored as (1/b)^(-e) so that equal factors merge.
    if (f.base < 1) {
      merged[Rational(1) / f.base] -= f.exponent;
    } else {
      merged[f.base] += f.exponent;
    }
  }
  PowerProduct out;
  for (auto& [base, exponent] : merged) {
    if (exponent != 0) out.factors_.push_back({base, exponent});
  }
  return out;
}

Rational PowerProduct::exponent_of(const Rational& base) const {
  for (const auto& f : normalized().factors_) {
    if (f.base == base) return f.exponent;
  }
  return 0;
}

RealBall PowerProduct::log(mpfr_prec_t precision) const {
  RealBall acc(Rational(0), precision);
  for (const auto& f : factors_) {
    if (f.base == 1 || f.exponent == 0) continue;
    acc = acc + RealBall(f.base, precision).log() * RealBall(f.exponent, precision);
  }
  return acc;
}

RealBall PowerProduct::log10(mpfr_prec_t precision) const {
  return log(precision) / RealBall(Rational(10), precision).log();
}

RealBall PowerProduct::value(mpfr_prec_t precision) const { return log(precision).exp(); }

std::string PowerProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " * ";
    out += "(" + diagthue::to_string(f.base) + ")^(" + diagthue::to_string(f.exponent) + ")";
  }
  return out;
}

std::optional<Ordering> compare_by_logs(const PowerProduct& lhs, const PowerProduct& rhs,
                                        mpfr_prec_t precision) {
  const RealBall diff = lhs.log(precision) - rhs.log(precision);
  if (auto s = diff.sign()) return *s > 0 ? Ordering::kGreater : Ordering::kLess;
  return std::nullopt;
}

Ordering compare_exact(const PowerProduct& lhs, const PowerProduct& rhs,
                       std::uint64_t digit_budget) {
  PowerProduct quotient = lhs;
  quotient *= rhs.inverse();
  const PowerProduct q = quotient.normalized();
  if (q.factors().empty()) return Ordering::kEqual;

  Integer scale = 1;
  for (const auto& f : q.factors()) scale = lcm(scale, f.exponent.get_den());

  // Digit estimate of the two integers compared below.
  double digits = 0;
  for (const auto& f : q.factors()) {
    const Integer e = abs(Integer(f.exponent.get_num() * (scale / f.exponent.get_den())));
    const double base_digits =
        static_cast<double>(mpz_sizeinbase(f.base.get_num().get_mpz_t(), 10) +
                            mpz_sizeinbase(f.base.get_den().get_mpz_t(), 10));
    digits += e.get_d() * base_digits;
  }
  if (!(digits <= static_cast<double>(digit_budget))) {
    throw Error(ErrorCode::kDigitBudgetExceeded,
                "exact power comparison needs about " + std::to_string(std::llround(digits)) +
                    " digits; budget is " + std::to_string(digit_budget));
  }

  // prod (p/q)^n  vs 1  <=>  prod_{n>0} p^n * prod_{n<0} q^|n|  vs
  //                           prod_{n>0} q^n * prod_{n<0} p^|n|
  Integer left = 1, right = 1;
  for (const auto& f : q.factors()) {
    const Integer n = f.exponent.get_num() * (scale / f.exponent.get_den());
    const unsigned long e = abs(n).get_ui();
    const Integer p = pow(f.base.get_num(), e);
    const Integer d = pow(f.base.get_den(), e);
    if (n > 0) {
      left *= p;
      right *= d;
    } else {
      left *= d;
      right *= p;
    }
  }
  const int c = cmp(left, right);
  return c < 0 ? Ordering::kLess : (c > 0 ? Ordering::kGreater : Ordering::kEqual);
}

Ordering compare_power_product(const PowerProduct& lhs, const PowerProduct& rhs,
                               const CompareOptions& options) {
  if (options.use_log_fast_path) {
    if (auto fast = compare_by_logs(lhs, rhs, options.log_precision)) return *fast;
  }
  return compare_exact(lhs, rhs, options.digit_budget);
}

}  // namespace diagthue
