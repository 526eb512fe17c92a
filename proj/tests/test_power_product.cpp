#include <gtest/gtest.h>

#include <random>

#include "diagthue/error.hpp"
#include "diagthue/power_product.hpp"

namespace diagthue {
namespace {

PowerProduct random_product(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> base(1, 12), num(-9, 9), den(1, 4), count(1, 3);
  PowerProduct p;
  for (long i = count(rng); i > 0; --i) p.multiply(frac(base(rng), base(rng)), frac(num(rng), den(rng)));
  return p;
}

Ordering flip(Ordering o) { return static_cast<Ordering>(-static_cast<int>(o)); }

TEST(PowerProduct, SmallExactComparisons) {
  // 9/4 vs 2^{3/2}: squares are 81/16 and 8.
  EXPECT_EQ(compare_power_product(PowerProduct::of(frac(9, 4)), PowerProduct::of(2, frac(3, 2))),
            Ordering::kLess);
  const PowerProduct x{{Rational(7), frac(637, 2)}, {Rational(3), frac(-1, 5)}};
  EXPECT_EQ(compare_power_product(x, x), Ordering::kEqual);
  // 8^{1/3} = 2 exactly; only the exact route can say EQUAL.
  EXPECT_EQ(compare_power_product(PowerProduct::of(8, frac(1, 3)), PowerProduct::of(2)),
            Ordering::kEqual);
  EXPECT_EQ(compare_exact(PowerProduct::of(8, frac(1, 3)), PowerProduct::of(2), 1000),
            Ordering::kEqual);
}

TEST(PowerProduct, ThresholdNeighbourhoodDecidedExactly) {
  // (|j|/2)^42 against 7^{637/2} around |j|/2 = 2.6e6 and 2.5e6.
  const PowerProduct threshold = PowerProduct::of(7, frac(637, 2));
  EXPECT_EQ(compare_power_product(PowerProduct::of(2'600'000, 42), threshold), Ordering::kGreater);
  EXPECT_EQ(compare_power_product(PowerProduct::of(2'500'000, 42), threshold), Ordering::kLess);
  CompareOptions exact_only;
  exact_only.use_log_fast_path = false;
  EXPECT_EQ(compare_power_product(PowerProduct::of(2'600'000, 42), threshold, exact_only),
            Ordering::kGreater);
  EXPECT_EQ(compare_power_product(PowerProduct::of(2'500'000, 42), threshold, exact_only),
            Ordering::kLess);
}

TEST(PowerProduct, DigitBudgetIsEnforced) {
  CompareOptions tight;
  tight.use_log_fast_path = false;
  tight.digit_budget = 50;
  EXPECT_THROW(compare_power_product(PowerProduct::of(7, frac(637, 2)), PowerProduct::of(3, 200),
                                     tight),
               Error);
  try {
    compare_power_product(PowerProduct::of(7, frac(637, 2)), PowerProduct::of(3, 200), tight);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDigitBudgetExceeded);
  }
}

TEST(PowerProduct, NormalizationMergesBases) {
  PowerProduct p{{Rational(2), Rational(3)}, {Rational(4), Rational(-1)}, {frac(1, 2), Rational(1)}};
  const PowerProduct n = p.normalized();
  // 2^3 * 4^-1 * (1/2)^1 = 1.
  EXPECT_EQ(compare_power_product(n, PowerProduct()), Ordering::kEqual);
  EXPECT_EQ(PowerProduct::of(frac(1, 3), 2).normalized().exponent_of(3), Rational(-2));
  EXPECT_THROW(PowerProduct::of(Rational(-2)), Error);
}

TEST(PowerProduct, AntisymmetricTransitiveAndFastPathAgreesWithExact) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const PowerProduct a = random_product(rng), b = random_product(rng), c = random_product(rng);
    const Ordering ab = compare_power_product(a, b);
    const Ordering ba = compare_power_product(b, a);
    EXPECT_EQ(ab, flip(ba));
    const Ordering exact = compare_exact(a, b, 1'000'000);
    EXPECT_EQ(ab, exact);
    if (auto fast = compare_by_logs(a, b, 128)) EXPECT_EQ(*fast, exact);
    const Ordering bc = compare_power_product(b, c);
    if (ab != Ordering::kGreater && bc != Ordering::kGreater) {
      EXPECT_NE(compare_power_product(a, c), Ordering::kGreater);
    }
    if (ab != Ordering::kLess && bc != Ordering::kLess) {
      EXPECT_NE(compare_power_product(a, c), Ordering::kLess);
    }
  }
}

TEST(PowerProduct, LogEnclosureContainsValue) {
  const PowerProduct p{{Rational(7), frac(637, 2)}};
  const RealBall l = p.log10(128);
  // 318.5 * log10(7) = 269.1637...
  EXPECT_GT(mpfr_cmp_d(l.lower().get(), 269.1637), 0);
  EXPECT_LT(mpfr_cmp_d(l.upper().get(), 269.1638), 0);
}

}  // namespace
}  // namespace diagthue
