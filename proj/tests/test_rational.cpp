#include <gtest/gtest.h>

#include <random>

#include "diagthue/error.hpp"
#include "diagthue/rational.hpp"

namespace diagthue {
namespace {

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("  12 ")), "12");
  EXPECT_EQ(parse_integer("-823543"), Integer(-823543));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", "--3"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, FracCanonicalizes) {
  const Rational q = frac(3822, 12);
  EXPECT_EQ(q.get_num(), 637);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(frac(6, -4), Rational(-3) / 2);
  EXPECT_THROW(frac(1, 0), Error);
}

TEST(Rational, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    long num = dist(rng), den = dist(rng);
    if (num == 0 || den == 0) continue;
    const Rational base = frac(num, den);
    const long e = dist(rng) % 9;
    Rational expected = 1;
    for (long i = 0; i < std::labs(e); ++i) expected *= base;
    if (e < 0) expected = 1 / expected;
    EXPECT_EQ(pow(base, e), expected);
  }
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(50, 25), Integer("126410606437752"));
  bool exact = false;
  EXPECT_EQ(isqrt(Integer(99), &exact), 9);
  EXPECT_FALSE(exact);
  EXPECT_EQ(isqrt(Integer(100), &exact), 10);
  EXPECT_TRUE(exact);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_TRUE(fits_int64(Integer("9223372036854775807")));
  EXPECT_FALSE(fits_int64(Integer("9223372036854775808")));
}

}  // namespace
}  // namespace diagthue
