#include <gtest/gtest.h>

#include <random>

#include "diagthue/polynomial.hpp"

namespace diagthue::poly {
namespace {

// prod (t - roots[i]) with integer roots.
IntegerPoly from_roots(const std::vector<long>& roots, long lead = 1) {
  IntegerPoly p{Integer(lead)};
  for (long root : roots) {
    IntegerPoly next(p.size() + 1, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * root;
    }
    p = next;
  }
  return p;
}

TEST(Polynomial, SturmCountsDistinctRealRoots) {
  EXPECT_EQ(count_real_roots(to_rational(from_roots({1, 2, 3}))), 3);
  EXPECT_EQ(count_real_roots(to_rational(from_roots({-4, 0, 0, 5}))), 3);
  // t^2 + 1 and t^8 + 1 have none; t^7 - 1 has one.
  EXPECT_EQ(count_real_roots({Rational(1), Rational(0), Rational(1)}), 0);
  RationalPoly t8(9, Rational(0));
  t8[0] = 1;
  t8[8] = 1;
  EXPECT_EQ(count_real_roots(t8), 0);
  RationalPoly t7(8, Rational(0));
  t7[0] = -1;
  t7[7] = 1;
  EXPECT_EQ(count_real_roots(t7), 1);
}

TEST(Polynomial, DiscriminantMatchesRootDifferences) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> root(-9, 9), lead(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> roots;
    for (int i = 0; i < 2 + trial % 5; ++i) roots.push_back(root(rng));
    const long a = lead(rng);
    // disc = a^{2n-2} prod_{i<j} (r_i - r_j)^2
    Integer expected = pow(Integer(a), 2 * roots.size() - 2);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        expected *= Integer(roots[i] - roots[j]) * (roots[i] - roots[j]);
      }
    }
    EXPECT_EQ(discriminant(from_roots(roots, a)), expected);
  }
  // a t^2 + b t + c -> b^2 - 4ac.
  EXPECT_EQ(discriminant({Integer(5), Integer(3), Integer(2)}), 9 - 40);
}

TEST(Polynomial, ResultantOfCommonRootVanishes) {
  EXPECT_EQ(resultant(from_roots({1, 2}), from_roots({2, 7})), 0);
  // Res(t - a, t - b) = a - b... up to sign convention: b - a for monic linear.
  const Integer r = resultant(from_roots({3}), from_roots({5}));
  EXPECT_EQ(abs(r), 2);
}

TEST(Polynomial, BareissDeterminant) {
  EXPECT_EQ(determinant({{Integer(2), Integer(1)}, {Integer(7), Integer(4)}}), 1);
  EXPECT_EQ(determinant({{Integer(0), Integer(1), Integer(0)},
                         {Integer(1), Integer(0), Integer(0)},
                         {Integer(0), Integer(0), Integer(5)}}),
            -5);
}

}  // namespace
}  // namespace diagthue::poly
