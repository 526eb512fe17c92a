#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "corpus.hpp"
#include "diagthue/analysis.hpp"
#include "diagthue/error.hpp"
#include "diagthue/solver.hpp"
#include "oracles.hpp"

namespace diagthue {
namespace {

using testing::lemma_corpus;

const DiagForm& x7() {
  static const DiagForm f(7, 1, 0, 0, 1);
  return f;
}

const DiagForm& gauss7() {
  static const DiagForm f(7, QuadElem(1), QuadElem(Rational(0), Rational(1), -1), QuadElem(-1),
                          QuadElem(Rational(0), Rational(1), -1));
  return f;
}

TEST(SolutionProfile, RationalCase) {
  const SolutionRecord rec = solution_profile(x7(), 2, 1);
  EXPECT_EQ(rec.u, QuadElem(2));
  EXPECT_EQ(rec.v, QuadElem(1));
  EXPECT_EQ(rec.F_value, 127);
  ASSERT_TRUE(rec.Z_exact && rec.zeta_exact && rec.mu);
  EXPECT_EQ(*rec.Z_exact, QuadElem(2));
  EXPECT_EQ(*rec.zeta_exact, QuadElem(frac(127, 128)));
  EXPECT_EQ(*rec.mu, QuadElem(frac(1, 128)));
  EXPECT_EQ(rec.epsilon, 0);
  EXPECT_EQ(rec.omega_index, 7);
  EXPECT_FALSE(rec.tie_flag);
}

TEST(SolutionProfile, DegenerateVZero) {
  const SolutionRecord rec = solution_profile(x7(), 1, 0);
  EXPECT_EQ(rec.v, QuadElem(0));
  EXPECT_EQ(*rec.Z_exact, QuadElem(1));
  EXPECT_EQ(*rec.zeta_exact, QuadElem(1));
  ASSERT_TRUE(rec.mu.has_value());
  EXPECT_TRUE(rec.mu->is_zero());
  EXPECT_FALSE(rec.mu_inv.has_value());
  EXPECT_EQ(rec.omega_index, 7);
  EXPECT_TRUE(rec.tie_flag);
}

TEST(SolutionProfile, ComplexConjugateCase) {
  const SolutionRecord rec = solution_profile(gauss7(), 1, 0);
  EXPECT_EQ(rec.u, QuadElem(1));
  EXPECT_EQ(rec.v, QuadElem(-1));
  EXPECT_EQ(rec.F_value, 2);
  EXPECT_EQ(rec.Z_squared, QuadElem(1));
  EXPECT_EQ(rec.zeta_squared, QuadElem(4));
  EXPECT_EQ(*rec.mu, QuadElem(-1));
  EXPECT_EQ(rec.D_sign, -1);
  // |u| = |v| for every D < 0 solution.
  const SolutionRecord other = solution_profile(gauss7(), 2, 3);
  EXPECT_EQ(other.u.abs_squared(), other.v.abs_squared());
}

TEST(SolutionProfile, CanonicalRepresentativeAndErrors) {
  const SolutionRecord rec = solution_profile(x7(), -2, -1);
  EXPECT_EQ(rec.x, 2);
  EXPECT_EQ(rec.y, 1);
  EXPECT_EQ(rec.F_value, 127);
  try {
    solution_profile(x7(), 2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrimitive);
  }
  try {
    solution_profile(x7(), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroValue);
  }
}

TEST(SolutionProfile, ZetaTimesZToTheRIsAbsF) {
  for (const auto& [name, form] : lemma_corpus()) {
    const unsigned long r = static_cast<unsigned long>(form.r());
    for (long x = 0; x <= 6; ++x) {
      for (long y = -6; y <= 6; ++y) {
        if (std::gcd(x, y) != 1 || (x == 0 && y != 1)) continue;
        const Integer F = form.expanded().evaluate(x, y);
        if (F == 0) continue;
        const SolutionRecord rec = solution_profile(form, x, y);
        // zeta^2 * (Z^2)^r = F^2 exactly.
        EXPECT_EQ(rec.zeta_squared * rec.Z_squared.pow(r), QuadElem(Rational(F * F))) << name;
        EXPECT_EQ(rec.Z_squared, compare(rec.u.abs_squared(), rec.v.abs_squared()) >= 0
                                     ? rec.u.abs_squared()
                                     : rec.v.abs_squared());
      }
    }
  }
}

TEST(SolutionProfile, PiecewiseZetaIdentityForRealMu) {
  for (const auto& [name, form] : lemma_corpus()) {
    for (long x = 1; x <= 5; ++x) {
      for (long y = -5; y <= 5; ++y) {
        if (std::gcd(x, y) != 1 || form.expanded().evaluate(x, y) == 0) continue;
        const SolutionRecord rec = solution_profile(form, x, y);
        if (rec.D_sign < 0 || !rec.mu || !rec.mu_inv || !rec.mu->is_real()) continue;
        const QuadElem& mu = *rec.mu;
        QuadElem expected;
        if (mu.sign() > 0) {
          expected = compare(mu, QuadElem(1)) < 0 ? QuadElem(1) - mu : QuadElem(1) - mu.inverse();
        } else {
          expected = compare(mu, QuadElem(-1)) > 0 ? QuadElem(1) - mu : QuadElem(1) - mu.inverse();
        }
        EXPECT_EQ(expected * expected, rec.zeta_squared) << name << " at " << x << "," << y;
      }
    }
  }
}

TEST(RelatedRoot, ExactCases) {
  const RootRelation pos = related_root(QuadElem(2), QuadElem(1), 7);
  EXPECT_EQ(pos.omega_index, 7);
  EXPECT_FALSE(pos.tie_flag);
  const RootRelation tie = related_root(QuadElem(-1), QuadElem(1), 7);
  EXPECT_EQ(tie.omega_index, 3);
  EXPECT_TRUE(tie.tie_flag);
  const RootRelation even = related_root(QuadElem(-1), QuadElem(1), 8);
  EXPECT_EQ(even.omega_index, 4);
  EXPECT_FALSE(even.tie_flag);
  EXPECT_TRUE(related_root(QuadElem(0), QuadElem(3), 7).tie_flag);
  EXPECT_EQ(related_root(QuadElem(0), QuadElem(3), 7).omega_index, 7);
}

TEST(RelatedRoot, ComplexTieGoesToLowerArcEnd) {
  // w = e^{i pi/4} = (1+i)/sqrt 2 sits on the bisector between 1 and i for r = 4;
  // u = 1 + i, v = 1 + 0i gives arg pi/4 with |w| = sqrt 2.
  const QuadElem u(Rational(1), Rational(1), -1);
  const RootRelation rel = related_root(u, QuadElem(1), 4);
  EXPECT_TRUE(rel.tie_flag);
  EXPECT_EQ(rel.omega_index, 4);  // the lower end of the arc [0, pi/2] is omega = 1
  // arg 3 pi / 4 between i (k=1) and -1 (k=2): lower end is k = 1.
  const RootRelation rel2 = related_root(QuadElem(Rational(-1), Rational(1), -1), QuadElem(1), 4);
  EXPECT_TRUE(rel2.tie_flag);
  EXPECT_EQ(rel2.omega_index, 1);
}

TEST(RelatedRoot, AgreesWithAngleOracleAndIsStableUnderPrecision) {
  std::size_t checked = 0;
  for (const auto& [name, form] : lemma_corpus()) {
    for (long x = 0; x <= 8; ++x) {
      for (long y = -8; y <= 8; ++y) {
        if (std::gcd(x, y) != 1 || (x == 0 && y != 1)) continue;
        const QuadElem u = form.u(x, y), v = form.v(x, y);
        const RootRelation base = related_root(u, v, form.r(), {64, 4096});
        for (mpfr_prec_t bits : {256, 1024}) {
          const RootRelation again = related_root(u, v, form.r(), {bits, 4096});
          EXPECT_EQ(again.omega_index, base.omega_index) << name;
          EXPECT_EQ(again.tie_flag, base.tie_flag) << name;
        }
        if (auto oracle = testing::nearest_root_by_angle(u, v, form.r())) {
          EXPECT_EQ(*oracle, base.omega_index) << name << " at " << x << "," << y;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Partition, ClassesCoverAndAreOrdered) {
  // x^7 - y^7 with h = 127: (0,1), (1,0), (2,1), (1,2), (1,-1).
  const auto points = enumerate_points(x7().expanded(), 127, {20, 1, 64});
  std::vector<SolutionRecord> recs;
  for (const auto& p : points) recs.push_back(solution_profile(x7(), p.x, p.y));
  const OmegaPartition part = partition(x7(), recs);
  EXPECT_EQ(part.total(), recs.size());
  std::set<std::pair<Integer, Integer>> seen;
  for (const auto& [k, members] : part.classes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      EXPECT_EQ(members[i].omega_index, k);
      EXPECT_TRUE(seen.insert({members[i].x, members[i].y}).second);
      if (i > 0) EXPECT_GE(compare(members[i - 1].zeta_squared, members[i].zeta_squared), 0);
    }
  }
  EXPECT_EQ(seen.size(), recs.size());
  const auto& seven = part.classes.at(7);
  ASSERT_GE(seven.size(), 2u);
  // (1,0) with zeta = 1 precedes (2,1) with zeta = 127/128.
  auto pos = [&](long x, long y) {
    for (std::size_t i = 0; i < seven.size(); ++i) {
      if (seven[i].x == x && seven[i].y == y) return static_cast<long>(i);
    }
    return -1L;
  };
  EXPECT_GE(pos(1, 0), 0);
  EXPECT_LT(pos(1, 0), pos(2, 1));
  EXPECT_TRUE(partition(x7(), {}).classes.empty());
}

TEST(Partition, TieSolutionLandsInLowerClass) {
  const auto rec = solution_profile(x7(), 1, -1);
  const OmegaPartition part = partition(x7(), {rec, solution_profile(x7(), 1, 0)});
  EXPECT_EQ(part.classes.at(3).size(), 1u);
  EXPECT_EQ(part.classes.at(7).size(), 1u);
}

}  // namespace
}  // namespace diagthue
