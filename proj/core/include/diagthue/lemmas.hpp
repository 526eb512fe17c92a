#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagthue/analysis.hpp"
#include "diagthue/config.hpp"
#include "diagthue/forms.hpp"
#include "diagthue/power_product.hpp"

namespace diagthue {

enum class LemmaId { kRealMu, kAllD, kZStar, kGap, kZetaNote, kIteration, kZkBound };
enum class LemmaStatus { kHolds, kViolated, kNotApplicable };

std::string_view to_string(LemmaId id);
std::string_view to_string(LemmaStatus status);

struct LemmaVerdict {
  LemmaId lemma;
  LemmaStatus status;
  std::string subject;           // solutions the verdict is about, e.g. "(1,0)->(2,1)"
  std::string hypothesis_trace;  // which hypotheses were checked and how
  // Enclosure of lhs - rhs, oriented so that the inequality holds iff the
  // margin is >= 0. Absent for NOT_APPLICABLE verdicts. For REALMU it is the
  // (negated) distance between both sides of the identity.
  std::optional<RealBall> margin;
  bool log_scale = false;        // margin measured as log(lhs) - log(rhs)
};

// Everything the lemma checks need to know about (F, h).
class LemmaContext {
 public:
  LemmaContext(const DiagForm& form, Integer h, PrecisionPolicy policy = {},
               CompareOptions compare = {});

  const DiagForm& form() const { return *form_; }
  const Integer& h() const { return h_; }
  int r() const { return form_->r(); }
  int D_sign() const { return D_sign_; }
  const Rational& j_abs_squared() const { return j_abs_squared_; }
  const PrecisionPolicy& policy() const { return policy_; }
  const CompareOptions& compare_options() const { return compare_; }

  // |j| > 2 h^{2/r}, decided exactly.
  bool j_large() const { return j_large_; }

  // |j| as a PowerProduct and as an enclosure.
  PowerProduct j_abs() const { return PowerProduct::of(j_abs_squared_, frac(1, 2)); }
  RealBall j_abs_ball(mpfr_prec_t bits) const;

 private:
  const DiagForm* form_;
  Integer h_;
  PrecisionPolicy policy_;
  CompareOptions compare_;
  int D_sign_;
  Rational j_abs_squared_;
  bool j_large_;
};

// One omega class, sorted by zeta descending, with the derived gap data:
// H = 2 h^{2/r} / |j|, the floor |j| / (2 h^{1/r}) for a second member and
// the gap-principle floors (|j| / 2h) Z_{i-1}^{r-1} for members i >= 2.
struct GapChain {
  std::vector<SolutionRecord> members;
  RealBall H;
  RealBall second_member_floor;
  std::vector<RealBall> gap_floors;  // gap_floors[i] bounds members[i + 1]
};

GapChain make_gap_chain(std::vector<SolutionRecord> members, const LemmaContext& ctx);

// Lemma ZZ*: Z_* >= |j| / (2 h^{1/r}) for distinct members with zeta_* <= zeta;
// also checks |j| <= 2 Z Z_*. Throws kSameSolution for identical pairs.
LemmaVerdict check_pair(const SolutionRecord& rec, const SolutionRecord& rec_star,
                        const LemmaContext& ctx);

// Gap principle: Z_i >= (|j| / 2h) Z_{i-1}^{r-1}; NOT_APPLICABLE when D > 0
// and |j| <= 2 h^{2/r}.
LemmaVerdict check_gap(const SolutionRecord& prev, const SolutionRecord& curr,
                       const LemmaContext& ctx);

// REALMU and ALL_D for every member, then ZETA_NOTE and ITERATION for the
// class. ITERATION uses R(k) = (r-1)^{k-1}.
std::vector<LemmaVerdict> check_class(const GapChain& chain, const LemmaContext& ctx);

struct ZkExponents {
  Rational z2;     // n r
  Rational two;    // n + 4
  Rational r;      // (3 n r + 2) / (r - 2)
  Rational j;      // (n r + 2) / (r - 2)
  Rational h;      // 2 n + 1
};

// Exponents of Z_3 >= Z_2^{nr} / (2^{n+4} r^{(3nr+2)/(r-2)} |j|^{(nr+2)/(r-2)} h^{2n+1}).
ZkExponents zk_exponents(int r, long n);

// i7 = 13 r^2 / (r^2 - 5r - 2), i8 = 2 (3r - 1)(r - 2) / (r^2 - 5r - 2).
Rational zk_i7(int r);
Rational zk_i8(int r);

struct ZkReport {
  LemmaVerdict verdict;
  bool condition_j = false;            // |j| >= 2 r^{i7/r} h^{i8/r}
  long n = 1;
  RealBall log_rhs_slope;              // d/dn log RHS(n)
  std::optional<long> divergence_n;    // first n with RHS(n) > Z_3
};

// Requires r >= 7 (kParameterOutOfRange) and exactly three members
// (kWrongClassSize).
ZkReport zk_bound(const GapChain& chain, const LemmaContext& ctx, long n,
                  long divergence_search_limit = 1'000'000);

// Induction state P[a1..a5] together with the (n, g) of the next step.
struct PropertyQuintuple {
  int r = 7;
  Rational a1, a2, a3, a4, a5;
  long n = 1;
  int g = 0;
  bool sigma_nonzero = true;

  // Derived quantities, recomputed on every call.
  Rational A1() const;
  Rational B1() const;
  Rational B2() const;
  Rational B3() const;
  Rational B4() const;

  std::string to_string() const;  // "(a1,a2,a3,a4,a5)"
  static PropertyQuintuple seed(int r, long n = 1, int g = 0);
};

struct InductionStep {
  PropertyQuintuple input;
  Rational A1, B1, B2, B3, B4;
  bool premise = false;  // a2 + a4 >= 0
  bool cond[4] = {false, false, false, false};
  // Present when every condition holds and sigma_nonzero; carries (n+1, g).
  std::optional<PropertyQuintuple> successor;

  bool all_conditions() const { return premise && cond[0] && cond[1] && cond[2] && cond[3]; }
  std::vector<std::string> failed() const;
};

// Evaluates conditions (i)-(iv) without throwing.
InductionStep evaluate_step(const PropertyQuintuple& p);
// Same, but throws kConditionFailed listing the failed conditions.
InductionStep induction_step(const PropertyQuintuple& p);

// The full chain used for (Zk): from the seed, either (1,0) when
// Sigma_{1,0} != 0, or (1,1) then (2,1) otherwise, continued with g = 0 up to
// n = last_n. Stops early, with the failing step last, when conditions
// (i)-(iv) do not certify a step.
std::vector<InductionStep> run_induction(int r, bool sigma_1_0_nonzero, long last_n);

// Runs every applicable lemma over a partition: per-class checks, ZZ* for all
// ordered pairs, the gap principle for consecutive members and, for r >= 7 and
// classes of size three, the (Zk) bound at n.
std::vector<LemmaVerdict> verify_partition(const OmegaPartition& partition,
                                           const LemmaContext& ctx, long zk_n = 1);

}  // namespace diagthue
