// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "diagthue/error.hpp"
#include "diagthue/lemmas.hpp"
#include "diagthue/solver.hpp"
#include "diagthue/thresholds.hpp"
#include "oracles.hpp"

namespace {

using namespace diagthue;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later ones are counted.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

Outcome invariant_algebra() {
  const std::vector<std::int64_t> ds = {0, -1, 2, -2, 3, -3, 5};
  const auto forms = testing::random_forms(20240601, 280, {7, 8, 9, 10}, ds);
  Check check;
  std::map<std::int64_t, std::size_t> per_d;
  for (const auto& f : forms) {
    ++per_d[f.d()];
    const QuadElem D(Rational(f.quadratic().D));
    check.expect(f.j() * f.j() == f.quadratic().chi * f.quadratic().chi * D,
                 "j^2 != chi^2 D for r=" + std::to_string(f.r()) + " d=" + std::to_string(f.d()));
  }
  for (std::int64_t d : ds) {
    check.expect(per_d[d] > 0, "no form generated for d=" + std::to_string(d));
  }
  return check.outcome(std::to_string(forms.size()) + " forms, " + std::to_string(per_d.size()) +
                       " fields, exact equality");
}

Outcome discriminant_cross_check() {
  const auto forms = testing::random_forms(77, 60, {3, 4, 5, 6, 7, 8, 9, 10}, {0}, 3);
  Check check;
  std::set<std::string> ratios;
  for (const auto& f : forms) {
    const Integer closed = closed_form_discriminant(f);
    const Integer resultant = resultant_discriminant(f.expanded());
    check.expect(resultant != 0, "zero resultant discriminant");
    if (resultant == 0) continue;
    ratios.insert(to_string(frac(closed, resultant)));
  }
  check.expect(ratios.size() == 1, std::to_string(ratios.size()) + " distinct normalizations");
  const std::string ratio = ratios.empty() ? "?" : *ratios.begin();
  return check.outcome(std::to_string(forms.size()) + " rational forms, normalization " + ratio);
}

Outcome oracle_equivalence() {
  const DiagForm f(7, 1, 0, 0, 1);
  Check check;
  std::ostringstream counts;
  for (long h : {1L, 2L, 10L, 127L}) {
    const auto fast = enumerate_points(f.expanded(), h, {200, 0, 64});
    const auto naive = testing::naive_solutions(f.expanded(), h, 200);
    check.expect(fast == naive, "enumerate != oracle at h=" + std::to_string(h));
    counts << " N(" << h << ")=" << fast.size();
    if (h == 1) check.expect(fast.size() == 2, "N(1) != 2");
    if (h == 2) check.expect(fast.size() == 3, "N(2) != 3");
  }
  return check.outcome("x^7-y^7, H=200:" + counts.str());
}

Outcome lemma_suite() {
  const auto corpus = testing::lemma_corpus();
  Check check;
  check.expect(corpus.size() >= 20, "corpus has fewer than 20 forms");
  std::map<LemmaStatus, std::size_t> tally;
  std::set<LemmaId> decided;
  std::size_t solutions = 0;
  for (const auto& [name, form] : corpus) {
    for (long h : {1L, 2L, 10L, 127L, 1000L, 100000L}) {
      try {
        const SolveReport rep = enumerate(form, h, {60, 0, 64});
        solutions += rep.N;
        const LemmaContext ctx(form, h);
        for (const auto& v : verify_partition(rep.partition, ctx)) {
          ++tally[v.status];
          if (v.status != LemmaStatus::kNotApplicable) decided.insert(v.lemma);
          check.expect(v.status != LemmaStatus::kViolated,
                       name + " h=" + std::to_string(h) + " " + std::string(to_string(v.lemma)) +
                           " " + v.subject);
        }
      } catch (const Error& e) {
        check.expect(false, name + " h=" + std::to_string(h) + ": " + e.what());
      }
    }
  }
  for (LemmaId id : {LemmaId::kRealMu, LemmaId::kAllD, LemmaId::kZStar, LemmaId::kGap,
                     LemmaId::kZetaNote}) {
    check.expect(decided.count(id) > 0,
                 std::string(to_string(id)) + " never applicable on the corpus");
  }
  return check.outcome(std::to_string(corpus.size()) + " forms, " + std::to_string(solutions) +
                       " solutions, " + std::to_string(tally[LemmaStatus::kHolds]) + " HOLDS, " +
                       std::to_string(tally[LemmaStatus::kNotApplicable]) + " NOT_APPLICABLE, " +
                       std::to_string(tally[LemmaStatus::kViolated]) + " VIOLATED");
}

Outcome induction_reproduction() {
  Check check;
  for (int r = 7; r <= 12; ++r) {
    const Rational rr(r);
    const std::string tag = " at r=" + std::to_string(r);
    try {
      const auto s0 = induction_step(PropertyQuintuple::seed(r, 1, 0)).successor;
      const auto s1 = induction_step(PropertyQuintuple::seed(r, 1, 1)).successor;
      check.expect(s0.has_value() && s1.has_value(), "missing successor" + tag);
      if (!s0 || !s1) continue;
      check.expect(s0->a1 == 2 * rr - 1 && s0->a2 == 5 && s0->a3 == (3 * rr + 2) / (rr - 2) &&
                       s0->a4 == (rr + 2) / (rr - 2) && s0->a5 == 3,
                   "(1,0) successor " + s0->to_string() + tag);
      check.expect(s1->a1 == rr && s1->a2 == 5 && s1->a3 == (5 * rr + 2) / (rr - 2) &&
                       s1->a4 == (2 * rr + 2) / (rr - 2) && s1->a5 == 2,
                   "(1,1) successor " + s1->to_string() + tag);
    } catch (const Error& e) {
      check.expect(false, std::string(e.what()) + tag);
    }
  }
  return check.outcome("both branches, r=7..12, exact rational equality");
}

Outcome threshold_claim() {
  Check check;
  std::size_t compared = 0;
  for (int r = 7; r <= 50; ++r) {
    for (const char* h : {"1", "10", "100", "1000000"}) {
      const Integer hh(h);
      const Ordering o = compare_power_product(threshold(ThresholdSpec::main(r, hh)),
                                               threshold(ThresholdSpec::siegel(1, r, hh)));
      check.expect(o == Ordering::kLess,
                   "MAIN not below SIEGEL(1) at r=" + std::to_string(r) + " h=" + h);
      ++compared;
    }
  }
  const Rational main_exp = threshold(ThresholdSpec::main(7, 1)).exponent_of(7);
  const Rational siegel_exp = threshold(ThresholdSpec::siegel(1, 7, 1)).exponent_of(7);
  const Rational c1 = Rational(45) + frac(593, 913);
  check.expect(main_exp == frac(637, 2), "MAIN exponent " + to_string(main_exp));
  check.expect(siegel_exp == 4 * 7 * c1, "SIEGEL exponent " + to_string(siegel_exp));
  return check.outcome(std::to_string(compared) + " certified comparisons; r=7 exponents " +
                       to_string(main_exp) + " vs 4*7*c1 = " + to_string(siegel_exp));
}

Outcome theorem_consistency() {
  Check check;
  std::ostringstream detail;
  for (const char* k : {"3000000", "10000000"}) {
    const Integer kk(k);
    const DiagForm f = testing::large_j_form(kk);
    // Delta' = k^42 against 7^{637/2}, compared as exact integers k^84 vs 7^637.
    const Ordering exact = compare_exact(PowerProduct::of(Rational(kk), 42),
                                         PowerProduct::of(7, frac(637, 2)), 1'000'000);
    check.expect(exact != Ordering::kLess, std::string("k^42 < 7^{637/2} for k=") + k);
    try {
      const SolveReport rep = verify_theorem(f, 1, {1000, 0, 64});
      const auto& tc = *rep.theorem_consistency;
      check.expect(tc.hypothesis.verdict, std::string("hypothesis false for k=") + k);
      check.expect(tc.hypothesis.predicted_bound == 2, "predicted bound != 2");
      check.expect(rep.N == 0, "N != 0 for k=" + std::string(k));
      check.expect(tc.consistent, "inconsistent for k=" + std::string(k));
      detail << " k=" << k << ": N=" << rep.N << " <= " << tc.hypothesis.predicted_bound << ";";
    } catch (const Error& e) {
      check.expect(false, std::string(k) + ": " + e.what());
    }
  }
  return check.outcome("h=1, H=1000," + detail.str());
}

Outcome classification_stability() {
  Check check;
  std::size_t points = 0;
  for (const auto& [name, form] : testing::lemma_corpus()) {
    for (long x = 0; x <= 12; ++x) {
      for (long y = -12; y <= 12; ++y) {
        if (std::gcd(x, y) != 1 || (x == 0 && y != 1)) continue;
        const QuadElem u = form.u(x, y), v = form.v(x, y);
        try {
          const RootRelation base = related_root(u, v, form.r(), {64, 4096});
          for (mpfr_prec_t bits : {256, 1024}) {
            const RootRelation other = related_root(u, v, form.r(), {bits, 4096});
            check.expect(other.omega_index == base.omega_index && other.tie_flag == base.tie_flag,
                         name + " unstable at (" + std::to_string(x) + "," + std::to_string(y) +
                             ")");
          }
        } catch (const Error& e) {
          check.expect(false, name + ": " + e.what());
        }
        ++points;
      }
    }
  }
  for (int r = 3; r <= 15; r += 2) {
    const RootRelation tie = related_root(QuadElem(-1), QuadElem(1), r);
    check.expect(tie.tie_flag && tie.omega_index == (r - 1) / 2,
                 "u/v=-1 tie at r=" + std::to_string(r) + " gave k=" +
                     std::to_string(tie.omega_index));
  }
  return check.outcome(std::to_string(points) + " points at 64/256/1024 bits; u/v=-1 ties for odd r");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "invariant algebra", 30, invariant_algebra},
      {2, "discriminant cross-check", 60, discriminant_cross_check},
      {3, "oracle equivalence", 60, oracle_equivalence},
      {4, "lemma suite", 300, lemma_suite},
      {5, "induction reproduction", 1, induction_reproduction},
      {6, "threshold claim", 10, threshold_claim},
      {7, "theorem consistency", 120, theorem_consistency},
      {8, "classification stability", 60, classification_stability},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > c.budget_s) {
      out = {false, out.detail + "; over the " + std::to_string(c.budget_s) + " s budget"};
    }
    failed += out.pass ? 0 : 1;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
              << out.detail << " (" << time.str() << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
