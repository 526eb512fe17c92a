#include "diagthue/solver.hpp"

#include <cmath>
#include <future>
#include <numeric>
#include <thread>

#include "diagthue/error.hpp"

namespace diagthue {

namespace {

// Skips (x, y) only when |F(x, y)| > h is certain from a double evaluation.
// Each double operation has relative error at most 2^-53, and every rounding
// is dominated by the sum S of |c_k x^{r-k} y^k|, so |F~ - F| <= (4r + 8) u S.
class Prefilter {
 public:
  Prefilter(const IntBinaryForm& f, const Integer& h) : r_(f.degree()) {
    for (const auto& c : f.coeffs()) {
      const double v = c.get_d();
      if (!std::isfinite(v)) usable_ = false;
      coeffs_.push_back(v);
    }
    h_ = Rational(h).get_d() * (1 + 1e-15) + 1;
    usable_ = usable_ && std::isfinite(h_);
  }

  bool certainly_exceeds(long x, long y) const {
    if (!usable_) return false;
    const double xd = static_cast<double>(x), yd = static_cast<double>(y);
    double acc = coeffs_[0], sum = std::fabs(coeffs_[0]), ypow = 1;
    for (int k = 1; k <= r_; ++k) {
      ypow *= yd;
      acc = acc * xd + coeffs_[k] * ypow;
      sum = sum * std::fabs(xd) + std::fabs(coeffs_[k] * ypow);
    }
    if (!std::isfinite(acc) || !std::isfinite(sum)) return false;
    const double err = (4.0 * r_ + 8.0) * 0x1p-53 * sum * (1 + 0x1p-40);
    return std::fabs(acc) - err > h_;
  }

 private:
  int r_;
  std::vector<double> coeffs_;
  double h_ = 0;
  bool usable_ = true;
};

std::vector<IntSolution> scan_rows(const IntBinaryForm& f, const Integer& h, const Prefilter& pre,
                                   long H, long x_begin, long x_end) {
  std::vector<IntSolution> out;
  for (long x = x_begin; x < x_end; ++x) {
    const long y_lo = x == 0 ? 1 : -H;
    const long y_hi = x == 0 ? 1 : H;
    for (long y = y_lo; y <= y_hi; ++y) {
      if (std::gcd(x, y) != 1 || pre.certainly_exceeds(x, y)) continue;
      Integer value = f.evaluate(x, y);
      if (value != 0 && abs(value) <= h) out.push_back({Integer(x), Integer(y), std::move(value)});
    }
  }
  return out;
}

}  // namespace

std::vector<IntSolution> enumerate_points(const IntBinaryForm& f, const Integer& h,
                                          const SearchConfig& cfg) {
  if (h < 1) throw Error(ErrorCode::kInvalidInput, "h must be at least 1");
  if (cfg.H < 1) throw Error(ErrorCode::kInvalidInput, "search box H must be at least 1");
  if (cfg.H > 3'000'000'000L) throw Error(ErrorCode::kInvalidInput, "search box H too large");
  const Prefilter pre(f, h);
  unsigned chunks = cfg.parallel_chunks ? cfg.parallel_chunks : std::thread::hardware_concurrency();
  chunks = std::max(1u, std::min<unsigned>(chunks, static_cast<unsigned>(cfg.H + 1)));

  // Rows x = 0..H split into contiguous ranges, concatenated in order.
  const long rows = cfg.H + 1;
  std::vector<std::future<std::vector<IntSolution>>> parts;
  for (unsigned c = 0; c < chunks; ++c) {
    const long begin = rows * c / chunks;
    const long end = rows * (c + 1) / chunks;
    parts.push_back(std::async(chunks == 1 ? std::launch::deferred : std::launch::async,
                               scan_rows, std::cref(f), std::cref(h), std::cref(pre), cfg.H, begin,
                               end));
  }
  std::vector<IntSolution> out;
  for (auto& part : parts) {
    auto rows_found = part.get();
    out.insert(out.end(), std::make_move_iterator(rows_found.begin()),
               std::make_move_iterator(rows_found.end()));
  }
  return out;
}

SolveReport enumerate(const DiagForm& form, const Integer& h, const SearchConfig& cfg) {
  SolveReport report;
  report.H = cfg.H;
  report.h = h;
  PrecisionPolicy policy = PrecisionPolicy::from_environment();
  policy.start_bits = cfg.precision;
  for (const auto& p : enumerate_points(form.expanded(), h, cfg)) {
    report.solutions.push_back(solution_profile(form, p.x, p.y, policy));
  }
  report.N = report.solutions.size();
  report.partition = partition(form, report.solutions);
  report.saturation = saturation(report, form, h, policy);
  return report;
}

std::vector<ClassSaturation> saturation(const SolveReport& report, const DiagForm& form,
                                        const Integer& h, const PrecisionPolicy& policy) {
  const LemmaContext ctx(form, h, policy);
  const mpfr_prec_t bits = policy.start_bits;
  const int r = form.r();
  // Z = max(|u|, |v|) <= max(|alpha| + |beta|, |gamma| + |delta|) max(|x|, |y|).
  auto abs_ball = [&](const QuadElem& q) { return embed(q, bits).abs(); };
  const RealBall spread = RealBall::max(abs_ball(form.alpha()) + abs_ball(form.beta()),
                                        abs_ball(form.gamma()) + abs_ball(form.delta()));
  const RealBall H(Rational(report.H), bits);

  std::vector<ClassSaturation> out;
  for (const auto& [k, members] : report.partition.classes) {
    ClassSaturation s;
    s.omega_index = k;
    s.members = members.size();
    if (ctx.D_sign() > 0 && !ctx.j_large()) {
      s.basis = "not applicable: D > 0 and |j| <= 2 h^{2/r}";
      out.push_back(std::move(s));
      continue;
    }
    const GapChain chain = make_gap_chain(members, ctx);
    s.applicable = true;
    if (members.size() == 1) {
      s.basis = "ZZ*: second member has Z >= |j| / (2 h^{1/r})";
      s.Z_floor = chain.second_member_floor;
    } else {
      s.basis = "gap principle: next member has Z >= (|j| / 2h) Z_last^{r-1}";
      const RealBall j = ctx.j_abs_ball(bits);
      s.Z_floor = j / (RealBall(Rational(2), bits) * RealBall(Rational(h), bits)) *
                  chain.members.back().Z(bits).pow(static_cast<unsigned long>(r - 1));
    }
    s.height_floor = *s.Z_floor / spread;
    s.saturated_within_box = (*s.height_floor - H).certainly_positive();
    out.push_back(std::move(s));
  }
  return out;
}

SolveReport verify_theorem(const DiagForm& form, const Integer& h, const SearchConfig& cfg) {
  if (h < 1) throw Error(ErrorCode::kInvalidInput, "h must be at least 1");
  SolveReport report = enumerate(form, h, cfg);
  TheoremConsistency tc;
  try {
    tc.hypothesis = check_hypothesis(form, h, ThresholdSpec::main(form.r(), h));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParameterOutOfRange) throw;
    tc.verdict = "not covered by theorem";
    tc.evidence.push_back(e.what());
    report.theorem_consistency = std::move(tc);
    return report;
  }
  const HypothesisReport& hyp = tc.hypothesis;
  tc.covered = hyp.verdict;
  tc.evidence.push_back("Delta' = " + to_string(hyp.delta_prime) + " vs threshold " +
                        hyp.threshold.to_string() + ": " + std::string(to_string(hyp.comparison)));
  tc.evidence.push_back("case " + std::string(to_string(hyp.case_row)) + ", predicted bound " +
                        std::to_string(hyp.predicted_bound));
  tc.evidence.push_back("N = " + std::to_string(report.N) + " " + SolveReport::kQualifier +
                        " |x|,|y| <= " + std::to_string(report.H));
  if (!tc.covered) {
    tc.verdict = "not covered by theorem";
    report.theorem_consistency = std::move(tc);
    return report;
  }
  if (report.N > static_cast<std::size_t>(hyp.predicted_bound)) {
    throw Error(ErrorCode::kBoundExceeded,
                "N = " + std::to_string(report.N) + " exceeds the predicted bound " +
                    std::to_string(hyp.predicted_bound) + " while the hypothesis holds");
  }
  // The configuration ruled out by the counting argument: a class of three
  // members next to a class of two.
  const auto& classes = report.partition.classes;
  bool has_three = false, has_two = false;
  for (const auto& [k, members] : classes) {
    has_three = has_three || members.size() == 3;
    has_two = has_two || members.size() == 2;
  }
  if (has_three && has_two && form.r() >= 7) {
    const LemmaContext ctx(form, h);
    for (const auto& [k, members] : classes) {
      if (members.size() != 3) continue;
      const ZkReport zk = zk_bound(make_gap_chain(members, ctx), ctx, 1);
      if (zk.condition_j && zk.divergence_n) {
        throw Error(ErrorCode::kBoundExceeded,
                    "class sizes (3, 2) with (Zk) diverging at n = " +
                        std::to_string(*zk.divergence_n));
      }
      tc.evidence.push_back("class " + std::to_string(k) + " of size 3: no (Zk) divergence");
    }
  }
  tc.consistent = true;
  tc.verdict = "consistent";
  report.theorem_consistency = std::move(tc);
  return report;
}

}  // namespace diagthue
