#include "diagthue/lemmas.hpp"

#include <cmath>
#include <sstream>

#include "diagthue/error.hpp"

namespace diagthue {

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kRealMu: return "REALMU";
    case LemmaId::kAllD: return "ALL_D";
    case LemmaId::kZStar: return "ZSTAR";
    case LemmaId::kGap: return "GAP";
    case LemmaId::kZetaNote: return "ZETA_NOTE";
    case LemmaId::kIteration: return "ITERATION";
    case LemmaId::kZkBound: return "ZK_BOUND";
  }
  return "?";
}

std::string_view to_string(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::kHolds: return "HOLDS";
    case LemmaStatus::kViolated: return "VIOLATED";
    case LemmaStatus::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

std::string point(const SolutionRecord& rec) {
  return "(" + to_string(rec.x) + "," + to_string(rec.y) + ")";
}

LemmaVerdict not_applicable(LemmaId id, std::string subject, std::string trace) {
  return LemmaVerdict{id, LemmaStatus::kNotApplicable, std::move(subject), std::move(trace),
                      std::nullopt, false};
}

LemmaStatus from_sign(int s) { return s >= 0 ? LemmaStatus::kHolds : LemmaStatus::kViolated; }

bool within_h(const SolutionRecord& rec, const Integer& h) { return abs(rec.F_value) <= h; }

QuadElem rational_elem(const Rational& q) { return QuadElem(q); }

}  // namespace

// ---------------------------------------------------------------------------

LemmaContext::LemmaContext(const DiagForm& form, Integer h, PrecisionPolicy policy,
                           CompareOptions compare)
    : form_(&form),
      h_(std::move(h)),
      policy_(policy),
      compare_(compare),
      D_sign_(sign(form.quadratic().D)),
      j_abs_squared_(form.j().abs_squared().a()),
      j_large_(false) {
  if (h_ < 1) throw Error(ErrorCode::kInvalidInput, "h must be at least 1");
  const PowerProduct bound{{Rational(2), Rational(1)}, {Rational(h_), frac(2, form.r())}};
  j_large_ = compare_power_product(j_abs(), bound, compare_) == Ordering::kGreater;
}

RealBall LemmaContext::j_abs_ball(mpfr_prec_t bits) const {
  return RealBall(j_abs_squared_, bits).sqrt();
}

GapChain make_gap_chain(std::vector<SolutionRecord> members, const LemmaContext& ctx) {
  std::sort(members.begin(), members.end(), zeta_order_before);
  const mpfr_prec_t bits = ctx.policy().start_bits;
  const int r = ctx.r();
  const RealBall h(Rational(ctx.h()), bits);
  const RealBall j = ctx.j_abs_ball(bits);
  const RealBall two(Rational(2), bits);
  GapChain chain{std::move(members), two * h.root(static_cast<unsigned long>(r)).square() / j,
                 j / (two * h.root(static_cast<unsigned long>(r))), {}};
  for (std::size_t i = 0; i + 1 < chain.members.size(); ++i) {
    chain.gap_floors.push_back(j / (two * h) *
                               chain.members[i].Z(bits).pow(static_cast<unsigned long>(r - 1)));
  }
  return chain;
}

LemmaVerdict check_pair(const SolutionRecord& rec, const SolutionRecord& star,
                        const LemmaContext& ctx) {
  if (rec.x == star.x && rec.y == star.y) {
    throw Error(ErrorCode::kSameSolution, "ZZ* needs two distinct solutions, got " + point(rec));
  }
  const std::string subject = point(rec) + "->" + point(star);
  if (rec.omega_index != star.omega_index) {
    return not_applicable(LemmaId::kZStar, subject, "solutions lie in different omega classes");
  }
  if (compare(star.zeta_squared, rec.zeta_squared) > 0) {
    return not_applicable(LemmaId::kZStar, subject, "requires zeta_* <= zeta");
  }
  if (!within_h(rec, ctx.h()) || !within_h(star, ctx.h())) {
    return not_applicable(LemmaId::kZStar, subject, "requires |F| <= h for both solutions");
  }
  const int r = ctx.r();
  const auto ru = static_cast<unsigned long>(r);
  const QuadElem j2 = rational_elem(ctx.j_abs_squared());

  std::string trace = "same omega class, zeta_* <= zeta";
  // |j| <= 2 Z Z_*  <=>  |j|^2 <= 4 Z^2 Z_*^2
  const int mid = (QuadElem(4) * rec.Z_squared * star.Z_squared - j2).sign();
  trace += mid >= 0 ? "; |j| <= 2 Z Z_* holds" : "; |j| <= 2 Z Z_* FAILS";
  // Z_* >= |j| / (2 h^{1/r})  <=>  (Z_*^2)^r 4^r h^2 >= (|j|^2)^r
  const QuadElem scale(Rational(pow(Integer(4), ru) * ctx.h() * ctx.h()));
  const int main = (star.Z_squared.pow(ru) * scale - j2.pow(ru)).sign();
  trace += "; decided exactly on Z_*^{2r} 4^r h^2 vs |j|^{2r}";

  const mpfr_prec_t bits = ctx.policy().start_bits;
  const RealBall rhs = ctx.j_abs_ball(bits) /
                       (RealBall(Rational(2), bits) * RealBall(Rational(ctx.h()), bits).root(ru));
  return LemmaVerdict{LemmaId::kZStar, from_sign(std::min(mid, main)), subject, trace,
                      star.Z(bits) - rhs, false};
}

LemmaVerdict check_gap(const SolutionRecord& prev, const SolutionRecord& curr,
                       const LemmaContext& ctx) {
  const std::string subject = point(prev) + "->" + point(curr);
  if (prev.omega_index != curr.omega_index) {
    return not_applicable(LemmaId::kGap, subject, "solutions lie in different omega classes");
  }
  if (compare(curr.zeta_squared, prev.zeta_squared) > 0) {
    return not_applicable(LemmaId::kGap, subject, "requires zeta_i <= zeta_{i-1}");
  }
  if (!within_h(prev, ctx.h()) || !within_h(curr, ctx.h())) {
    return not_applicable(LemmaId::kGap, subject, "requires |F| <= h for both solutions");
  }
  if (ctx.D_sign() > 0 && !ctx.j_large()) {
    return not_applicable(LemmaId::kGap, subject, "D > 0 and |j| <= 2 h^{2/r}");
  }
  const int r = ctx.r();
  const auto rm1 = static_cast<unsigned long>(r - 1);
  // Z_i^2 >= |j|^2 / (4 h^2) * (Z_{i-1}^2)^{r-1}
  const Rational factor = ctx.j_abs_squared() / Rational(4 * ctx.h() * ctx.h());
  const int s = (curr.Z_squared - QuadElem(factor) * prev.Z_squared.pow(rm1)).sign();

  const mpfr_prec_t bits = ctx.policy().start_bits;
  const RealBall floor = ctx.j_abs_ball(bits) /
                         (RealBall(Rational(2), bits) * RealBall(Rational(ctx.h()), bits)) *
                         prev.Z(bits).pow(rm1);
  std::string trace = ctx.D_sign() < 0 ? "D < 0 (no hypothesis on |j|)"
                                       : "D > 0 and |j| > 2 h^{2/r}";
  trace += "; decided exactly on Z_i^2 vs (|j|^2 / 4h^2) Z_{i-1}^{2(r-1)}";
  return LemmaVerdict{LemmaId::kGap, from_sign(s), subject, trace, curr.Z(bits) - floor, false};
}

namespace {

LemmaVerdict check_realmu(const SolutionRecord& rec, const LemmaContext& ctx) {
  const std::string subject = point(rec);
  if (ctx.D_sign() < 0) return not_applicable(LemmaId::kRealMu, subject, "requires D > 0");
  if (rec.u.is_zero() || rec.v.is_zero()) {
    return not_applicable(LemmaId::kRealMu, subject, "u = 0 or v = 0: mu or 1/mu undefined");
  }
  if (!rec.epsilon.has_value()) {
    return not_applicable(LemmaId::kRealMu, subject, "mu is not real");
  }
  const int r = ctx.r();
  const QuadElem w = rec.u / rec.v;
  const QuadElem mu_inv_abs = rec.mu_inv->abs();
  const Rational turns = frac(*rec.epsilon + 2 * rec.omega_index, r);
  auto distance = [&](mpfr_prec_t bits) {
    const RealBall scale = embed_real(mu_inv_abs, bits).root(static_cast<unsigned long>(r));
    const Ball rhs = Ball(scale) * Ball::unit_root(turns, bits);
    return (embed(w, bits) - rhs).abs();
  };
  // An identity: it holds iff the certified distance encloses 0, checked again
  // at the maximum precision before accepting.
  RealBall dist = distance(ctx.policy().start_bits);
  if (dist.contains_zero()) dist = distance(ctx.policy().max_bits);
  const bool holds = dist.contains_zero();
  std::ostringstream trace;
  trace << "D > 0, epsilon = " << *rec.epsilon << ", omega index " << rec.omega_index
        << "; |u/v - |mu^-1|^{1/r} e^{pi i eps/r} omega| enclosed at " << dist.precision()
        << " bits";
  return LemmaVerdict{LemmaId::kRealMu, holds ? LemmaStatus::kHolds : LemmaStatus::kViolated,
                      subject, trace.str(), -dist, false};
}

LemmaVerdict check_all_d(const SolutionRecord& rec, const LemmaContext& ctx) {
  const std::string subject = point(rec);
  if (rec.v.is_zero()) return not_applicable(LemmaId::kAllD, subject, "v = 0");
  if (ctx.D_sign() > 0 && rec.epsilon != 0) {
    return not_applicable(LemmaId::kAllD, subject, "D > 0 requires epsilon = 0");
  }
  const int r = ctx.r();
  if (rec.u.is_zero()) {
    // |0 - omega| = 1 and (Z/|v|) zeta = |v^r| / |v|^r = 1.
    return LemmaVerdict{LemmaId::kAllD, LemmaStatus::kHolds, subject,
                        "u = 0: both sides equal 1 exactly",
                        RealBall(Rational(0), ctx.policy().start_bits), false};
  }
  const QuadElem w = rec.u / rec.v;
  const Rational turns = frac(2 * rec.omega_index, r);
  auto margin = [&](mpfr_prec_t bits) {
    const RealBall lhs = (embed(w, bits) - Ball::unit_root(turns, bits)).abs();
    const RealBall rhs = rec.Z(bits) / rec.abs_v(bits) * rec.zeta(bits);
    return rhs - lhs;
  };
  const CertifiedSign cert = certify_sign(margin, ctx.policy());
  if (!cert.sign) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "ALL_D at " + subject + " undecided at " + std::to_string(cert.bits) + " bits");
  }
  std::string trace = ctx.D_sign() < 0 ? "D < 0" : "D > 0, epsilon = 0";
  trace += "; certified at " + std::to_string(cert.bits) + " bits";
  return LemmaVerdict{LemmaId::kAllD, from_sign(*cert.sign), subject, trace, cert.value, false};
}

std::string class_subject(const GapChain& chain) {
  if (chain.members.empty()) return "{}";
  return "omega " + std::to_string(chain.members.front().omega_index) + " (" +
         std::to_string(chain.members.size()) + " members)";
}

LemmaVerdict check_zeta_note(const GapChain& chain, const LemmaContext& ctx) {
  const std::string subject = class_subject(chain);
  if (!ctx.j_large()) return not_applicable(LemmaId::kZetaNote, subject, "|j| <= 2 h^{2/r}");
  if (chain.members.size() < 2) {
    return LemmaVerdict{LemmaId::kZetaNote, LemmaStatus::kHolds, subject,
                        "|j| > 2 h^{2/r}; vacuous (fewer than two members)", std::nullopt, false};
  }
  const mpfr_prec_t bits = ctx.policy().start_bits;
  int worst = 1;
  std::optional<RealBall> margin;
  std::string failures;
  for (std::size_t i = 1; i < chain.members.size(); ++i) {
    const int s = (QuadElem(1) - chain.members[i].zeta_squared).sign();
    const RealBall m = RealBall(Rational(1), bits) - chain.members[i].zeta(bits);
    if (!margin || mpfr_less_p(m.lower().get(), margin->lower().get())) margin = m;
    if (s <= 0) {
      worst = -1;
      failures += " zeta_" + std::to_string(i + 1) + " >= 1 at " + point(chain.members[i]);
    }
  }
  std::string trace = "|j| > 2 h^{2/r}; zeta_i < 1 for i >= 2 decided exactly on zeta_i^2";
  if (!failures.empty()) trace += ";" + failures;
  return LemmaVerdict{LemmaId::kZetaNote, from_sign(worst), subject, trace, margin, false};
}

LemmaVerdict check_iteration(const GapChain& chain, const LemmaContext& ctx) {
  const std::string subject = class_subject(chain);
  const std::size_t t = chain.members.size();
  if (t < 3) return not_applicable(LemmaId::kIteration, subject, "needs t >= 3 members");
  const int r = ctx.r();
  // R(k) = (r-1)^{k-1}, so R(t-1) - 1 = (r-1)^{t-2} - 1.
  const Integer K = pow(Integer(r - 1), static_cast<unsigned long>(t - 2)) - 1;
  const Rational two_exp = Rational(1) + frac(Integer(r - 2), Integer(r) * K);
  const PowerProduct bound{{Rational(2), two_exp}, {Rational(ctx.h()), frac(2, r)}};
  const std::string r_note = "R(k) = (r-1)^{k-1} (adopted; R is not defined in the source)";
  if (compare_power_product(ctx.j_abs(), bound, ctx.compare_options()) != Ordering::kGreater) {
    return not_applicable(LemmaId::kIteration, subject,
                          "|j| <= 2^{1+(r-2)/(r(R(t-1)-1))} h^{2/r}; " + r_note);
  }
  const SolutionRecord& rec = chain.members[t - 2];
  const int s = (QuadElem(frac(1, 4)) - rec.zeta_squared).sign();
  const mpfr_prec_t bits = ctx.policy().start_bits;
  return LemmaVerdict{LemmaId::kIteration, s > 0 ? LemmaStatus::kHolds : LemmaStatus::kViolated,
                      subject,
                      "t = " + std::to_string(t) + ", |j| above the iteration bound; zeta_{t-1} < 1/2 " +
                          "decided exactly at " + point(rec) + "; " + r_note,
                      RealBall(frac(1, 2), bits) - rec.zeta(bits), false};
}

}  // namespace

std::vector<LemmaVerdict> check_class(const GapChain& chain, const LemmaContext& ctx) {
  std::vector<LemmaVerdict> out;
  for (const auto& rec : chain.members) {
    out.push_back(check_realmu(rec, ctx));
    out.push_back(check_all_d(rec, ctx));
  }
  out.push_back(check_zeta_note(chain, ctx));
  out.push_back(check_iteration(chain, ctx));
  return out;
}

// ---------------------------------------------------------------------------
// The (Zk) bound

Rational zk_i7(int r) { return frac(13 * r * r, r * r - 5 * r - 2); }

Rational zk_i8(int r) { return frac(2 * (3 * r - 1) * (r - 2), r * r - 5 * r - 2); }

ZkExponents zk_exponents(int r, long n) {
  const Integer rr(r), nn(n);
  return ZkExponents{Rational(nn * rr), Rational(nn + 4),
                     frac(Integer(3 * nn * rr + 2), Integer(rr - 2)),
                     frac(Integer(nn * rr + 2), Integer(rr - 2)), Rational(2 * nn + 1)};
}

namespace {

// RHS(n) of (Zk) as a PowerProduct in Z_2^2 and |j|^2 (both rational here).
PowerProduct zk_rhs(const Rational& z2_squared, const LemmaContext& ctx, long n) {
  const ZkExponents e = zk_exponents(ctx.r(), n);
  return PowerProduct{{z2_squared, e.z2 / 2},
                      {Rational(2), -e.two},
                      {Rational(ctx.r()), -e.r},
                      {ctx.j_abs_squared(), -e.j / 2},
                      {Rational(ctx.h()), -e.h}};
}

RealBall zk_log_rhs(const RealBall& log_z2, const LemmaContext& ctx, long n, mpfr_prec_t bits) {
  const ZkExponents e = zk_exponents(ctx.r(), n);
  const RealBall log2 = RealBall(Rational(2), bits).log();
  const RealBall logr = RealBall(Rational(ctx.r()), bits).log();
  const RealBall logj = RealBall(ctx.j_abs_squared(), bits).log() * RealBall(frac(1, 2), bits);
  const RealBall logh = RealBall(Rational(ctx.h()), bits).log();
  return RealBall(e.z2, bits) * log_z2 - RealBall(e.two, bits) * log2 -
         RealBall(e.r, bits) * logr - RealBall(e.j, bits) * logj - RealBall(e.h, bits) * logh;
}

}  // namespace

ZkReport zk_bound(const GapChain& chain, const LemmaContext& ctx, long n,
                  long divergence_search_limit) {
  const int r = ctx.r();
  if (r < 7) throw Error(ErrorCode::kParameterOutOfRange, "(Zk) needs r >= 7");
  if (chain.members.size() != 3) {
    throw Error(ErrorCode::kWrongClassSize,
                "(Zk) needs |S_omega| = 3, got " + std::to_string(chain.members.size()));
  }
  if (n < 1) throw Error(ErrorCode::kParameterOutOfRange, "(Zk) needs n >= 1");
  const SolutionRecord& z2 = chain.members[1];
  const SolutionRecord& z3 = chain.members[2];
  const std::string subject = class_subject(chain) + " " + point(z2) + "," + point(z3);

  const PowerProduct condition{{Rational(2), Rational(1)},
                               {Rational(r), zk_i7(r) / r},
                               {Rational(ctx.h()), zk_i8(r) / r}};
  ZkReport report{not_applicable(LemmaId::kZkBound, subject, ""), false, n,
                  RealBall(ctx.policy().start_bits), std::nullopt};
  report.condition_j =
      compare_power_product(ctx.j_abs(), condition, ctx.compare_options()) != Ordering::kLess;

  const bool exact = z2.Z_squared.is_rational() && z3.Z_squared.is_rational();
  // Sign of log Z_3 - log RHS(n): +1 when the bound holds.
  auto z3_vs_rhs = [&](long k) -> int {
    if (exact) {
      const Ordering o = compare_power_product(PowerProduct::of(z3.Z_squared.a(), frac(1, 2)),
                                               zk_rhs(z2.Z_squared.a(), ctx, k),
                                               ctx.compare_options());
      return static_cast<int>(o) >= 0 ? 1 : -1;
    }
    const CertifiedSign cert = certify_sign(
        [&](mpfr_prec_t bits) {
          return z3.Z(bits).log() - zk_log_rhs(z2.Z(bits).log(), ctx, k, bits);
        },
        ctx.policy());
    if (!cert.sign) {
      throw Error(ErrorCode::kPrecisionExhausted, "(Zk) comparison undecided at n = " +
                                                      std::to_string(k));
    }
    return *cert.sign;
  };

  const mpfr_prec_t bits = ctx.policy().start_bits;
  const RealBall log_z2 = z2.Z(bits).log();
  const RealBall log_z3 = z3.Z(bits).log();
  const RealBall at0 = zk_log_rhs(log_z2, ctx, 0, bits);
  report.log_rhs_slope = zk_log_rhs(log_z2, ctx, 1, bits) - at0;
  const RealBall margin = log_z3 - zk_log_rhs(log_z2, ctx, n, bits);

  // First n with RHS(n) > Z_3, when log RHS grows linearly in n.
  if (report.log_rhs_slope.certainly_positive()) {
    const double slope = mpfr_get_d(report.log_rhs_slope.center().get(), MPFR_RNDN);
    const double gap = mpfr_get_d((log_z3 - at0).center().get(), MPFR_RNDN);
    double guess = std::floor(gap / slope);
    if (!(guess >= 1)) guess = 1;
    if (guess <= static_cast<double>(divergence_search_limit)) {
      long k = static_cast<long>(guess);
      if (z3_vs_rhs(k) < 0) {
        while (k > 1 && z3_vs_rhs(k - 1) < 0) --k;
        report.divergence_n = k;
      } else {
        while (k < divergence_search_limit && z3_vs_rhs(k) >= 0) ++k;
        if (z3_vs_rhs(k) < 0) report.divergence_n = k;
      }
    }
  }

  std::string trace = report.condition_j ? "|j| >= 2 r^{i7/r} h^{i8/r}"
                                         : "|j| < 2 r^{i7/r} h^{i8/r}";
  if (report.divergence_n) {
    trace += "; RHS(n) first exceeds Z_3 at n = " + std::to_string(*report.divergence_n);
  }
  if (!report.condition_j) {
    report.verdict = not_applicable(LemmaId::kZkBound, subject, trace);
    return report;
  }
  const int s = z3_vs_rhs(n);
  trace += std::string("; Z_3 vs RHS(") + std::to_string(n) + ") decided " +
           (exact ? "exactly" : "by certified logarithms");
  report.verdict = LemmaVerdict{LemmaId::kZkBound, from_sign(s), subject, trace, margin, true};
  return report;
}

// ---------------------------------------------------------------------------
// Induction on P[a1..a5]

Rational PropertyQuintuple::A1() const { return a1 * (r - 1) - n * r - 1 + g; }

Rational PropertyQuintuple::B1() const {
  return A1() - a4 * (r - 1) - frac(r * (g + n) + 2, r - 2);
}

Rational PropertyQuintuple::B2() const { return A1() + a2 * (r - 1) + 3 * n + 4; }

Rational PropertyQuintuple::B3() const {
  return a3 * (r - 1) + frac(r * (2 * g + 3 * n) + 2, r - 2);
}

Rational PropertyQuintuple::B4() const { return A1() / r + a5 * (r - 1) + 1; }

std::string PropertyQuintuple::to_string() const {
  return "(" + diagthue::to_string(a1) + "," + diagthue::to_string(a2) + "," +
         diagthue::to_string(a3) + "," + diagthue::to_string(a4) + "," +
         diagthue::to_string(a5) + ")";
}

PropertyQuintuple PropertyQuintuple::seed(int r, long n, int g) {
  return PropertyQuintuple{r, Rational(r - 1), Rational(1), Rational(0), Rational(-1),
                           Rational(1), n, g, true};
}

std::vector<std::string> InductionStep::failed() const {
  std::vector<std::string> out;
  if (!premise) out.emplace_back("a2+a4>=0");
  static const char* kNames[4] = {"i", "ii", "iii", "iv"};
  for (int i = 0; i < 4; ++i) {
    if (!cond[i]) out.emplace_back(kNames[i]);
  }
  return out;
}

InductionStep evaluate_step(const PropertyQuintuple& p) {
  if (p.r < 7) throw Error(ErrorCode::kParameterOutOfRange, "induction needs r >= 7");
  if (p.n < 1 || (p.g != 0 && p.g != 1)) {
    throw Error(ErrorCode::kParameterOutOfRange, "induction needs n >= 1 and g in {0, 1}");
  }
  InductionStep step;
  step.input = p;
  step.A1 = p.A1();
  step.B1 = p.B1();
  step.B2 = p.B2();
  step.B3 = p.B3();
  step.B4 = p.B4();
  const long r = p.r;
  step.premise = p.a2 + p.a4 >= 0;
  step.cond[0] = step.A1 > 0;
  step.cond[1] = step.B1 > 0;
  step.cond[2] = step.B1 * zk_i7(p.r) >= Rational(r) * (step.B3 + (step.B2 - step.B1) / 2);
  step.cond[3] = step.B1 * zk_i8(p.r) >= Rational(r) * step.B4;
  if (step.all_conditions() && p.sigma_nonzero) {
    const long n = p.n, g = p.g;
    PropertyQuintuple next{p.r,
                           Rational(r * (n + 1 - g) - 1 + g),
                           Rational(n + 4),
                           frac(r * (2 * g + 3 * n) + 2, r - 2),
                           frac(r * (g + n) + 2, r - 2),
                           Rational(2 * n + 1 - g),
                           n + 1,
                           p.g,
                           true};
    step.successor = next;
  }
  return step;
}

InductionStep induction_step(const PropertyQuintuple& p) {
  InductionStep step = evaluate_step(p);
  if (!step.all_conditions()) {
    std::string list;
    for (const auto& f : step.failed()) list += (list.empty() ? "" : ",") + f;
    throw Error(ErrorCode::kConditionFailed, "conditions failed: {" + list + "}");
  }
  return step;
}

std::vector<InductionStep> run_induction(int r, bool sigma_1_0_nonzero, long last_n) {
  std::vector<InductionStep> chain;
  PropertyQuintuple p = PropertyQuintuple::seed(r, 1, sigma_1_0_nonzero ? 0 : 1);
  // Sigma_{1,0} = 0 forces (1,1) and then (2,1), whose Sigmas are nonzero.
  const long g_one_until = sigma_1_0_nonzero ? 0 : 2;
  for (;;) {
    chain.push_back(evaluate_step(p));
    if (!chain.back().successor) break;  // conditions do not certify this step
    p = *chain.back().successor;
    if (p.n > last_n) break;
    p.g = p.n <= g_one_until ? 1 : 0;
  }
  return chain;
}

// ---------------------------------------------------------------------------

std::vector<LemmaVerdict> verify_partition(const OmegaPartition& partition,
                                           const LemmaContext& ctx, long zk_n) {
  std::vector<LemmaVerdict> out;
  for (const auto& [k, members] : partition.classes) {
    const GapChain chain = make_gap_chain(members, ctx);
    for (auto& v : check_class(chain, ctx)) out.push_back(std::move(v));
    for (std::size_t a = 0; a < chain.members.size(); ++a) {
      for (std::size_t b = a + 1; b < chain.members.size(); ++b) {
        out.push_back(check_pair(chain.members[a], chain.members[b], ctx));
      }
      if (a > 0) out.push_back(check_gap(chain.members[a - 1], chain.members[a], ctx));
    }
    if (ctx.r() >= 7 && chain.members.size() == 3) {
      out.push_back(zk_bound(chain, ctx, zk_n).verdict);
    }
  }
  return out;
}

}  // namespace diagthue
