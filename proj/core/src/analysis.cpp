#include "diagthue/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "diagthue/error.hpp"

namespace diagthue {

namespace {

RealBall abs_ball(const QuadElem& value, mpfr_prec_t bits) {
  if (value.is_real()) return embed_real(value, bits).abs();
  return RealBall(value.norm(), bits).sqrt();
}

RealBall sqrt_of_real(const QuadElem& square, mpfr_prec_t bits) {
  return embed_real(square, bits).sqrt();
}

// The value zeta must take when D > 0, written piecewise in mu.
QuadElem zeta_from_mu(const SolutionRecord& rec) {
  if (!rec.mu.has_value() || rec.mu->is_zero()) return QuadElem(1);  // u = 0 or v = 0
  const QuadElem& mu = *rec.mu;
  const int s = mu.sign();
  const int vs_one = compare(mu.abs(), QuadElem(1));
  if (s > 0) return vs_one < 0 ? QuadElem(1) - mu : QuadElem(1) - mu.inverse();
  return vs_one <= 0 ? QuadElem(1) + mu.abs() : QuadElem(1) + mu.inverse().abs();
}

}  // namespace

RealBall SolutionRecord::abs_u(mpfr_prec_t bits) const { return abs_ball(u, bits); }
RealBall SolutionRecord::abs_v(mpfr_prec_t bits) const { return abs_ball(v, bits); }

RealBall SolutionRecord::Z(mpfr_prec_t bits) const {
  if (Z_exact) return embed_real(*Z_exact, bits);
  return sqrt_of_real(Z_squared, bits);
}

RealBall SolutionRecord::zeta(mpfr_prec_t bits) const {
  if (zeta_exact) return embed_real(*zeta_exact, bits);
  return sqrt_of_real(zeta_squared, bits);
}

RootRelation related_root(const QuadElem& u, const QuadElem& v, int r,
                          const PrecisionPolicy& policy) {
  if (r < 1) throw Error(ErrorCode::kInvalidInput, "r must be positive");
  // All r distances coincide: take omega = 1.
  if (u.is_zero() || v.is_zero()) return {r, true, 0};

  const QuadElem w = u / v;
  if (w.is_real()) {
    if (w.sign() > 0) return {r, false, 0};
    if (r % 2 == 0) return {r / 2, false, 0};
    // theta = pi sits on the bisector between k = (r-1)/2 and (r+1)/2.
    return {(r - 1) / 2, true, 0};
  }

  const QuadElem wr = w.pow(static_cast<unsigned long>(r));
  const bool tie = wr.is_real() && wr.sign() < 0;

  for (mpfr_prec_t bits = policy.start_bits;; bits = std::min(bits * 2, policy.max_bits)) {
    const Ball wb = embed(w, bits);
    std::vector<RealBall> dist;
    dist.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      const Ball omega = Ball::unit_root(frac(2 * k, r), bits);
      dist.push_back((wb - omega).norm());
    }
    // Index set `winners` is certified when each of its upper bounds lies below
    // every other lower bound.
    auto separated = [&](int a, int b) {
      for (int k = 0; k < r; ++k) {
        if (k == a || k == b) continue;
        for (int win : {a, b}) {
          if (!mpfr_less_p(dist[win].upper().get(), dist[k].lower().get())) return false;
        }
      }
      return true;
    };
    for (int m = 0; m < r; ++m) {
      const int next = (m + 1) % r;
      if (tie ? separated(m, next) : separated(m, m)) {
        return {m == 0 ? r : m, tie, bits};
      }
    }
    if (bits >= policy.max_bits) break;
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              "related root of u/v = " + w.to_string() + " not certified at " +
                  std::to_string(policy.max_bits) + " bits");
}

RootRelation related_root(const SolutionRecord& rec, int r, const PrecisionPolicy& policy) {
  return related_root(rec.u, rec.v, r, policy);
}

SolutionRecord solution_profile(const DiagForm& form, const Integer& x_in, const Integer& y_in,
                                const PrecisionPolicy& policy) {
  if (gcd(x_in, y_in) != 1) {
    throw Error(ErrorCode::kNotPrimitive,
                "(" + to_string(x_in) + ", " + to_string(y_in) + ") is not primitive");
  }
  SolutionRecord rec;
  const bool flip = x_in < 0 || (x_in == 0 && y_in < 0);
  rec.x = flip ? Integer(-x_in) : x_in;
  rec.y = flip ? Integer(-y_in) : y_in;
  rec.precision = policy.start_bits;

  const int r = form.r();
  const auto ru = static_cast<unsigned long>(r);
  rec.F_value = form.expanded().evaluate(rec.x, rec.y);
  if (rec.F_value == 0) {
    throw Error(ErrorCode::kZeroValue,
                "F(" + to_string(rec.x) + ", " + to_string(rec.y) + ") = 0");
  }
  rec.u = form.u(rec.x, rec.y);
  rec.v = form.v(rec.x, rec.y);
  rec.xi = rec.u.pow(ru);
  rec.eta = rec.v.pow(ru);
  if ((rec.xi - rec.eta) != QuadElem(Rational(rec.F_value))) {
    throw std::logic_error("u^r - v^r disagrees with the expanded form");
  }
  if (!rec.xi.is_zero()) rec.mu = rec.eta / rec.xi;
  if (!rec.eta.is_zero()) rec.mu_inv = rec.xi / rec.eta;

  const QuadElem u2 = rec.u.abs_squared();
  const QuadElem v2 = rec.v.abs_squared();
  const bool u_larger = compare(u2, v2) >= 0;
  rec.Z_squared = u_larger ? u2 : v2;
  const QuadElem F(Rational(rec.F_value));
  rec.zeta_squared = (F * F) / rec.Z_squared.pow(ru);
  if (rec.u.is_real() && rec.v.is_real()) {
    rec.Z_exact = u_larger ? rec.u.abs() : rec.v.abs();
    rec.zeta_exact = F.abs() / rec.Z_exact->pow(ru);
  }

  rec.D_sign = sgn(form.quadratic().D);
  if (rec.D_sign > 0) {
    const bool mu_real = !rec.mu.has_value() || rec.mu->is_real();
    if (mu_real) {
      rec.epsilon = (rec.mu.has_value() && !rec.mu->is_zero() && rec.mu->sign() < 0) ? 1 : 0;
      const QuadElem expected = zeta_from_mu(rec);
      if (expected * expected != rec.zeta_squared) {
        throw std::logic_error("piecewise zeta identity fails at (" + to_string(rec.x) + ", " +
                               to_string(rec.y) + ")");
      }
    }
  }

  const RootRelation rel = related_root(rec.u, rec.v, r, policy);
  rec.omega_index = rel.omega_index;
  rec.tie_flag = rel.tie_flag;
  rec.certified_bits = rel.certified_bits;
  return rec;
}

std::size_t OmegaPartition::total() const {
  std::size_t n = 0;
  for (const auto& [k, members] : classes) n += members.size();
  return n;
}

bool zeta_order_before(const SolutionRecord& a, const SolutionRecord& b) {
  const int c = compare(a.zeta_squared, b.zeta_squared);
  if (c != 0) return c > 0;
  const auto key = [](const SolutionRecord& s) {
    return std::make_tuple(abs(s.x), abs(s.y), sgn(s.x) * sgn(s.y));
  };
  return key(a) < key(b);
}

OmegaPartition partition(const DiagForm& /*form*/, std::vector<SolutionRecord> solutions) {
  OmegaPartition out;
  for (auto& rec : solutions) out.classes[rec.omega_index].push_back(std::move(rec));
  for (auto& [k, members] : out.classes) {
    std::sort(members.begin(), members.end(), zeta_order_before);
  }
  return out;
}

}  // namespace diagthue
