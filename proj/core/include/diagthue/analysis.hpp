#pragma once

#include <map>
#include <optional>
#include <vector>

#include "diagthue/ball.hpp"
#include "diagthue/config.hpp"
#include "diagthue/forms.hpp"
#include "diagthue/quad_elem.hpp"

namespace diagthue {

// Which r-th root of unity a solution is related to: the k in {1..r}
// minimizing |u - v e^{2 pi i k / r}|.
struct RootRelation {
  int omega_index = 0;
  bool tie_flag = false;
  // 0 when decided by exact arithmetic alone.
  mpfr_prec_t certified_bits = 0;
};

// A primitive solution together with the functionals u, v, xi = u^r,
// eta = v^r, mu = eta/xi, Z = max(|u|, |v|) and zeta = |F| / Z^r.
//
// Z and zeta are kept exactly through their squares (always real elements of
// Q(sqrt(d))); Z_exact / zeta_exact are present whenever u and v are real.
struct SolutionRecord {
  Integer x, y;
  Integer F_value;
  QuadElem u, v, xi, eta;
  QuadElem Z_squared;
  std::optional<QuadElem> Z_exact;
  QuadElem zeta_squared;
  std::optional<QuadElem> zeta_exact;
  std::optional<QuadElem> mu;      // absent when xi = 0 (pole)
  std::optional<QuadElem> mu_inv;  // absent when eta = 0
  std::optional<int> epsilon;      // 0 if mu > 0, 1 if mu < 0; D > 0 only
  int D_sign = 0;
  int omega_index = 0;
  bool tie_flag = false;
  mpfr_prec_t precision = 64;      // precision used for reported balls
  mpfr_prec_t certified_bits = 0;  // precision that certified omega_index

  RealBall Z(mpfr_prec_t bits) const;
  RealBall zeta(mpfr_prec_t bits) const;
  // |u|, |v| as enclosures.
  RealBall abs_u(mpfr_prec_t bits) const;
  RealBall abs_v(mpfr_prec_t bits) const;
};

// Computes every functional for (x, y); (x, y) is first replaced by the
// representative of {(x, y), (-x, -y)} with x > 0, or x = 0 and y > 0.
// Throws kNotPrimitive for gcd(x, y) != 1 and kZeroValue when F(x, y) = 0.
SolutionRecord solution_profile(const DiagForm& form, const Integer& x, const Integer& y,
                                const PrecisionPolicy& policy = {});

// Certified nearest-root classification. Ties are detected exactly (u/v has
// (u/v)^r a negative real) and resolved to the lower end of the arc, as are
// the degenerate cases u = 0 and v = 0 (omega = 1, i.e. index r, tie_flag set).
RootRelation related_root(const QuadElem& u, const QuadElem& v, int r,
                          const PrecisionPolicy& policy = {});
RootRelation related_root(const SolutionRecord& rec, int r, const PrecisionPolicy& policy = {});

// Solutions grouped by omega_index; each class sorted by zeta descending,
// ties broken by (|x|, |y|, sign(xy)) ascending.
struct OmegaPartition {
  std::map<int, std::vector<SolutionRecord>> classes;

  std::size_t total() const;
};

OmegaPartition partition(const DiagForm& form, std::vector<SolutionRecord> solutions);

// True when a should precede b inside an omega class.
bool zeta_order_before(const SolutionRecord& a, const SolutionRecord& b);

}  // namespace diagthue
