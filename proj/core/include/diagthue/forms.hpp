#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagthue/quad_elem.hpp"
#include "diagthue/rational.hpp"

namespace diagthue {

// A binary form with integer coefficients; coeffs[k] multiplies x^{r-k} y^k.
class IntBinaryForm {
 public:
  IntBinaryForm(int r, std::vector<Integer> coeffs);

  int degree() const { return r_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer evaluate(const Integer& x, const Integer& y) const;
  Integer evaluate(std::int64_t x, std::int64_t y) const;

  // F(y, x).
  IntBinaryForm swapped() const;
  // F(x, y + s x).
  IntBinaryForm shear(const Integer& s) const;

  friend bool operator==(const IntBinaryForm&, const IntBinaryForm&) = default;

 private:
  int r_;
  std::vector<Integer> coeffs_;
};

// uv = chi * (A x^2 + B xy + C y^2) with gcd(A, B, C) = 1 and the first nonzero
// of (A, B, C) positive.
struct QuadraticFactor {
  QuadElem chi;
  Integer A, B, C;
  Integer D;  // B^2 - 4AC
};

// F = (alpha x + beta y)^r - (gamma x + delta y)^r over a common Q(sqrt(d)).
// Construction validates j != 0, integrality of the expansion and rationality
// of chi^2, so every DiagForm in existence expands to an integer form.
class DiagForm {
 public:
  DiagForm(int r, QuadElem alpha, QuadElem beta, QuadElem gamma, QuadElem delta);

  int r() const { return r_; }
  std::int64_t d() const { return d_; }
  const QuadElem& alpha() const { return alpha_; }
  const QuadElem& beta() const { return beta_; }
  const QuadElem& gamma() const { return gamma_; }
  const QuadElem& delta() const { return delta_; }

  // alpha*delta - beta*gamma.
  const QuadElem& j() const { return j_; }
  const QuadraticFactor& quadratic() const { return quadratic_; }
  const IntBinaryForm& expanded() const { return expanded_; }

  QuadElem u(const Integer& x, const Integer& y) const;
  QuadElem v(const Integer& x, const Integer& y) const;

 private:
  int r_;
  std::int64_t d_;
  QuadElem alpha_, beta_, gamma_, delta_;
  QuadElem j_;
  QuadraticFactor quadratic_;
  IntBinaryForm expanded_;
};

IntBinaryForm expand(const DiagForm& form);

struct InvariantSet {
  QuadElem j;
  QuadElem chi;
  Integer A, B, C, D;
  Integer Delta;
  Rational DeltaPrime;
  // |j|^2, always rational for a valid form.
  Rational j_abs_squared;
};

// Delta from the closed formula (-1)^{(r-1)(r+2)/2} r^r j^{r(r-1)};
// Delta' = |Delta| / (2^{r^2-r} r^r h^{2r-2}).
InvariantSet invariants(const DiagForm& form, const Integer& h);

// The closed-formula discriminant on its own.
Integer closed_form_discriminant(const DiagForm& form);

// Binary-form discriminant computed from the coefficients alone, through the
// resultant of F(t, 1) (after a unimodular shear if its leading coefficient
// vanishes).
Integer resultant_discriminant(const IntBinaryForm& f);

struct FormClass {
  bool definite;
  bool even_degree;
};

std::string to_string(const FormClass& cls);

// Definite iff r is even, F(1,0) F(0,1) > 0 and F(t,1) has no real root.
FormClass classify(const IntBinaryForm& f);

}  // namespace diagthue
