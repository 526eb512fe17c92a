#include "diagthue/forms.hpp"

#include <array>

#include "diagthue/error.hpp"
#include "diagthue/polynomial.hpp"

namespace diagthue {

IntBinaryForm::IntBinaryForm(int r, std::vector<Integer> coeffs)
    : r_(r), coeffs_(std::move(coeffs)) {
  if (r_ < 1) throw Error(ErrorCode::kInvalidInput, "form degree must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(r_) + 1) {
    throw Error(ErrorCode::kInvalidInput, "a degree-" + std::to_string(r_) +
                                              " form needs " + std::to_string(r_ + 1) +
                                              " coefficients");
  }
  bool all_zero = true;
  for (const auto& c : coeffs_) all_zero = all_zero && c == 0;
  if (all_zero) throw Error(ErrorCode::kInvalidInput, "form is identically zero");
}

Integer IntBinaryForm::evaluate(const Integer& x, const Integer& y) const {
  // ((c0 x + c1 y) x + c2 y^2) x + ...
  Integer acc = coeffs_[0];
  Integer ypow = 1;
  for (int k = 1; k <= r_; ++k) {
    ypow *= y;
    acc *= x;
    acc += coeffs_[k] * ypow;
  }
  return acc;
}

Integer IntBinaryForm::evaluate(std::int64_t x, std::int64_t y) const {
  return evaluate(Integer(static_cast<long>(x)), Integer(static_cast<long>(y)));
}

IntBinaryForm IntBinaryForm::swapped() const {
  return IntBinaryForm(r_, std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

IntBinaryForm IntBinaryForm::shear(const Integer& s) const {
  std::vector<Integer> out(coeffs_.size(), Integer(0));
  for (int i = 0; i <= r_; ++i) {
    Integer spow = 1;
    for (int k = i; k <= r_; ++k) {
      out[i] += coeffs_[k] * binomial(k, i) * spow;
      spow *= s;
    }
  }
  return IntBinaryForm(r_, std::move(out));
}

namespace {

std::int64_t common_d(std::initializer_list<const QuadElem*> elems) {
  std::int64_t d = 0;
  for (const QuadElem* e : elems) {
    if (e->is_rational()) continue;
    if (d != 0 && e->d() != d) {
      throw Error(ErrorCode::kInvalidInput, "coefficients live in different quadratic fields");
    }
    d = e->d();
  }
  return d;
}

IntBinaryForm expand_coefficients(int r, const QuadElem& alpha, const QuadElem& beta,
                                  const QuadElem& gamma, const QuadElem& delta) {
  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    const auto ku = static_cast<unsigned long>(k);
    const auto rest = static_cast<unsigned long>(r - k);
    const QuadElem c = QuadElem(Rational(binomial(r, ku))) *
                       (alpha.pow(rest) * beta.pow(ku) - gamma.pow(rest) * delta.pow(ku));
    if (!c.is_integer()) {
      throw Error(ErrorCode::kNotIntegral, "coefficient of x^" + std::to_string(r - k) + " y^" +
                                               std::to_string(k) + " is " + c.to_string() +
                                               ", not a rational integer");
    }
    coeffs.push_back(c.a().get_num());
  }
  return IntBinaryForm(r, std::move(coeffs));
}

QuadraticFactor factor_quadratic(const QuadElem& alpha, const QuadElem& beta,
                                 const QuadElem& gamma, const QuadElem& delta) {
  const std::array<QuadElem, 3> p = {alpha * gamma, alpha * delta + beta * gamma, beta * delta};
  std::size_t lead = 0;
  while (lead < 3 && p[lead].is_zero()) ++lead;
  if (lead == 3) throw Error(ErrorCode::kDegenerateForm, "uv vanishes identically");

  std::array<Rational, 3> ratio;
  for (std::size_t i = 0; i < 3; ++i) {
    const QuadElem q = p[i] / p[lead];
    if (!q.is_rational()) {
      throw Error(ErrorCode::kInvalidInput,
                  "uv is not a constant multiple of a rational quadratic form");
    }
    ratio[i] = q.a();
  }
  Integer den = 1;
  for (const auto& q : ratio) den = lcm(den, q.get_den());
  std::array<Integer, 3> n;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    n[i] = ratio[i].get_num() * (den / ratio[i].get_den());
    g = gcd(g, n[i]);
  }
  for (auto& c : n) c /= g;  // ratio[lead] == 1, so n[lead] > 0

  QuadraticFactor out;
  out.A = n[0];
  out.B = n[1];
  out.C = n[2];
  out.D = out.B * out.B - 4 * out.A * out.C;
  out.chi = p[lead] / QuadElem(Rational(n[lead]));
  return out;
}

}  // namespace

DiagForm::DiagForm(int r, QuadElem alpha, QuadElem beta, QuadElem gamma, QuadElem delta)
    : r_(r),
      d_(common_d({&alpha, &beta, &gamma, &delta})),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(std::move(delta)),
      j_(alpha_ * delta_ - beta_ * gamma_),
      quadratic_(),
      expanded_(1, {Integer(1), Integer(0)}) {
  if (r_ < 3) throw Error(ErrorCode::kInvalidInput, "r must be at least 3");
  if (j_.is_zero()) throw Error(ErrorCode::kDegenerateForm, "j = alpha*delta - beta*gamma = 0");
  expanded_ = expand_coefficients(r_, alpha_, beta_, gamma_, delta_);
  quadratic_ = factor_quadratic(alpha_, beta_, gamma_, delta_);
  if (!(quadratic_.chi * quadratic_.chi).is_rational()) {
    throw Error(ErrorCode::kInvalidInput,
                "chi^2 is irrational (chi = " + quadratic_.chi.to_string() + ")");
  }
  if (quadratic_.D == 0) throw Error(ErrorCode::kDegenerateForm, "D = B^2 - 4AC = 0");
}

QuadElem DiagForm::u(const Integer& x, const Integer& y) const {
  return alpha_ * QuadElem(Rational(x)) + beta_ * QuadElem(Rational(y));
}

QuadElem DiagForm::v(const Integer& x, const Integer& y) const {
  return gamma_ * QuadElem(Rational(x)) + delta_ * QuadElem(Rational(y));
}

IntBinaryForm expand(const DiagForm& form) { return form.expanded(); }

Integer closed_form_discriminant(const DiagForm& form) {
  const long r = form.r();
  const QuadElem j2 = form.j() * form.j();
  if (!j2.is_rational()) {
    throw Error(ErrorCode::kNotIntegral, "j^2 is irrational; Delta is not rational");
  }
  Rational delta = pow(j2.a(), r * (r - 1) / 2) * Rational(pow(Integer(r), static_cast<unsigned long>(r)));
  if (((r - 1) * (r + 2) / 2) % 2 != 0) delta = -delta;
  if (!is_integer(delta)) {
    throw Error(ErrorCode::kNotIntegral, "closed-form Delta = " + to_string(delta) +
                                             " is not an integer");
  }
  return delta.get_num();
}

InvariantSet invariants(const DiagForm& form, const Integer& h) {
  if (h < 1) throw Error(ErrorCode::kInvalidInput, "h must be at least 1");
  const long r = form.r();
  InvariantSet out;
  out.j = form.j();
  out.chi = form.quadratic().chi;
  out.A = form.quadratic().A;
  out.B = form.quadratic().B;
  out.C = form.quadratic().C;
  out.D = form.quadratic().D;
  out.Delta = closed_form_discriminant(form);
  const Integer denom = pow(Integer(2), static_cast<unsigned long>(r * r - r)) *
                        pow(Integer(r), static_cast<unsigned long>(r)) *
                        pow(h, static_cast<unsigned long>(2 * r - 2));
  out.DeltaPrime = frac(abs(out.Delta), denom);
  out.DeltaPrime.canonicalize();
  out.j_abs_squared = abs((form.j() * form.j()).a());
  return out;
}

Integer resultant_discriminant(const IntBinaryForm& f_in) {
  IntBinaryForm f = f_in;
  Integer s = 0;
  while (f.coeffs().front() == 0) {
    // F(x, y + s x) has leading coefficient F(1, s); some s <= r works.
    s += 1;
    f = f_in.shear(s);
  }
  const int r = f.degree();
  poly::IntegerPoly univariate(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) univariate[i] = f.coeffs()[r - i];
  return poly::discriminant(univariate);
}

std::string to_string(const FormClass& cls) {
  return std::string(cls.definite ? "definite" : "indefinite") + "/" +
         (cls.even_degree ? "even" : "odd");
}

FormClass classify(const IntBinaryForm& f) {
  FormClass out{false, f.degree() % 2 == 0};
  if (!out.even_degree) return out;
  const auto& c = f.coeffs();
  if (sgn(c.front()) * sgn(c.back()) <= 0) return out;
  poly::RationalPoly univariate(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) univariate[i] = Rational(c[c.size() - 1 - i]);
  out.definite = poly::count_real_roots(univariate) == 0;
  return out;
}

}  // namespace diagthue
