#include "diagthue/ball.hpp"

#include <array>
#include <cstdlib>
#include <utility>

#include "diagthue/error.hpp"

namespace diagthue {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*R*g", digits, rnd, value_) < 0 || raw == nullptr) {
    return "nan";
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

// ---------------------------------------------------------------------------
// RealBall

RealBall::RealBall(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

RealBall::RealBall(const Rational& value, mpfr_prec_t precision)
    : lo_(precision), hi_(precision) {
  mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

RealBall RealBall::whole_line(mpfr_prec_t precision) {
  RealBall out(precision);
  mpfr_set_inf(out.lo_.get(), -1);
  mpfr_set_inf(out.hi_.get(), 1);
  return out;
}

RealBall RealBall::pi(mpfr_prec_t precision) {
  RealBall out(precision);
  mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::sqrt_of(const Rational& q, mpfr_prec_t precision) {
  return RealBall(q, precision).sqrt();
}

void RealBall::fix_nan() {
  if (mpfr_nan_p(lo_.get())) mpfr_set_inf(lo_.get(), -1);
  if (mpfr_nan_p(hi_.get())) mpfr_set_inf(hi_.get(), 1);
}

BigFloat RealBall::center() const {
  BigFloat mid(precision());
  if (!is_bounded()) {
    mpfr_set_zero(mid.get(), 1);
    return mid;
  }
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid;
}

BigFloat RealBall::radius() const {
  BigFloat rad(precision());
  if (!is_bounded()) {
    mpfr_set_inf(rad.get(), 1);
    return rad;
  }
  const BigFloat mid = center();
  BigFloat other(precision());
  mpfr_sub(rad.get(), hi_.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(other.get(), mid.get(), lo_.get(), MPFR_RNDU);
  mpfr_max(rad.get(), rad.get(), other.get(), MPFR_RNDU);
  return rad;
}

bool RealBall::is_bounded() const {
  return mpfr_number_p(lo_.get()) && mpfr_number_p(hi_.get());
}

bool RealBall::contains(const Rational& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.get(), value.get_mpq_t()) >= 0;
}

bool RealBall::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

std::optional<int> RealBall::sign() const {
  if (mpfr_sgn(lo_.get()) > 0) return 1;
  if (mpfr_sgn(hi_.get()) < 0) return -1;
  return std::nullopt;
}

bool RealBall::overlaps(const RealBall& other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) &&
         mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

RealBall RealBall::operator-() const {
  RealBall out(precision());
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

namespace {

mpfr_prec_t joint_precision(const RealBall& x, const RealBall& y) {
  return std::max(x.precision(), y.precision());
}

}  // namespace

RealBall operator+(const RealBall& x, const RealBall& y) {
  RealBall out(joint_precision(x, y));
  mpfr_add(out.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  out.fix_nan();
  return out;
}

RealBall operator-(const RealBall& x, const RealBall& y) {
  RealBall out(joint_precision(x, y));
  mpfr_sub(out.lo_.get(), x.lo_.get(), y.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), x.hi_.get(), y.lo_.get(), MPFR_RNDU);
  out.fix_nan();
  return out;
}

RealBall operator*(const RealBall& x, const RealBall& y) {
  const mpfr_prec_t prec = joint_precision(x, y);
  RealBall out(prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners = {{
      {x.lo_.get(), y.lo_.get()},
      {x.lo_.get(), y.hi_.get()},
      {x.hi_.get(), y.lo_.get()},
      {x.hi_.get(), y.hi_.get()},
  }};
  BigFloat down(prec), up(prec);
  bool first = true;
  bool nan = false;
  for (const auto& [a, b] : corners) {
    mpfr_mul(down.get(), a, b, MPFR_RNDD);
    mpfr_mul(up.get(), a, b, MPFR_RNDU);
    if (mpfr_nan_p(down.get()) || mpfr_nan_p(up.get())) {
      nan = true;
      continue;
    }
    if (first || mpfr_less_p(down.get(), out.lo_.get())) {
      mpfr_set(out.lo_.get(), down.get(), MPFR_RNDD);
    }
    if (first || mpfr_greater_p(up.get(), out.hi_.get())) {
      mpfr_set(out.hi_.get(), up.get(), MPFR_RNDU);
    }
    first = false;
  }
  if (nan) return RealBall::whole_line(prec);
  return out;
}

RealBall operator/(const RealBall& x, const RealBall& y) {
  const mpfr_prec_t prec = joint_precision(x, y);
  if (y.contains_zero()) return RealBall::whole_line(prec);
  RealBall recip(prec);
  mpfr_ui_div(recip.lo_.get(), 1, y.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(recip.hi_.get(), 1, y.lo_.get(), MPFR_RNDU);
  return x * recip;
}

RealBall RealBall::square() const {
  const RealBall a = abs();
  RealBall out(precision());
  mpfr_sqr(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqr(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  RealBall out(precision());
  mpfr_set_zero(out.lo_.get(), 1);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  mpfr_max(out.hi_.get(), out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::sqrt() const {
  if (mpfr_sgn(hi_.get()) < 0) {
    throw Error(ErrorCode::kInvalidInput, "square root of a negative enclosure");
  }
  RealBall out(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_zero(out.lo_.get(), 1);
  } else {
    mpfr_sqrt(out.lo_.get(), lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::root(unsigned long n) const {
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "zeroth root");
  if (mpfr_sgn(hi_.get()) < 0) {
    throw Error(ErrorCode::kInvalidInput, "root of a negative enclosure");
  }
  RealBall out(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_zero(out.lo_.get(), 1);
  } else {
    mpfr_rootn_ui(out.lo_.get(), lo_.get(), n, MPFR_RNDD);
  }
  mpfr_rootn_ui(out.hi_.get(), hi_.get(), n, MPFR_RNDU);
  return out;
}

RealBall RealBall::pow(unsigned long n) const {
  if (n == 0) return RealBall(Rational(1), precision());
  const RealBall base = (n % 2 == 0) ? abs() : *this;
  RealBall out(precision());
  mpfr_pow_ui(out.lo_.get(), base.lo_.get(), n, MPFR_RNDD);
  mpfr_pow_ui(out.hi_.get(), base.hi_.get(), n, MPFR_RNDU);
  return out;
}

RealBall RealBall::log() const {
  if (mpfr_sgn(hi_.get()) <= 0) {
    throw Error(ErrorCode::kInvalidInput, "logarithm of a nonpositive enclosure");
  }
  RealBall out(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_inf(out.lo_.get(), -1);
  } else {
    mpfr_log(out.lo_.get(), lo_.get(), MPFR_RNDD);
  }
  mpfr_log(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::exp() const {
  RealBall out(precision());
  mpfr_exp(out.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::pow(const Rational& exponent) const {
  if (exponent == 0) return RealBall(Rational(1), precision());
  if (exponent.get_den() == 1 && exponent > 0 && exponent.get_num().fits_ulong_p()) {
    return pow(exponent.get_num().get_ui());
  }
  return (log() * RealBall(exponent, precision())).exp();
}

namespace {

// f(x) for x in [lo, hi] and 1-Lipschitz f bounded by [-1, 1].
template <class Fn>
void lipschitz_unit(const RealBall& x, Fn fn, BigFloat& lo, BigFloat& hi) {
  const mpfr_prec_t prec = x.precision();
  if (!x.is_bounded()) {
    mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    mpfr_set_si(hi.get(), 1, MPFR_RNDU);
    return;
  }
  const BigFloat mid = x.center();
  const BigFloat rad = x.radius();
  fn(lo.get(), mid.get(), MPFR_RNDD);
  fn(hi.get(), mid.get(), MPFR_RNDU);
  if (!mpfr_zero_p(rad.get())) {
    mpfr_sub(lo.get(), lo.get(), rad.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), rad.get(), MPFR_RNDU);
  }
  BigFloat one(prec);
  mpfr_set_si(one.get(), 1, MPFR_RNDN);
  if (mpfr_greater_p(hi.get(), one.get())) mpfr_set(hi.get(), one.get(), MPFR_RNDU);
  mpfr_neg(one.get(), one.get(), MPFR_RNDN);
  if (mpfr_less_p(lo.get(), one.get())) mpfr_set(lo.get(), one.get(), MPFR_RNDD);
}

}  // namespace

RealBall RealBall::cos() const {
  RealBall out(precision());
  lipschitz_unit(*this, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_cos(r, a, rnd); },
                 out.lo_, out.hi_);
  return out;
}

RealBall RealBall::sin() const {
  RealBall out(precision());
  lipschitz_unit(*this, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_sin(r, a, rnd); },
                 out.lo_, out.hi_);
  return out;
}

RealBall RealBall::max(const RealBall& x, const RealBall& y) {
  RealBall out(joint_precision(x, y));
  mpfr_max(out.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_max(out.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return out;
}

// ---------------------------------------------------------------------------
// Ball

Ball::Ball(RealBall re) : re_(std::move(re)), im_(re_.precision()) {}

BigFloat Ball::radius() const {
  const BigFloat rr = re_.radius();
  const BigFloat ri = im_.radius();
  BigFloat out(precision());
  mpfr_hypot(out.get(), rr.get(), ri.get(), MPFR_RNDU);
  return out;
}

Ball operator+(const Ball& x, const Ball& y) { return Ball(x.re_ + y.re_, x.im_ + y.im_); }

Ball operator-(const Ball& x, const Ball& y) { return Ball(x.re_ - y.re_, x.im_ - y.im_); }

Ball operator*(const Ball& x, const Ball& y) {
  return Ball(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
}

Ball operator/(const Ball& x, const Ball& y) {
  const RealBall n = y.norm();
  const Ball num = x * y.conj();
  return Ball(num.re_ / n, num.im_ / n);
}

Ball Ball::unit_root(const Rational& turns_of_pi, mpfr_prec_t precision) {
  // Reduce modulo 2 so the exact quarter turns are recognized.
  const Rational half = turns_of_pi / 2;
  Integer turns;
  mpz_fdiv_q(turns.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
  const Rational t = turns_of_pi - Rational(2 * turns);  // t in [0, 2)
  const Rational twice = 2 * t;
  if (twice.get_den() == 1) {
    const long quarter = twice.get_num().get_si();
    static constexpr int kRe[4] = {1, 0, -1, 0};
    static constexpr int kIm[4] = {0, 1, 0, -1};
    return Ball(RealBall(Rational(kRe[quarter]), precision),
                RealBall(Rational(kIm[quarter]), precision));
  }
  const RealBall angle = RealBall::pi(precision) * RealBall(t, precision);
  return Ball(angle.cos(), angle.sin());
}

Ball embed(const QuadElem& x, mpfr_prec_t precision) {
  const RealBall a(x.a(), precision);
  if (x.b() == 0) return Ball(a);
  const RealBall root = RealBall::sqrt_of(Rational(x.d() < 0 ? -x.d() : x.d()), precision);
  const RealBall part = RealBall(x.b(), precision) * root;
  if (x.d() > 0) return Ball(a + part);
  return Ball(a, part);
}

RealBall embed_real(const QuadElem& x, mpfr_prec_t precision) {
  if (!x.is_real()) {
    throw Error(ErrorCode::kInvalidInput, "embed_real of a non-real element");
  }
  return embed(x, precision).real();
}

}  // namespace diagthue
