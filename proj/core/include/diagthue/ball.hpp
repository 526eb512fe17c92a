#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "diagthue/quad_elem.hpp"
#include "diagthue/rational.hpp"

namespace diagthue {

// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  // Decimal rendering with `digits` significant digits, rounded with `rnd`.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

// A certified real enclosure [lower, upper] with endpoints at `precision` bits.
//
// Every operation rounds the lower endpoint toward -inf and the upper toward
// +inf, so the exact result of the operation on any points of the operands
// lies inside the output. Unbounded endpoints are allowed (e.g. after dividing
// by an enclosure of zero); such a ball never certifies a sign.
class RealBall {
 public:
  explicit RealBall(mpfr_prec_t precision);
  RealBall(const Rational& value, mpfr_prec_t precision);

  static RealBall whole_line(mpfr_prec_t precision);
  static RealBall pi(mpfr_prec_t precision);
  // sqrt(q) for q >= 0.
  static RealBall sqrt_of(const Rational& q, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return lo_.precision(); }
  const BigFloat& lower() const { return lo_; }
  const BigFloat& upper() const { return hi_; }

  BigFloat center() const;
  // max(upper - center, center - lower), rounded up.
  BigFloat radius() const;

  bool is_exact() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }
  bool is_bounded() const;
  bool contains(const Rational& value) const;
  bool contains_zero() const;
  // +1 / -1 when the enclosure excludes zero, nullopt otherwise.
  std::optional<int> sign() const;
  bool certainly_positive() const { return sign() == 1; }
  bool certainly_negative() const { return sign() == -1; }
  // Intervals overlap.
  bool overlaps(const RealBall& other) const;

  RealBall operator-() const;
  friend RealBall operator+(const RealBall& x, const RealBall& y);
  friend RealBall operator-(const RealBall& x, const RealBall& y);
  friend RealBall operator*(const RealBall& x, const RealBall& y);
  friend RealBall operator/(const RealBall& x, const RealBall& y);

  RealBall square() const;
  RealBall abs() const;
  RealBall sqrt() const;
  // n-th root of a nonnegative enclosure.
  RealBall root(unsigned long n) const;
  RealBall pow(unsigned long n) const;
  RealBall log() const;
  RealBall exp() const;
  // x^e for x > 0 and rational e, via exp(e * log x).
  RealBall pow(const Rational& exponent) const;
  RealBall cos() const;
  RealBall sin() const;

  static RealBall max(const RealBall& x, const RealBall& y);

 private:
  BigFloat lo_;
  BigFloat hi_;
  void fix_nan();
};

// A certified complex enclosure stored as a rectangle of two real balls.
// radius() reports a disk radius that covers the rectangle.
class Ball {
 public:
  explicit Ball(mpfr_prec_t precision) : re_(precision), im_(precision) {}
  Ball(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Ball(RealBall re);

  mpfr_prec_t precision() const { return re_.precision(); }
  const RealBall& real() const { return re_; }
  const RealBall& imag() const { return im_; }

  BigFloat center_real() const { return re_.center(); }
  BigFloat center_imag() const { return im_.center(); }
  BigFloat radius() const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

  Ball conj() const { return Ball(re_, -im_); }
  RealBall norm() const { return re_.square() + im_.square(); }
  RealBall abs() const { return norm().sqrt(); }

  friend Ball operator+(const Ball& x, const Ball& y);
  friend Ball operator-(const Ball& x, const Ball& y);
  friend Ball operator*(const Ball& x, const Ball& y);
  friend Ball operator/(const Ball& x, const Ball& y);

  // exp(i*pi*q) for rational q.
  static Ball unit_root(const Rational& turns_of_pi, mpfr_prec_t precision);

 private:
  RealBall re_;
  RealBall im_;
};

// Certified enclosure of x under the complex embedding (sqrt(d) -> i*sqrt(|d|)
// for d < 0). Radius is zero whenever the value is representable.
Ball embed(const QuadElem& x, mpfr_prec_t precision);
// Real enclosure of a real element.
RealBall embed_real(const QuadElem& x, mpfr_prec_t precision);

}  // namespace diagthue
