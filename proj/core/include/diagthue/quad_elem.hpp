#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "diagthue/rational.hpp"

namespace diagthue {

// An exact element a + b*sqrt(d) of Q(sqrt(d)).
//
// d is kept squarefree and never equal to 1; d == 0 tags a plain rational and
// forces b == 0. For d < 0 the embedding sends sqrt(d) to i*sqrt(|d|), so
// conjugate() is also complex conjugation there.
//
// Elements of different fields may be mixed only when at least one of them is
// rational (b == 0); anything else throws kInvalidInput.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit from Q
  QuadElem(long a) : a_(a) {}                 // NOLINT
  // Rewrites non-squarefree d, e.g. (0, 1, 8) becomes 2*sqrt(2).
  QuadElem(Rational a, Rational b, std::int64_t d);

  static QuadElem sqrt_of(std::int64_t d) { return QuadElem(0, 1, d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // True when the complex embedding is real (d >= 0, or b == 0).
  bool is_real() const { return d_ >= 0 || b_ == 0; }
  bool is_integer() const { return is_rational() && a_.get_den() == 1; }

  QuadElem conjugate() const { return QuadElem(a_, -b_, d_, Raw{}); }
  // x * conjugate(x) = a^2 - d b^2.
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  Rational trace() const { return 2 * a_; }

  // Exact sign of a real element; throws for non-real elements.
  int sign() const;

  // |x|^2 under the complex embedding. Real for every element: x^2 when the
  // element is real, norm() when d < 0.
  QuadElem abs_squared() const;
  // |x| for real elements.
  QuadElem abs() const;

  QuadElem inverse() const;
  QuadElem pow(unsigned long exponent) const;

  QuadElem& operator+=(const QuadElem& rhs);
  QuadElem& operator-=(const QuadElem& rhs);
  QuadElem& operator*=(const QuadElem& rhs);
  QuadElem& operator/=(const QuadElem& rhs);
  QuadElem operator-() const { return QuadElem(-a_, -b_, d_, Raw{}); }

  friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
  friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
  friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
  friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }

  // Componentwise; the field tag is ignored when both elements are rational.
  friend bool operator==(const QuadElem& lhs, const QuadElem& rhs);
  friend bool operator!=(const QuadElem& lhs, const QuadElem& rhs) { return !(lhs == rhs); }

  std::string to_string() const;

 private:
  struct Raw {};
  QuadElem(Rational a, Rational b, std::int64_t d, Raw)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  // Field tag shared by the two operands.
  static std::int64_t common_field(const QuadElem& x, const QuadElem& y);

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

// Exact three-way comparison of two real elements (-1, 0, +1).
int compare(const QuadElem& lhs, const QuadElem& rhs);

// Squarefree decomposition d = s^2 * core; returns {core, s}.
std::pair<std::int64_t, std::int64_t> squarefree_part(std::int64_t d);

}  // namespace diagthue
