#include "diagthue/quad_elem.hpp"

#include "diagthue/error.hpp"

namespace diagthue {

std::pair<std::int64_t, std::int64_t> squarefree_part(std::int64_t d) {
  if (d == 0) return {0, 1};
  const std::int64_t sgn = d < 0 ? -1 : 1;
  std::uint64_t rest = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1
                             : static_cast<std::uint64_t>(d);
  std::uint64_t square = 1;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  return {sgn * static_cast<std::int64_t>(rest), static_cast<std::int64_t>(square)};
}

QuadElem::QuadElem(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0) {
    if (b_ != 0) {
      throw Error(ErrorCode::kInvalidInput, "d = 0 requires b = 0");
    }
    return;
  }
  auto [core, square] = squarefree_part(d_);
  b_ *= square;
  d_ = core;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

std::int64_t QuadElem::common_field(const QuadElem& x, const QuadElem& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.b_ == 0 && y.b_ == 0) return x.d_ != 0 ? x.d_ : y.d_;
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  throw Error(ErrorCode::kInvalidInput,
              "mixing elements of Q(sqrt(" + std::to_string(x.d_) + ")) and Q(sqrt(" +
                  std::to_string(y.d_) + "))");
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
  d_ = common_field(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
  d_ = common_field(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
  const std::int64_t d = common_field(*this, rhs);
  Rational a = a_ * rhs.a_ + Rational(d) * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

QuadElem QuadElem::inverse() const {
  const Rational n = norm();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "inverse of zero");
  return QuadElem(a_ / n, -b_ / n, d_, Raw{});
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
  if (rhs.is_rational()) {
    if (rhs.a_ == 0) throw Error(ErrorCode::kInvalidInput, "division by zero");
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

QuadElem QuadElem::pow(unsigned long exponent) const {
  QuadElem result(Rational(1), Rational(0), d_, Raw{});
  QuadElem base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

int QuadElem::sign() const {
  if (!is_real()) {
    throw Error(ErrorCode::kInvalidInput, "sign of a non-real element " + to_string());
  }
  const int sa = sgn(a_);
  const int sb = d_ > 0 ? sgn(b_) : 0;
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs: the larger magnitude wins.
  const int cmp = ::cmp(a_ * a_, Rational(d_) * b_ * b_);
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

QuadElem QuadElem::abs_squared() const {
  if (d_ < 0) return QuadElem(norm());
  return (*this) * (*this);
}

QuadElem QuadElem::abs() const { return sign() < 0 ? -(*this) : *this; }

bool operator==(const QuadElem& lhs, const QuadElem& rhs) {
  if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
  return lhs.b_ == 0 || lhs.d_ == rhs.d_;
}

std::string QuadElem::to_string() const {
  if (b_ == 0) return diagthue::to_string(a_);
  std::string out = a_ == 0 ? "" : diagthue::to_string(a_) + (b_ > 0 ? "+" : "");
  return out + diagthue::to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
}

int compare(const QuadElem& lhs, const QuadElem& rhs) { return (lhs - rhs).sign(); }

}  // namespace diagthue
