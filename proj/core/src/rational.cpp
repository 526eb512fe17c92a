#include "diagthue/rational.hpp"

#include <limits>

#include "diagthue/error.hpp"

namespace diagthue {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kNotIntegral: return "NotIntegral";
    case ErrorCode::kDegenerateForm: return "DegenerateForm";
    case ErrorCode::kZeroValue: return "ZeroValue";
    case ErrorCode::kNotPrimitive: return "NotPrimitive";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kDigitBudgetExceeded: return "DigitBudgetExceeded";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kSameSolution: return "SameSolution";
    case ErrorCode::kWrongClassSize: return "WrongClassSize";
    case ErrorCode::kConditionFailed: return "ConditionFailed";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

namespace {

bool valid_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (!valid_integer_text(text)) {
    throw Error(ErrorCode::kInvalidInput,
                "not an integer: \"" + std::string(text) + "\"");
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view() : text.substr(first);
  text = text.substr(0, text.find_last_not_of(" \t") + 1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::kInvalidInput,
                "signed denominator in \"" + std::string(text) + "\"");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return frac(num, den);
}

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

int sign(const Integer& value) { return sgn(value); }
int sign(const Rational& value) { return sgn(value); }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw Error(ErrorCode::kInvalidInput, "zero raised to a negative power");
    }
    return pow(Rational(1) / base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return frac(pow(base.get_num(), e), pow(base.get_den(), e));
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

Rational abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer isqrt(const Integer& n, bool* exact) {
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "isqrt of a negative integer");
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (exact != nullptr) *exact = (rem == 0);
  return root;
}

bool fits_int64(const Integer& value) {
  static const Integer kMin(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer kMax(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value >= kMin && value <= kMax;
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) {
    throw Error(ErrorCode::kInvalidInput, "integer does not fit in 64 bits");
  }
  return std::stoll(value.get_str(10));
}

}  // namespace diagthue
