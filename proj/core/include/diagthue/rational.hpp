#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace diagthue {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, which is exactly the Rational invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

// num / den in lowest terms; throws kInvalidInput for den = 0. The
// two-argument mpq_class constructor does not canonicalize, so every
// fraction built from parts goes through here.
Rational frac(const Integer& num, const Integer& den);

Integer parse_integer(std::string_view text);

// Accepts "p", "-p", "p/q". The result is canonicalized; q == 0 throws.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

int sign(const Integer& value);
int sign(const Rational& value);

Integer pow(const Integer& base, unsigned long exponent);
// Negative exponents invert; 0^negative throws.
Rational pow(const Rational& base, long exponent);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& value);
Rational abs(const Rational& value);

bool is_integer(const Rational& value);

// Exact binomial coefficient C(n, k).
Integer binomial(unsigned long n, unsigned long k);

// Largest s with s*s <= n for n >= 0; exact flag set when n is a square.
Integer isqrt(const Integer& n, bool* exact = nullptr);

bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

}  // namespace diagthue
