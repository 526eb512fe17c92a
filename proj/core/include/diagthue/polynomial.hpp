#pragma once

#include <vector>

#include "diagthue/rational.hpp"

namespace diagthue::poly {

// Dense univariate polynomial, coefficient i multiplies t^i. Trailing zeros
// are trimmed, so the zero polynomial is the empty vector.
using RationalPoly = std::vector<Rational>;
using IntegerPoly = std::vector<Integer>;

void trim(RationalPoly& p);
void trim(IntegerPoly& p);
int degree(const RationalPoly& p);  // -1 for zero
int degree(const IntegerPoly& p);

RationalPoly to_rational(const IntegerPoly& p);
RationalPoly derivative(const RationalPoly& p);
IntegerPoly derivative(const IntegerPoly& p);
// Remainder of exact division; divisor must be nonzero.
RationalPoly remainder(const RationalPoly& dividend, const RationalPoly& divisor);

// Number of distinct real roots, counted with a Sturm sequence.
int count_real_roots(const RationalPoly& p);

// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
Integer determinant(std::vector<std::vector<Integer>> matrix);

// Resultant via the Sylvester matrix.
Integer resultant(const IntegerPoly& f, const IntegerPoly& g);

// (-1)^{n(n-1)/2} Res(f, f') / lead(f), for deg f = n >= 1.
Integer discriminant(const IntegerPoly& f);

}  // namespace diagthue::poly
