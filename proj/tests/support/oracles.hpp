#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "diagthue/forms.hpp"
#include "diagthue/solver.hpp"

namespace diagthue::testing {

// F(x, y) as sum c_k x^{r-k} y^k with explicit powers (no Horner).
Integer evaluate_by_powers(const IntBinaryForm& f, const Integer& x, const Integer& y);

// Double loop over the whole box, every sign, no pruning and no threads;
// keeps the representative with x > 0 or x = 0, y > 0 and sorts
// lexicographically.
std::vector<IntSolution> naive_solutions(const IntBinaryForm& f, const Integer& h, long H);

// Nearest r-th root of unity by floating-point argument, in {1..r}; nullopt
// when u/v is within `guard` radians of an arc bisector (or u, v vanish).
std::optional<int> nearest_root_by_angle(const QuadElem& u, const QuadElem& v, int r,
                                         long double guard = 1e-9L);

// Complex value of a field element (sqrt(d) -> i sqrt(|d|) for d < 0).
std::complex<long double> to_complex(const QuadElem& x);

}  // namespace diagthue::testing
