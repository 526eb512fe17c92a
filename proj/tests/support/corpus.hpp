#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diagthue/forms.hpp"

namespace diagthue::testing {

struct NamedForm {
  std::string name;
  DiagForm form;
};

// Integer quadruple: (alpha x + beta y)^r - (gamma x + delta y)^r.
std::optional<DiagForm> rational_family(int r, long a, long b, long c, long d);

// Odd r: u = sqrt(d)(p x + (q + s sqrt(d)) y), v = sqrt(d)(p x + (q - s sqrt(d)) y).
std::optional<DiagForm> odd_sqrt_family(int r, std::int64_t d, long p, long q, long s);

// Even r: u = sqrt(d)(p1 x + q1 y), v = p2 x + q2 y.
std::optional<DiagForm> even_sqrt_family(int r, std::int64_t d, long p1, long q1, long p2, long q2);

// r = 2 mod 4, d = -1: u = (1+i)(p x + (q + s i) y), v = (1+i)(p x + (q - s i) y).
std::optional<DiagForm> gaussian_twist_family(int r, long p, long q, long s);

// Odd r: u = A, v = -conj(A) with A = (p1 + p2 sqrt(d)) x + (q1 + q2 sqrt(d)) y.
std::optional<DiagForm> trace_family(int r, std::int64_t d, long p1, long p2, long q1, long q2);

// (x + k y)^r - (x - k y)^r: j = -2k, large |j| for large k.
DiagForm large_j_form(const Integer& k, int r = 7);

// `count` random valid forms over the given degrees and d values (d = 0 means
// the rational family), reproducible from `seed`.
std::vector<DiagForm> random_forms(std::uint64_t seed, std::size_t count,
                                   const std::vector<int>& degrees,
                                   const std::vector<std::int64_t>& ds, long coeff_bound = 4);

// The fixed corpus used by the lemma sweep and the classification checks:
// every family, r in 7..10, with small coefficients.
std::vector<NamedForm> lemma_corpus();

}  // namespace diagthue::testing
