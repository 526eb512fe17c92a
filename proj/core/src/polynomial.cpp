#include "diagthue/polynomial.hpp"

#include <utility>

#include "diagthue/error.hpp"

namespace diagthue::poly {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(IntegerPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPoly& p) {
  RationalPoly q = p;
  trim(q);
  return static_cast<int>(q.size()) - 1;
}

int degree(const IntegerPoly& p) {
  IntegerPoly q = p;
  trim(q);
  return static_cast<int>(q.size()) - 1;
}

RationalPoly to_rational(const IntegerPoly& p) {
  RationalPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  trim(out);
  return out;
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

IntegerPoly derivative(const IntegerPoly& p) {
  IntegerPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

RationalPoly remainder(const RationalPoly& dividend, const RationalPoly& divisor) {
  RationalPoly r = dividend;
  RationalPoly d = divisor;
  trim(r);
  trim(d);
  if (d.empty()) throw Error(ErrorCode::kInvalidInput, "polynomial division by zero");
  while (r.size() >= d.size()) {
    const Rational factor = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= factor * d[i];
    r.pop_back();
    trim(r);
  }
  return r;
}

namespace {

// Sign of p at +inf (or -inf when `negative_infinity`).
int sign_at_infinity(const RationalPoly& p, bool negative_infinity) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (negative_infinity && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const RationalPoly& p_in) {
  RationalPoly p = p_in;
  trim(p);
  if (p.empty()) throw Error(ErrorCode::kInvalidInput, "root count of the zero polynomial");
  if (p.size() == 1) return 0;
  std::vector<RationalPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    RationalPoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  // A repeated root leaves a nonconstant last element; dividing it out is not
  // needed because the sign-change count at +-inf still counts distinct roots.
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    at_neg.push_back(sign_at_infinity(q, true));
    at_pos.push_back(sign_at_infinity(q, false));
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntegerPoly& f_in, const IntegerPoly& g_in) {
  IntegerPoly f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1;  // deg f
  const std::size_t n = g.size() - 1;  // deg g
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> sylvester(size, std::vector<Integer>(size, Integer(0)));
  // Rows list coefficients from the leading one down.
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) sylvester[row][row + i] = f[m - i];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) sylvester[n + row][row + i] = g[n - i];
  }
  return determinant(std::move(sylvester));
}

Integer discriminant(const IntegerPoly& f_in) {
  IntegerPoly f = f_in;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "discriminant needs degree >= 1");
  Integer res = resultant(f, derivative(f));
  Integer out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.back().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) out = -out;
  return out;
}

}  // namespace diagthue::poly
