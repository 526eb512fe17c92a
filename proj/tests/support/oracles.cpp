#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <set>
#include <tuple>

namespace diagthue::testing {

Integer evaluate_by_powers(const IntBinaryForm& f, const Integer& x, const Integer& y) {
  const int r = f.degree();
  Integer total = 0;
  for (int k = 0; k <= r; ++k) {
    total += f.coeffs()[static_cast<std::size_t>(k)] * pow(x, static_cast<unsigned long>(r - k)) *
             pow(y, static_cast<unsigned long>(k));
  }
  return total;
}

std::vector<IntSolution> naive_solutions(const IntBinaryForm& f, const Integer& h, long H) {
  std::set<std::tuple<long, long>> seen;
  std::vector<IntSolution> out;
  for (long x = -H; x <= H; ++x) {
    for (long y = -H; y <= H; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(x, y) != 1) continue;
      const Integer value = evaluate_by_powers(f, Integer(x), Integer(y));
      if (value == 0 || abs(value) > h) continue;
      long rx = x, ry = y;
      if (rx < 0 || (rx == 0 && ry < 0)) {
        rx = -rx;
        ry = -ry;
      }
      if (!seen.insert({rx, ry}).second) continue;
      out.push_back({Integer(rx), Integer(ry), evaluate_by_powers(f, Integer(rx), Integer(ry))});
    }
  }
  std::sort(out.begin(), out.end(), [](const IntSolution& a, const IntSolution& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  return out;
}

std::complex<long double> to_complex(const QuadElem& x) {
  const long double a = x.a().get_d();
  const long double b = x.b().get_d();
  if (x.d() >= 0) return {a + b * std::sqrt(static_cast<long double>(x.d())), 0.0L};
  return {a, b * std::sqrt(static_cast<long double>(-x.d()))};
}

std::optional<int> nearest_root_by_angle(const QuadElem& u, const QuadElem& v, int r,
                                         long double guard) {
  if (u.is_zero() || v.is_zero()) return std::nullopt;
  const std::complex<long double> w = to_complex(u) / to_complex(v);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  long double theta = std::atan2(w.imag(), w.real());
  if (theta < 0) theta += two_pi;
  const long double steps = theta * r / two_pi;  // arc position in units of 2 pi / r
  const long double frac = steps - std::floor(steps);
  if (std::fabs(frac - 0.5L) * two_pi / r < guard) return std::nullopt;
  long k = std::lround(steps) % r;
  return k == 0 ? r : static_cast<int>(k);
}

}  // namespace diagthue::testing
