#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagthue/forms.hpp"
#include "diagthue/power_product.hpp"

namespace diagthue {

enum class Theorem { kSiegel, kAkssI, kAkssII, kMain };

enum class CaseRow { kDNeg, kDPosEvenIndef, kDPosOddIndef, kDefinite };

std::string_view to_string(CaseRow row);

// Which lower bound on Delta' is tested. `parameter` is l for kSiegel and m
// for kAkssII, unused otherwise.
struct ThresholdSpec {
  Theorem theorem = Theorem::kMain;
  int parameter = 0;
  int r = 7;
  Integer h = 1;

  static ThresholdSpec main(int r, Integer h) { return {Theorem::kMain, 0, r, std::move(h)}; }
  static ThresholdSpec akss_i(int r, Integer h) { return {Theorem::kAkssI, 0, r, std::move(h)}; }
  static ThresholdSpec akss_ii(int m, int r, Integer h) {
    return {Theorem::kAkssII, m, r, std::move(h)};
  }
  static ThresholdSpec siegel(int l, int r, Integer h) {
    return {Theorem::kSiegel, l, r, std::move(h)};
  }

  // "main", "akss1", "akss2:m", "siegel:l"; parse() throws kInvalidInput.
  std::string name() const;
  static ThresholdSpec parse(std::string_view name, int r, Integer h);

  // Siegel's bound is strict (Delta' > T); the others are Delta' >= T.
  bool strict() const { return theorem == Theorem::kSiegel; }
};

// c_1 = 45 + 593/913, c_2 = 6 + 134/4583, c_3 = 75 + 156/167.
Rational siegel_constant(int l);

// Exponents of r and h in the threshold.
struct ThresholdExponents {
  Rational r;
  Rational h;
};

// Throws kParameterOutOfRange outside the theorem's range of r (Siegel's range
// r >= 6 - l is accepted as stated; see range_warning) or when
// (r-1)^{m-1} <= 2r+1 for AKSS_II.
ThresholdExponents threshold_exponents(const ThresholdSpec& spec);
PowerProduct threshold(const ThresholdSpec& spec);

// Non-empty when the parameters are inside the stated range but the range
// itself is suspect (Siegel: r >= 6 - l admits r = 3, 4, 5).
std::optional<std::string> range_warning(const ThresholdSpec& spec);

// Predicted bound on N_F(h) for a case row.
int predicted_bound(const ThresholdSpec& spec, CaseRow row);

struct HypothesisReport {
  ThresholdSpec spec;
  Rational delta_prime;
  PowerProduct threshold;
  Ordering comparison;  // Delta' vs threshold
  bool verdict = false;
  CaseRow case_row = CaseRow::kDNeg;
  int predicted_bound = 0;
  std::vector<std::string> notes;
};

CaseRow case_row(const DiagForm& form);

HypothesisReport check_hypothesis(const DiagForm& form, const Integer& h,
                                  const ThresholdSpec& spec,
                                  const CompareOptions& options = {});

struct ThresholdRow {
  int r;
  Integer h;
  RealBall log10_main;
  RealBall log10_akss_ii_m4;
  RealBall log10_siegel_l1;
  std::string min_theorem;
};

// One row per (r, h), sorted by r then h. Rows are computed in parallel.
// log10 enclosures use `precision` bits; the minimum is decided exactly.
std::vector<ThresholdRow> compare_table(int r_min, int r_max, const std::vector<Integer>& h_values,
                                        mpfr_prec_t precision = 128,
                                        const CompareOptions& options = {});

}  // namespace diagthue
