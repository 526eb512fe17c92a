#include "diagthue/thresholds.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <future>
#include <thread>

#include "diagthue/error.hpp"

namespace diagthue {

std::string_view to_string(CaseRow row) {
  switch (row) {
    case CaseRow::kDNeg: return "D_NEG";
    case CaseRow::kDPosEvenIndef: return "D_POS_EVEN_INDEF";
    case CaseRow::kDPosOddIndef: return "D_POS_ODD_INDEF";
    case CaseRow::kDefinite: return "DEFINITE";
  }
  return "?";
}

std::string ThresholdSpec::name() const {
  switch (theorem) {
    case Theorem::kMain: return "main";
    case Theorem::kAkssI: return "akss1";
    case Theorem::kAkssII: return "akss2:" + std::to_string(parameter);
    case Theorem::kSiegel: return "siegel:" + std::to_string(parameter);
  }
  return "?";
}

ThresholdSpec ThresholdSpec::parse(std::string_view name, int r, Integer h) {
  if (name == "main") return main(r, std::move(h));
  if (name == "akss1") return akss_i(r, std::move(h));
  auto parameter = [&](std::string_view prefix) -> std::optional<int> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    const std::string digits(name.substr(prefix.size()));
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::kInvalidInput, "bad theorem parameter in '" + std::string(name) + "'");
    }
    return std::stoi(digits);
  };
  if (auto m = parameter("akss2:")) return akss_ii(*m, r, std::move(h));
  if (auto l = parameter("siegel:")) return siegel(*l, r, std::move(h));
  throw Error(ErrorCode::kInvalidInput,
              "unknown theorem '" + std::string(name) + "' (main, akss1, akss2:m, siegel:l)");
}

Rational siegel_constant(int l) {
  switch (l) {
    case 1: return Rational(45) + frac(593, 913);
    case 2: return Rational(6) + frac(134, 4583);
    case 3: return Rational(75) + frac(156, 167);
  }
  throw Error(ErrorCode::kParameterOutOfRange, "Siegel's l must be 1, 2 or 3");
}

ThresholdExponents threshold_exponents(const ThresholdSpec& spec) {
  const long r = spec.r;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kParameterOutOfRange, spec.name() + " needs " + what);
  };
  require(spec.h >= 1, "h >= 1");
  switch (spec.theorem) {
    case Theorem::kMain:
    case Theorem::kAkssI: {
      require(r >= (spec.theorem == Theorem::kMain ? 7 : 6),
              spec.theorem == Theorem::kMain ? "r >= 7" : "r >= 6");
      const long den = r * r - 5 * r - 2;
      return {frac(13 * r * r * (r - 1), den), frac(4 * (r - 1) * (r * r - r + 2), den)};
    }
    case Theorem::kAkssII: {
      require(r >= 5, "r >= 5");
      require(spec.parameter >= 3, "m >= 3");
      const Integer den = pow(Integer(r - 1), static_cast<unsigned long>(spec.parameter - 1)) -
                          (2 * r + 1);
      require(den > 0, "(r-1)^{m-1} > 2r+1");
      return {frac(Integer(7 * r * r * (r - 1)), den),
              frac(Integer((r - 1) * (r * r + r + 2)), den)};
    }
    case Theorem::kSiegel: {
      const Rational c = siegel_constant(spec.parameter);
      require(r >= 6 - spec.parameter, "r >= 6 - l");
      // (r^4 h)^{c r^{2-l}}
      const Rational e = c * pow(Rational(r), 2 - spec.parameter);
      return {4 * e, e};
    }
  }
  throw Error(ErrorCode::kInvalidInput, "unknown theorem");
}

PowerProduct threshold(const ThresholdSpec& spec) {
  const ThresholdExponents e = threshold_exponents(spec);
  return PowerProduct{{Rational(spec.r), e.r}, {Rational(spec.h), e.h}}.normalized();
}

std::optional<std::string> range_warning(const ThresholdSpec& spec) {
  if (spec.theorem == Theorem::kSiegel && spec.r < 6) {
    return "Siegel's stated range r >= 6 - l admits r = " + std::to_string(spec.r) +
           ", below the r >= 6 implied elsewhere; threshold reported as stated";
  }
  return std::nullopt;
}

int predicted_bound(const ThresholdSpec& spec, CaseRow row) {
  const int r = spec.r;
  const int p = spec.parameter;
  if (row == CaseRow::kDefinite) return 1;
  const int col = row == CaseRow::kDNeg ? 0 : row == CaseRow::kDPosEvenIndef ? 1 : 2;
  switch (spec.theorem) {
    case Theorem::kMain: return std::array{2 * r, 4, 2}[col];
    case Theorem::kAkssI: return std::array{2 * r + 1, 5, 3}[col];
    case Theorem::kAkssII: return std::array{r * p, 2 * p, p}[col];
    case Theorem::kSiegel: return std::array{2 * p * r, 4 * p, 2 * p}[col];
  }
  return 0;
}

CaseRow case_row(const DiagForm& form) {
  if (classify(form.expanded()).definite) return CaseRow::kDefinite;
  if (sign(form.quadratic().D) < 0) return CaseRow::kDNeg;
  return form.r() % 2 == 0 ? CaseRow::kDPosEvenIndef : CaseRow::kDPosOddIndef;
}

HypothesisReport check_hypothesis(const DiagForm& form, const Integer& h,
                                  const ThresholdSpec& spec, const CompareOptions& options) {
  if (h < 1) throw Error(ErrorCode::kInvalidInput, "h must be at least 1");
  ThresholdSpec s = spec;
  s.r = form.r();
  s.h = h;
  HypothesisReport report;
  report.spec = s;
  report.delta_prime = invariants(form, h).DeltaPrime;
  report.threshold = threshold(s);
  report.comparison =
      compare_power_product(PowerProduct::of(report.delta_prime), report.threshold, options);
  report.verdict = s.strict() ? report.comparison == Ordering::kGreater
                              : report.comparison != Ordering::kLess;
  report.case_row = case_row(form);
  report.predicted_bound = predicted_bound(s, report.case_row);
  if (auto w = range_warning(s)) report.notes.push_back(*w);
  if (report.case_row == CaseRow::kDefinite) {
    report.notes.push_back(
        "definite row keyed on computed definiteness (D = " + to_string(form.quadratic().D) +
        "); the theorem tables label it 'D>0' in one statement and 'D<0' in the others");
  }
  return report;
}

std::vector<ThresholdRow> compare_table(int r_min, int r_max, const std::vector<Integer>& h_values,
                                        mpfr_prec_t precision, const CompareOptions& options) {
  if (r_min < 7 || r_max < r_min) {
    throw Error(ErrorCode::kParameterOutOfRange, "table needs 7 <= r_min <= r_max");
  }
  std::vector<Integer> hs = h_values;
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  auto row = [&](int r, const Integer& h) {
    const std::array<std::pair<std::string, PowerProduct>, 3> candidates{{
        {"main", threshold(ThresholdSpec::main(r, h))},
        {"akss2:4", threshold(ThresholdSpec::akss_ii(4, r, h))},
        {"siegel:1", threshold(ThresholdSpec::siegel(1, r, h))},
    }};
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (compare_power_product(candidates[i].second, candidates[best].second, options) ==
          Ordering::kLess) {
        best = i;
      }
    }
    return ThresholdRow{r,
                        h,
                        candidates[0].second.log10(precision),
                        candidates[1].second.log10(precision),
                        candidates[2].second.log10(precision),
                        candidates[best].first};
  };
  std::vector<std::pair<int, Integer>> keys;
  for (int r = r_min; r <= r_max; ++r) {
    for (const auto& h : hs) keys.emplace_back(r, h);
  }
  std::vector<std::optional<ThresholdRow>> slots(keys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      slots[i] = row(keys[i].first, keys[i].second);
    }
  };
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), keys.size()));
  std::vector<std::future<void>> workers;
  for (unsigned t = 0; t < n_threads; ++t) workers.push_back(std::async(std::launch::async, worker));
  for (auto& w : workers) w.get();
  std::vector<ThresholdRow> rows;
  rows.reserve(slots.size());
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

}  // namespace diagthue
