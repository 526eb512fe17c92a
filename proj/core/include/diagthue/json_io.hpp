#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "diagthue/analysis.hpp"
#include "diagthue/forms.hpp"
#include "diagthue/lemmas.hpp"
#include "diagthue/solver.hpp"
#include "diagthue/thresholds.hpp"

namespace diagthue {

using Json = nlohmann::ordered_json;

// Form input, a tagged union on "kind":
//   {"kind": "diag", "r": 7, "d": -1, "alpha": "1", "beta": {"a": "0", "b": "1"}, ...}
//   {"kind": "int", "r": 7, "coeffs": ["1", "0", ..., "-1"]}
// Coefficients of the diagonal datum are rationals "p/q" or {"a", "b"} pairs
// meaning a + b sqrt(d).
struct FormInput {
  std::optional<DiagForm> diag;
  IntBinaryForm integer;
};

FormInput parse_form(const Json& spec);
Json form_to_json(const DiagForm& form);
Json form_to_json(const IntBinaryForm& form);

// Exact values are strings; enclosures are {"center", "radius"}.
Json to_json(const QuadElem& x);
QuadElem quad_from_json(const Json& value, std::int64_t d);
Json to_json(const RealBall& ball, int digits = 30);
Json to_json(const Ball& ball, int digits = 30);

Json to_json(const InvariantSet& inv);
Json to_json(const FormClass& cls);
Json to_json(const RootRelation& rel);
Json to_json(const SolutionRecord& rec);
Json to_json(const OmegaPartition& partition);
Json to_json(const LemmaVerdict& verdict);
Json to_json(const ZkReport& report);
Json to_json(const PropertyQuintuple& p);
Json to_json(const InductionStep& step);
Json to_json(const HypothesisReport& report);
Json to_json(const ClassSaturation& s);
Json to_json(const SolveReport& report);

// Solution list as CSV: x,y,F,Z,zeta,omega_index (Z and zeta as decimals).
std::string solutions_csv(const SolveReport& report);
// r,h,log10_main,log10_akss_ii_m4,log10_siegel_l1,min_theorem
std::string threshold_csv(const std::vector<ThresholdRow>& rows);

}  // namespace diagthue
