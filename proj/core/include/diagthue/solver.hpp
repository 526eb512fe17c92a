#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagthue/analysis.hpp"
#include "diagthue/forms.hpp"
#include "diagthue/lemmas.hpp"
#include "diagthue/thresholds.hpp"

namespace diagthue {

struct SearchConfig {
  long H = 1000;             // box max(|x|, |y|) <= H
  unsigned parallel_chunks = 0;  // 0: one per hardware thread
  mpfr_prec_t precision = 64;    // starting precision for certified work
};

// A primitive solution as found by the search, before any analysis.
struct IntSolution {
  Integer x, y, F;
  friend bool operator==(const IntSolution&, const IntSolution&) = default;
};

// Every primitive (x, y) in the box with 0 < |F(x, y)| <= h, one
// representative per +- pair (x > 0, or x = 0 and y > 0), in lexicographic
// order. Values are exact; a certified floating-point bound only skips points
// that provably exceed h.
std::vector<IntSolution> enumerate_points(const IntBinaryForm& f, const Integer& h,
                                          const SearchConfig& cfg = {});

// Next-solution floor for one omega class. Heuristic evidence only: the search
// box says nothing about solutions outside it.
struct ClassSaturation {
  int omega_index = 0;
  std::size_t members = 0;
  bool applicable = false;
  std::string basis;                  // which bound produced the floor, or why none
  std::optional<RealBall> Z_floor;
  std::optional<RealBall> height_floor;  // lower bound on max(|x|, |y|)
  bool saturated_within_box = false;     // height floor certainly above H
};

struct TheoremConsistency {
  HypothesisReport hypothesis;
  bool covered = false;     // hypothesis holds, so the predicted bound applies
  bool consistent = true;
  std::string verdict;      // "consistent", "not covered by theorem"
  std::vector<std::string> evidence;
};

struct SolveReport {
  long H = 0;
  Integer h;
  std::vector<SolutionRecord> solutions;
  std::size_t N = 0;
  OmegaPartition partition;
  std::vector<ClassSaturation> saturation;
  std::optional<TheoremConsistency> theorem_consistency;
  static constexpr const char* kQualifier = "within box";
};

// Enumerates and analyses every solution of the diagonal form.
SolveReport enumerate(const DiagForm& form, const Integer& h, const SearchConfig& cfg = {});

std::vector<ClassSaturation> saturation(const SolveReport& report, const DiagForm& form,
                                        const Integer& h, const PrecisionPolicy& policy = {});

// Runs the MAIN hypothesis check and the enumeration; throws kBoundExceeded
// when the hypothesis holds but the box already contains more solutions than
// predicted, or the forbidden class shape (one class of three, another of
// two) occurs together with a finite (Zk) divergence.
SolveReport verify_theorem(const DiagForm& form, const Integer& h, const SearchConfig& cfg = {});

}  // namespace diagthue
