#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amphichiral/checkerboard.hpp"
#include "amphichiral/conway.hpp"
#include "amphichiral/diagram.hpp"
#include "amphichiral/flype.hpp"

namespace amphi {

struct ClassifyOptions {
  GraphIsoMode iso_mode = GraphIsoMode::Abstract;
  // When set, a reflected copy of the mirror in the orbit also counts.
  ReflectionPolicy reflection{};
  OrbitOptions orbit{};
};

// Diagram numbers in the graph fields are 1-based positions in
// Orbit::shapes; diagram 1 is the input.
struct Verdict {
  int crossings = 0;
  int components = 0;
  int orbit_size = 0;          // distinct minimal diagrams (shapes)
  int labeled_orbit_size = 0;  // orbit entries

  bool amphicheiral = false;  // under the configured reflection policy
  bool mirror_in_orbit = false;                  // orientation-preserving match
  bool mirror_in_orbit_up_to_reflection = false;
  int mirror_entry = -1;  // orbit entry matching the mirror, or -1

  std::vector<int> self_dual_diagrams;               // i with G_i ~ G*_i
  std::vector<std::pair<int, int>> cross_dual_pairs;  // i != j with G_i ~ G*_j
  bool dh_link = false;

  GraphIsoMode iso_mode_used = GraphIsoMode::Abstract;
  ReflectionPolicy reflection_policy_used{};
};

// Mirror test over the flype orbit plus the checkerboard-graph survey.
// Throws Error(Precondition) unless `d` is reduced, alternating and prime,
// and OrbitOverflowError when the orbit outgrows options.orbit.max_size.
Verdict classify(const Diagram& d, const ClassifyOptions& options = {}, Orbit* orbit_out = nullptr);

// Same, for an orbit already computed from `d`.
Verdict classify_orbit(const Diagram& d, const Orbit& orbit, const ClassifyOptions& options = {});

// For links with a single minimal diagram: whether G(d) ~ G*(d). Empty when
// the orbit has more than one diagram.
std::optional<bool> single_diagram_criterion(const Diagram& d, const ClassifyOptions& options = {});

// --- experimental scan of sandwich families -------------------------------

// Symbols of the shape (P) t (Q) with P, Q pretzel tangles of rational
// tangles and t a rational tangle.
struct Sandwich {
  PretzelTangle left;
  RationalTangle middle;
  PretzelTangle right;
};

std::optional<Sandwich> as_sandwich(const TangleExpr& expr);

enum class Expectation {
  None,                  // outside every hypothesis
  DasbachHougardy,       // (P) 1^(4k-2) (P), P oriented non-integer
  Chiral,                // (P) 1^(4k-2) (P), P oriented integer
  KauffmanAmphicheiral,  // amphicheiral with a self-dual minimal diagram
};

const char* to_string(Expectation e);

// What the conjecture predicts for a symbol. `reason` receives a short
// explanation.
Expectation expectation_for(const TangleExpr& expr, std::string* reason = nullptr);

enum class ScanOutcome { Match, Mismatch, NoExpectation, Skipped };

const char* to_string(ScanOutcome o);

struct ScanInstance {
  std::string symbol;
  Expectation expectation = Expectation::None;
  std::string reason;
  int crossings = 0;
  std::optional<Verdict> verdict;
  ScanOutcome outcome = ScanOutcome::Skipped;
  std::string notice;  // why skipped, or what mismatched
};

struct ScanReport {
  std::vector<ScanInstance> instances;
  int matches = 0, mismatches = 0, unchecked = 0, skipped = 0;
};

struct ScanOptions {
  int crossing_cap = 16;
  int threads = 1;  // instances classified concurrently
  ClassifyOptions classify{};
};

// Classifies every symbol (in the given order) and scores it against the
// conjecture. Instances above the crossing cap or failing preconditions
// are skipped with a notice; mismatches are always reported.
ScanReport scan_family(const std::vector<std::string>& symbols, const ScanOptions& options = {});

// (P) 1^(4k-2) (P) for every k in [k_min, k_max].
std::vector<std::string> family_symbols(const PretzelTangle& p, int k_min, int k_max);

// Oriented pretzels with n_min..n_max components, entries 2..max_entry and
// rational lengths up to max_length, whose k-family member stays within
// `crossing_cap`. `integer_only` restricts to integer pretzels.
std::vector<std::string> enumerate_family_symbols(int n_min, int n_max, int max_entry, int max_length,
                                                  int k, int crossing_cap, bool integer_only);

}  // namespace amphi
