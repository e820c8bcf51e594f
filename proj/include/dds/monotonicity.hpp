#pragma once

#include <optional>
#include <vector>

#include "dds/total_map.hpp"

namespace dds {

// A single-step monotonicity violation: at state x, stepping coordinate i
// up decreased output coordinate j.
struct CoopWitness {
  State x;
  int i = -1;  // 0-based stepped coordinate
  int j = -1;  // 0-based output coordinate
};

struct CoopCheck {
  bool cooperative = false;
  std::optional<CoopWitness> witness;  // first violation in rank order
};

// x <= y implies g(x) <= g(y).  Checked on covering pairs (x, x^{i+}) only;
// single-coordinate steps generate the order and <= is transitive, so this
// is exact.  O(size * n^2).
CoopCheck is_cooperative(const TotalMap& m);

// Quadratic reference check over all ordered pairs; test oracle for the
// covering-pair scan.
CoopCheck is_cooperative_bruteforce(const TotalMap& m);

struct StrongCoopCheck {
  bool strongly_cooperative = false;
  // A covering pair x < y with g(x) = g(y), violating strictness.
  std::optional<std::pair<State, State>> witness;
  // Verification mode only: the three equivalent conditions evaluated
  // independently (difference-sum, strictness, level-preservation).
  bool sm_sum = false, sm_diff = false, sm_strict = false;
  bool verified_equivalence = false;
};

// Strongly cooperative: cooperative and level-preserving, S(g(x)) = S(x).
// Returns false for non-cooperative maps.  When verify_equivalence is set,
// additionally evaluates the difference-sum and strictness conditions on
// covering pairs and throws theorem_violation if the three disagree.
StrongCoopCheck is_strongly_cooperative(const TotalMap& m,
                                        bool verify_equivalence = false);

enum class PairInfluence { conforming, reversed, mixed };

struct AlmostCoopCheck {
  bool almost_cooperative = false;
  int exception_i = -1;  // 0-based pair <i*, j*> when almost cooperative
  int exception_j = -1;
  int reversed_pairs = 0;
  int mixed_pairs = 0;
  bool diagonal_ok = true;
};

// Monotone in every coordinate pair except exactly one off-diagonal pair
// <i*, j*>, on which the influence is order-reversing everywhere.
AlmostCoopCheck is_almost_cooperative(const TotalMap& m);

struct CooperativityReport {
  enum class Verdict { cooperative, almost_cooperative, neither };
  Verdict verdict = Verdict::neither;
  std::optional<CoopWitness> witness;
  int exception_i = -1, exception_j = -1;
  bool strongly_cooperative = false;
  std::optional<std::pair<State, State>> sc_witness;
};

CooperativityReport analyze_cooperativity(const TotalMap& m);

// For strongly cooperative maps, sum_i |y_i(t) - x_i(t)| never exceeds its
// initial value.  Throws contract_inapplicable when the map is not strongly
// cooperative.
bool perturbation_contract(const TotalMap& m, const State& x0,
                           const State& y0, std::int64_t t_max);

// A strictly increasing chain of p_max + 1 states witnessing that no finite
// system of dimension n > 1 can be eventually strictly monotone: strict
// inequality in every coordinate along such a chain would force coordinate
// sums beyond n * (p_max - 1).  Throws not_applicable for n = 1.
std::vector<State> eventual_sc_obstruction(const StateSpace& space);

}  // namespace dds
