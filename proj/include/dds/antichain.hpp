#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dds/state_space.hpp"

namespace dds {

struct UnorderedCheck {
  bool unordered = true;
  // On failure, one comparable pair (ordered low -> high).
  std::optional<std::pair<State, State>> witness;
};

// A set is unordered (an antichain) when no two distinct members compare.
UnorderedCheck is_unordered(const StateSpace& space,
                            const std::vector<State>& states);

// All states with the given coordinate sum, in rank order.  Constant-sum
// sets are unordered.
std::vector<State> level_set(const StateSpace& space, int target_sum);

// The middle layer D = { x : S(x) = floor(N/2) } where N is the level span.
// For uniform levels this is the classical maximum antichain.
// Throws unsupported_space when levels are not uniform.
std::vector<State> middle_layer(const StateSpace& space);

// Middle-layer count for any level vector, by a partial-sum convolution DP
// with checked integer arithmetic (throws big_count on overflow).
std::int64_t middle_layer_count(const std::vector<int>& levels);

// d(n, p): number of x in {0..p-1}^n with S(x) = floor(n(p-1)/2).
std::int64_t middle_layer_count(int n, int p);

// Local-limit estimate p^n / sqrt(2 pi n sigma^2), sigma^2 = (p^2-1)/12,
// and its ratio against the exact count (ratio -> 1 as n grows).
double clt_estimate(int n, int p);
double clt_ratio(int n, int p);

struct LayerBoundsReport {
  std::int64_t count = 0;        // d(n, p)
  double lower_bound = 0.0;      // p^{n-1} / n
  bool lower_ok = false;         // d(n,p) >= p^{n-1}/n
  std::int64_t next_count = 0;   // d(n+1, p)
  double upper_ref = 0.0;        // p^n
  bool upper_ok = false;         // d(n+1,p) < p^n   (needs n >= 2)
  bool upper_applicable = false;
  double c = 0.0;
  double c_pow_n = 0.0;
  bool exponential_ok = false;   // d(n,p) >= c^n for the supplied c
  bool all_ok() const {
    return lower_ok && (!upper_applicable || upper_ok) && exponential_ok;
  }
};

// Checks d(n,p) >= p^{n-1}/n, d(n+1,p) < p^n, and d(n,p) >= c^n.
LayerBoundsReport check_layer_bounds(int n, int p, double c);

// Exact maximum antichain size of the space via Dilworth's theorem:
// size minus a maximum matching of the strict comparability relation
// (minimum chain cover).  Independent of the counting DP by construction.
// Throws oracle_cap when size exceeds the cap (default 4096).
std::int64_t max_antichain_exact(const StateSpace& space,
                                 std::int64_t cap = 4096);

}  // namespace dds
