#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dds/total_map.hpp"

namespace dds {

// A digraph on nodes {0..n-1}, adjacency rows as bitmasks (n < 64 always,
// since spaces are capped at 2^31 states).
struct Digraph {
  int n = 0;
  std::vector<std::uint64_t> out;

  explicit Digraph(int nodes = 0)
      : n(nodes), out(static_cast<size_t>(nodes), 0) {}
  static Digraph full(int nodes);

  void add(int i, int j) { out[static_cast<size_t>(i)] |= std::uint64_t{1} << j; }
  bool has(int i, int j) const {
    return (out[static_cast<size_t>(i)] >> j) & 1;
  }
  void intersect_with(const Digraph& o);
  void unite_with(const Digraph& o);
  int arc_count() const;
  bool operator==(const Digraph& o) const { return n == o.n && out == o.out; }
};

// True iff the digraph has a single strongly connected component covering
// every node (an isolated single node counts).
bool strongly_connected(const Digraph& g);

// Edge-list export, one "i j" line per arc, 1-based nodes, sorted.
std::string digraph_edge_list(const Digraph& g);
std::string digraph_dot(const Digraph& g, const std::string& name = "influence");

// Per-state influence arcs of the dynamics:
//  weak (A*_x):  <i,j> present iff g(x)_j < g(x^{i+})_j or g(x^{i-})_j < g(x)_j
//  strict (A_x): additionally, at interior coordinates 0 < x_i < p_i-1, the
//                response must be two-sided: g(x^{i-})_j < g(x)_j < g(x^{i+})_j.
// For Boolean spaces (no interior coordinates) the two sets coincide.
struct StateArcs {
  Digraph strict;
  Digraph weak;
};
StateArcs influence_arcs_at(const TotalMap& m, Rank x);

// Materialized arc sets over a designated subset of states (all of the
// space, or one attractor).  Intended for desk-scale spaces / attractors.
struct InfluenceArcSets {
  std::vector<Rank> over;         // covered states, rank order
  std::vector<Digraph> strict;    // A_x per covered state
  std::vector<Digraph> weak;      // A*_x per covered state
};

InfluenceArcSets influence_arcs(const TotalMap& m);
// X must be exactly one of the cycles of orbit_decompose(m); throws
// invalid_attractor otherwise.
InfluenceArcSets influence_arcs(const TotalMap& m, const std::vector<Rank>& X);

struct AttractorIrreducibility {
  int cycle = -1;
  int length = 0;
  bool strongly_irreducible_along = false;  // intersection of A_x over X
  bool irreducible_along = false;           // every G_x, x in X
  bool weakly_irreducible_along = false;    // union of A*_x over X
};

struct IrreducibilityReport {
  bool strongly_irreducible = false;       // intersection of A_x over the space
  bool strongly_semi_irreducible = false;  // intersection of A*_x
  bool irreducible = false;                // every G_x strongly connected
  bool weakly_irreducible = false;         // union of A*_x
  std::vector<AttractorIrreducibility> attractors;
};

IrreducibilityReport classify_irreducibility(const TotalMap& m);

// A bijection of {0..n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int n);
  static Permutation cycle(int n);  // i -> i+1 mod n

  int dim() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<size_t>(i)]; }
  const std::vector<int>& mapping() const { return map_; }
  bool is_cyclic() const;         // one cycle through all elements
  std::int64_t order() const;     // lcm of cycle lengths (checked arithmetic)
  bool operator==(const Permutation& o) const { return map_ == o.map_; }

 private:
  std::vector<int> map_;
};

// For a cooperative irreducible system, recovers the cyclic permutation pi
// with g = g_pi from the arcs at the bottom state, verifies the identity
// table-wide, and verifies strong cooperativity.  Throws precondition when
// the system is not cooperative+irreducible, theorem_violation if any
// verification fails (which would falsify the classification).
Permutation extract_cyclic_permutation(const TotalMap& m);

// For a strongly cooperative Boolean system, builds a permutation pi with
// g(x) = g_pi(x) on every persistent state, by induction on the persistent
// singletons.  Throws contract_inapplicable unless the space is Boolean and
// the map strongly cooperative.
Permutation extract_permutation_boolean(const TotalMap& m);

// Landau's function: the maximum order of a permutation of k elements,
// i.e. max lcm over the partitions of k, by DP over prime powers.
std::int64_t landau(int k);

struct OrbitBoundEntry {
  int cycle = -1;
  int length = 0;
  std::string bound;          // which bound applies
  std::int64_t limit = 0;
  bool ok = false;
};

struct OrbitBoundsReport {
  bool cooperative = false;
  bool strongly_cooperative = false;
  bool boolean_space = false;
  bool irreducible = false;
  std::int64_t landau_span = 0;  // R(N), N = level span: the proven bound
  std::int64_t landau_dim = 0;   // R(n): reference value only, not asserted
  std::vector<OrbitBoundEntry> entries;
  bool all_ok() const;
};

// Records every cycle length against each orbit-length bound whose
// hypotheses the map satisfies; hypotheses are re-verified internally.
//  - cooperative:                       length <= max antichain size
//  - strongly cooperative:              length <= R(N), N = level span
//  - cooperative + irreducible:         length <= n
//  - Boolean cooperative + strongly irreducible along X:   |X| <= n
//  - Boolean strongly coop + weakly irreducible along X:   |X| <= n
OrbitBoundsReport check_orbit_bounds(const TotalMap& m);

}  // namespace dds
