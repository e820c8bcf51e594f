#pragma once

#include <cstdint>
#include <vector>

#include "dds/state_space.hpp"

namespace dds {

// The dynamics x(t+1) = g(x(t)) as a full transition table over a state
// space.  Entry r holds rank(g(unrank(r))).  Immutable and shareable.
class TotalMap {
 public:
  TotalMap(StateSpace space, std::vector<std::uint32_t> table);

  const StateSpace& space() const { return space_; }
  Rank apply_rank(Rank r) const { return table_[static_cast<size_t>(r)]; }
  State apply(const State& x) const;
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool operator==(const TotalMap& o) const {
    return space_ == o.space_ && table_ == o.table_;
  }

 private:
  StateSpace space_;
  std::vector<std::uint32_t> table_;
};

// x(t) = g^t(x0), t >= 0.
State trajectory(const TotalMap& m, const State& x0, std::int64_t t);
Rank trajectory_rank(const TotalMap& m, Rank r0, std::int64_t t);

// Functional-graph decomposition: periodic orbits (cycles), the cycle each
// state eventually reaches, and the transient distance to it.
//
// Cycles are canonical: each starts at its minimum-rank state, follows the
// map, and the cycle list is sorted by that minimum rank.
struct OrbitDecomposition {
  std::vector<std::vector<Rank>> cycles;
  std::vector<std::int32_t> cycle_index;    // per rank
  std::vector<std::int32_t> steps_to_cycle; // 0 iff the state is persistent

  bool persistent(Rank r) const { return steps_to_cycle[static_cast<size_t>(r)] == 0; }
  std::int64_t transient_count() const;
  int max_cycle_length() const;
};

OrbitDecomposition orbit_decompose(const TotalMap& m);

// Exactly the states lying on cycles, in rank order.
std::vector<Rank> persistent_states(const OrbitDecomposition& d);

}  // namespace dds
