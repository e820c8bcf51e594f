#pragma once

#include <cstdint>
#include <vector>

#include "dds/error.hpp"

namespace dds {

// A state of a finite mixed-radix product of chains, coordinates 0-based.
using State = std::vector<int>;
using Rank = std::int64_t;

// The product Pi = prod_i {0..p_i-1} with the componentwise (cooperative)
// partial order.  Immutable after construction; all operations are pure.
//
// Rank order: coordinate n-1 varies fastest, i.e. rank is the mixed-radix
// value with the first coordinate most significant.  This fixes iteration
// and file-format determinism.
class StateSpace {
 public:
  explicit StateSpace(std::vector<int> levels);
  static StateSpace uniform(int n, int p);
  static StateSpace boolean(int n) { return uniform(n, 2); }

  int dim() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& levels() const { return levels_; }
  std::int64_t size() const { return size_; }
  bool is_uniform() const;
  bool is_boolean() const;
  // N = sum_i (p_i - 1): length of a maximal chain, a.k.a. the level span.
  int level_span() const;

  bool contains(const State& x) const;
  void require_valid(const State& x) const;  // throws invalid_state

  Rank rank(const State& x) const;   // validates x
  State unrank(Rank r) const;        // throws invalid_rank
  void require_rank(Rank r) const;

  State zero() const { return State(levels_.size(), 0); }
  State top() const;

  // All states in rank order.  Intended for desk-scale spaces; larger
  // spaces should loop over ranks and use digit().
  std::vector<State> enumerate() const;

  // Coordinate i of the state with the given rank, without materializing.
  int digit(Rank r, int i) const { return static_cast<int>((r / strides_[i]) % levels_[i]); }
  const std::vector<std::int64_t>& strides() const { return strides_; }

  bool operator==(const StateSpace& o) const { return levels_ == o.levels_; }
  bool operator!=(const StateSpace& o) const { return !(*this == o); }

 private:
  std::vector<int> levels_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_;
};

enum class Order { equal, less, greater, incomparable };

struct OrderRel {
  Order order = Order::incomparable;
  bool strictly_less_all = false;     // x << y: strict in every coordinate
  bool strictly_greater_all = false;  // y << x
};

// Cooperative-order comparison.  Throws dimension_mismatch on unequal sizes.
OrderRel compare(const State& x, const State& y);

inline bool leq(const State& x, const State& y) {
  Order o = compare(x, y).order;
  return o == Order::equal || o == Order::less;
}

// S(x) = x_1 + ... + x_n.
int coord_sum(const State& x);

enum class StepDir { up, down };

// x^{i+} / x^{i-}: one coordinate step with clamping at the boundary.
// i is 0-based; throws invalid_index when out of range.
State step(const StateSpace& space, const State& x, int i, StepDir dir);

// Rank-space helpers for table-driven loops (no allocation).
Rank step_rank(const StateSpace& space, Rank r, int i, StepDir dir);
bool rank_leq(const StateSpace& space, Rank a, Rank b);
int rank_sum(const StateSpace& space, Rank r);

}  // namespace dds
