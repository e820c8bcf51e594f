#pragma once

#include <optional>
#include <vector>

#include "dds/extension.hpp"
#include "dds/total_map.hpp"

namespace dds {

// An injective structure-preserving map between two systems: phi[r] is the
// target rank of the source state with rank r.
struct Embedding {
  StateSpace source;
  StateSpace target;
  std::vector<Rank> phi;

  Rank map_rank(Rank r) const { return phi[static_cast<size_t>(r)]; }
  State map_state(const State& x) const {
    return target.unrank(map_rank(source.rank(x)));
  }
};

// Whether every m-dimensional q-level system embeds into a cooperative
// n-dimensional p-level system: q^m <= middle_layer_count(n, p).
bool embedding_feasible(int m, int q, int n, int p);

// Embeds an arbitrary system into a cooperative system on the target space:
// source states go to the first |source| middle-layer states in rank order,
// the conjugated map on that antichain is extended by extend_unordered.
// Throws feasibility when the source does not fit into the middle layer,
// unsupported_space when the target levels are not uniform.
std::pair<Embedding, TotalMap> embed_system(const TotalMap& f,
                                            const StateSpace& target);

struct ConjugacyCheck {
  bool holds = false;
  std::optional<State> witness;  // source state with g(phi(x)) != phi(f(x))
};

// g(phi(x)) = phi(f(x)) for every source state x.
ConjugacyCheck verify_conjugacy(const TotalMap& f, const TotalMap& g,
                                const Embedding& phi);

// Unary (thermometer) lift of a finite system into a Boolean one: each
// coordinate with p levels becomes p-1 ordered bits, 1 exactly in the first
// x_i positions of its block.  The lifted map first normalizes a bit vector
// through the block-sorting retraction, then conjugates through the
// injection.  2^N can exceed any table budget, so evaluation is lazy;
// to_total_map materializes the table when the lifted space fits the cap.
class ThermometerLift {
 public:
  explicit ThermometerLift(TotalMap base);

  const TotalMap& base() const { return base_; }
  const StateSpace& lifted_space() const { return lifted_; }
  int lifted_dim() const { return lifted_.dim(); }

  State lift(const State& x) const;      // psi
  State project(const State& y) const;   // psi^{-1} on the range of retract
  State retract(const State& y) const;   // block-sort normalization z(y)
  State eval(const State& y) const;      // the lifted dynamics
  Rank eval_rank(Rank r) const;

  Embedding injection() const;           // psi as an Embedding
  // Materializes the lifted table; throws unsupported_space when 2^N
  // exceeds the table cap (keep evaluating lazily instead).
  TotalMap to_total_map(std::int64_t table_cap = std::int64_t{1} << 24) const;
  TotalMap retraction_map() const;       // y -> z(y) as a table

 private:
  TotalMap base_;
  StateSpace lifted_;
  std::vector<int> offset_;  // block start per base coordinate
};

inline ThermometerLift thermometer_lift(TotalMap base) {
  return ThermometerLift(std::move(base));
}

}  // namespace dds
