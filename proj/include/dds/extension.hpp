#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dds/total_map.hpp"

namespace dds {

// A map defined on a subset of the space, stored as (domain rank, image
// rank) entries sorted by domain rank.  Immutable after construction.
class PartialMap {
 public:
  PartialMap(StateSpace space, std::vector<std::pair<Rank, Rank>> entries);

  static PartialMap from_states(const StateSpace& space,
                                const std::vector<std::pair<State, State>>& e);

  const StateSpace& space() const { return space_; }
  const std::vector<std::pair<Rank, Rank>>& entries() const { return entries_; }
  std::int64_t domain_size() const { return static_cast<std::int64_t>(entries_.size()); }
  bool defined_at(Rank r) const;
  std::optional<Rank> image_of(Rank r) const;
  std::vector<Rank> domain() const;

 private:
  StateSpace space_;
  std::vector<std::pair<Rank, Rank>> entries_;
};

// x <= y in the domain must give gamma(x) <= gamma(y).  Returns a violating
// domain pair otherwise.
struct PartialCoopCheck {
  bool cooperative = true;
  std::optional<std::pair<State, State>> witness;
};
PartialCoopCheck is_cooperative_partial(const PartialMap& pm);

// Extends the domain so that every state of the space is comparable to some
// domain element.  Added states are scanned in rank order, form an antichain,
// are incomparable to every original domain element, and map to themselves.
PartialMap complete_with_antichain(const PartialMap& pm);

// Canonical cooperative extension of a cooperative partial map:
// after antichain completion, g(z) is the componentwise minimum of the
// images over the domain elements above z; states with nothing above them
// get the componentwise maximum of the already-extended values below.
// Restricts to the partial map and is cooperative.
// Throws precondition when the partial map is not cooperative.
TotalMap extend_cooperative(const PartialMap& pm);

// Definition-level variant (both passes by direct subset scans); quadratic,
// kept as the oracle for the production path.
TotalMap extend_cooperative_naive(const PartialMap& pm);

// Simplified form when the domain is a full level set { S(x) = r }: the
// second pass takes the maximum of the partial images directly.  Must agree
// with extend_cooperative bit-exactly.
// Throws precondition when the domain is not a full level set.
TotalMap extend_cooperative_levelset(const PartialMap& pm);

// Total extension of a map with an unordered domain that maps into itself:
// the domain is extended to a maximal antichain with fixed points, states
// below the antichain go to the bottom state, states above to the top.
// Throws precondition when the domain is not unordered or leaves itself.
TotalMap extend_unordered(const PartialMap& pm);

// ---- grid discretization of maps sampled on [0,1]^n ----

// Values of a map [0,1]^n -> [0,1]^n sampled at the uniform p-grid, indexed
// by grid-point rank; values[r] holds the n output components.
struct GridSamples {
  StateSpace grid;  // uniform levels p
  std::vector<std::vector<double>> values;
};

// Rounds (p-1) * f(grid point) to the nearest level, ties upward.
// Throws input_range when any sample leaves [0,1].
TotalMap discretize_map(const GridSamples& samples);

// max over grid points and coordinates of | m(x)/(p-1) - f(x) |.
double approximation_error(const GridSamples& samples, const TotalMap& m);

struct ModulusReport {
  double lip_partial = 0.0;    // empirical Lipschitz constant of the partial map
  double lip_extension = 0.0;  // same for its cooperative extension
  double factor = 0.0;         // 6n + 3
  bool holds = false;          // lip_extension <= factor * lip_partial
};

// Empirical modulus comparison on a level-set domain (sup-norm, grid units).
// Evidence, not proof.  Throws not_applicable below 2 domain points and
// precondition when the domain is not a full level set.
ModulusReport modulus_check(const PartialMap& pm);

}  // namespace dds
