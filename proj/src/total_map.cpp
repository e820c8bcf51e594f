#include "dds/total_map.hpp"

#include <algorithm>
#include <string>

namespace dds {

TotalMap::TotalMap(StateSpace space, std::vector<std::uint32_t> table)
    : space_(std::move(space)), table_(std::move(table)) {
  if (static_cast<std::int64_t>(table_.size()) != space_.size())
    throw DdsError(Err::incomplete_map,
                   "transition table must cover every state exactly once");
  for (std::uint32_t v : table_)
    if (static_cast<std::int64_t>(v) >= space_.size())
      throw DdsError(Err::invalid_rank,
                     "table entry " + std::to_string(v) + " is not a rank");
}

State TotalMap::apply(const State& x) const {
  return space_.unrank(apply_rank(space_.rank(x)));
}

State trajectory(const TotalMap& m, const State& x0, std::int64_t t) {
  return m.space().unrank(trajectory_rank(m, m.space().rank(x0), t));
}

Rank trajectory_rank(const TotalMap& m, Rank r0, std::int64_t t) {
  if (t < 0) throw DdsError(Err::precondition, "trajectory needs t >= 0");
  Rank r = r0;
  for (std::int64_t i = 0; i < t; ++i) r = m.apply_rank(r);
  return r;
}

std::int64_t OrbitDecomposition::transient_count() const {
  std::int64_t c = 0;
  for (auto s : steps_to_cycle)
    if (s > 0) ++c;
  return c;
}

int OrbitDecomposition::max_cycle_length() const {
  size_t best = 0;
  for (const auto& c : cycles) best = std::max(best, c.size());
  return static_cast<int>(best);
}

OrbitDecomposition orbit_decompose(const TotalMap& m) {
  const std::int64_t n = m.space().size();
  OrbitDecomposition d;
  d.cycle_index.assign(static_cast<size_t>(n), -1);
  d.steps_to_cycle.assign(static_cast<size_t>(n), -1);

  // Three colors: 0 unvisited, 1 on the current path, 2 resolved.
  std::vector<std::uint8_t> color(static_cast<size_t>(n), 0);
  std::vector<Rank> path;
  for (Rank s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != 0) continue;
    path.clear();
    Rank v = s;
    while (color[static_cast<size_t>(v)] == 0) {
      color[static_cast<size_t>(v)] = 1;
      path.push_back(v);
      v = m.apply_rank(v);
    }
    size_t unwind_from = path.size();
    if (color[static_cast<size_t>(v)] == 1) {
      // Closed a new cycle inside the current path.
      size_t pos = 0;
      while (path[pos] != v) ++pos;
      std::vector<Rank> cyc(path.begin() + static_cast<std::ptrdiff_t>(pos),
                            path.end());
      int ci = static_cast<int>(d.cycles.size());
      for (Rank u : cyc) {
        d.cycle_index[static_cast<size_t>(u)] = ci;
        d.steps_to_cycle[static_cast<size_t>(u)] = 0;
        color[static_cast<size_t>(u)] = 2;
      }
      d.cycles.push_back(std::move(cyc));
      unwind_from = pos;
    }
    // Transient prefix: distance accumulates toward the resolved suffix.
    for (size_t k = unwind_from; k-- > 0;) {
      Rank u = path[k];
      Rank next = (k + 1 < path.size()) ? path[k + 1] : v;
      d.cycle_index[static_cast<size_t>(u)] =
          d.cycle_index[static_cast<size_t>(next)];
      d.steps_to_cycle[static_cast<size_t>(u)] =
          d.steps_to_cycle[static_cast<size_t>(next)] + 1;
      color[static_cast<size_t>(u)] = 2;
    }
  }

  // Canonical form: rotate each cycle to start at its minimum rank, then
  // sort cycles by that minimum and remap indices.
  std::vector<int> order(d.cycles.size());
  for (auto& cyc : d.cycles) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
  }
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d.cycles[static_cast<size_t>(a)][0] <
                                       d.cycles[static_cast<size_t>(b)][0]; });
  std::vector<std::vector<Rank>> sorted;
  std::vector<int> remap(order.size());
  sorted.reserve(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    remap[static_cast<size_t>(order[i])] = static_cast<int>(i);
    sorted.push_back(std::move(d.cycles[static_cast<size_t>(order[i])]));
  }
  d.cycles = std::move(sorted);
  for (auto& ci : d.cycle_index) ci = remap[static_cast<size_t>(ci)];
  return d;
}

std::vector<Rank> persistent_states(const OrbitDecomposition& d) {
  std::vector<Rank> out;
  for (size_t r = 0; r < d.steps_to_cycle.size(); ++r)
    if (d.steps_to_cycle[r] == 0) out.push_back(static_cast<Rank>(r));
  return out;
}

}  // namespace dds
