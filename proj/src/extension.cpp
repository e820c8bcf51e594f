#include "dds/extension.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dds/antichain.hpp"

namespace dds {

PartialMap::PartialMap(StateSpace space,
                       std::vector<std::pair<Rank, Rank>> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (size_t k = 0; k < entries_.size(); ++k) {
    space_.require_rank(entries_[k].first);
    space_.require_rank(entries_[k].second);
    if (k > 0 && entries_[k].first == entries_[k - 1].first)
      throw DdsError(Err::duplicate_state,
                     "domain state listed twice (rank " +
                         std::to_string(entries_[k].first) + ")");
  }
}

PartialMap PartialMap::from_states(
    const StateSpace& space, const std::vector<std::pair<State, State>>& e) {
  std::vector<std::pair<Rank, Rank>> entries;
  entries.reserve(e.size());
  for (const auto& [x, y] : e) entries.emplace_back(space.rank(x), space.rank(y));
  return PartialMap(space, std::move(entries));
}

bool PartialMap::defined_at(Rank r) const { return image_of(r).has_value(); }

std::optional<Rank> PartialMap::image_of(Rank r) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), r,
      [](const std::pair<Rank, Rank>& e, Rank v) { return e.first < v; });
  if (it != entries_.end() && it->first == r) return it->second;
  return std::nullopt;
}

std::vector<Rank> PartialMap::domain() const {
  std::vector<Rank> d;
  d.reserve(entries_.size());
  for (const auto& e : entries_) d.push_back(e.first);
  return d;
}

PartialCoopCheck is_cooperative_partial(const PartialMap& pm) {
  const StateSpace& sp = pm.space();
  const auto& es = pm.entries();
  PartialCoopCheck res;
  for (size_t a = 0; a < es.size(); ++a) {
    for (size_t b = 0; b < es.size(); ++b) {
      if (a == b) continue;
      if (rank_leq(sp, es[a].first, es[b].first) &&
          !rank_leq(sp, es[a].second, es[b].second)) {
        res.cooperative = false;
        res.witness = {sp.unrank(es[a].first), sp.unrank(es[b].first)};
        return res;
      }
    }
  }
  return res;
}

PartialMap complete_with_antichain(const PartialMap& pm) {
  const StateSpace& sp = pm.space();
  std::vector<std::pair<Rank, Rank>> entries = pm.entries();
  std::vector<Rank> members = pm.domain();
  for (Rank z = 0; z < sp.size(); ++z) {
    bool comparable = false;
    for (Rank m : members) {
      if (rank_leq(sp, z, m) || rank_leq(sp, m, z)) {
        comparable = true;
        break;
      }
    }
    if (!comparable) {
      members.push_back(z);
      entries.emplace_back(z, z);
    }
  }
  return PartialMap(sp, std::move(entries));
}

namespace {

// First pass of the extension: for every state, the componentwise minimum of
// the images over domain elements above it, when any exist.
void upper_pass(const StateSpace& sp, const PartialMap& star,
                std::vector<Rank>& g, std::vector<std::uint8_t>& in_upper) {
  const std::int64_t size = sp.size();
  const int n = sp.dim();
  g.assign(static_cast<size_t>(size), -1);
  in_upper.assign(static_cast<size_t>(size), 0);
  std::vector<int> acc(static_cast<size_t>(n));
  for (Rank z = 0; z < size; ++z) {
    bool any = false;
    for (const auto& [a, img] : star.entries()) {
      if (!rank_leq(sp, z, a)) continue;
      if (!any) {
        for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] = sp.digit(img, i);
        any = true;
      } else {
        for (int i = 0; i < n; ++i)
          acc[static_cast<size_t>(i)] =
              std::min(acc[static_cast<size_t>(i)], sp.digit(img, i));
      }
    }
    if (any) {
      Rank r = 0;
      for (int i = 0; i < n; ++i) r = r * sp.levels()[i] + acc[static_cast<size_t>(i)];
      g[static_cast<size_t>(z)] = r;
      in_upper[static_cast<size_t>(z)] = 1;
    }
  }
}

TotalMap finish(const StateSpace& sp, const std::vector<Rank>& g) {
  std::vector<std::uint32_t> table(g.size());
  for (size_t i = 0; i < g.size(); ++i) table[i] = static_cast<std::uint32_t>(g[i]);
  return TotalMap(sp, std::move(table));
}

void require_cooperative(const PartialMap& pm) {
  PartialCoopCheck c = is_cooperative_partial(pm);
  if (!c.cooperative)
    throw DdsError(Err::precondition,
                   "partial map is not cooperative on its domain");
}

}  // namespace

TotalMap extend_cooperative(const PartialMap& pm) {
  require_cooperative(pm);
  const StateSpace& sp = pm.space();
  PartialMap star = complete_with_antichain(pm);
  std::vector<Rank> g;
  std::vector<std::uint8_t> in_upper;
  upper_pass(sp, star, g, in_upper);
  // Remaining states in increasing rank order: join of the already-known
  // values over the immediate predecessors.  Since every such state has all
  // its lower covers resolved earlier in rank order, this equals the join
  // over its whole lower set within the first pass.
  const int n = sp.dim();
  std::vector<int> acc(static_cast<size_t>(n));
  for (Rank z = 0; z < sp.size(); ++z) {
    if (in_upper[static_cast<size_t>(z)]) continue;
    bool any = false;
    for (int i = 0; i < n; ++i) {
      Rank down = step_rank(sp, z, i, StepDir::down);
      if (down == z) continue;
      Rank val = g[static_cast<size_t>(down)];
      if (!any) {
        for (int k = 0; k < n; ++k) acc[static_cast<size_t>(k)] = sp.digit(val, k);
        any = true;
      } else {
        for (int k = 0; k < n; ++k)
          acc[static_cast<size_t>(k)] =
              std::max(acc[static_cast<size_t>(k)], sp.digit(val, k));
      }
    }
    // The bottom state is always below some completed-domain element, so a
    // state outside the first pass has at least one predecessor.
    Rank r = 0;
    for (int k = 0; k < n; ++k) r = r * sp.levels()[k] + acc[static_cast<size_t>(k)];
    g[static_cast<size_t>(z)] = r;
  }
  return finish(sp, g);
}

TotalMap extend_cooperative_naive(const PartialMap& pm) {
  require_cooperative(pm);
  const StateSpace& sp = pm.space();
  PartialMap star = complete_with_antichain(pm);
  std::vector<Rank> g;
  std::vector<std::uint8_t> in_upper;
  upper_pass(sp, star, g, in_upper);
  const int n = sp.dim();
  std::vector<int> acc(static_cast<size_t>(n));
  for (Rank z = 0; z < sp.size(); ++z) {
    if (in_upper[static_cast<size_t>(z)]) continue;
    bool any = false;
    for (Rank x = 0; x < sp.size(); ++x) {
      if (!in_upper[static_cast<size_t>(x)] || !rank_leq(sp, x, z)) continue;
      Rank val = g[static_cast<size_t>(x)];
      if (!any) {
        for (int k = 0; k < n; ++k) acc[static_cast<size_t>(k)] = sp.digit(val, k);
        any = true;
      } else {
        for (int k = 0; k < n; ++k)
          acc[static_cast<size_t>(k)] =
              std::max(acc[static_cast<size_t>(k)], sp.digit(val, k));
      }
    }
    Rank r = 0;
    for (int k = 0; k < n; ++k) r = r * sp.levels()[k] + acc[static_cast<size_t>(k)];
    g[static_cast<size_t>(z)] = r;
  }
  return finish(sp, g);
}

namespace {

int level_set_sum_or_throw(const PartialMap& pm) {
  const StateSpace& sp = pm.space();
  if (pm.domain_size() == 0)
    throw DdsError(Err::precondition, "domain must be a nonempty level set");
  int r = rank_sum(sp, pm.entries()[0].first);
  for (const auto& e : pm.entries())
    if (rank_sum(sp, e.first) != r)
      throw DdsError(Err::precondition, "domain is not a single level set");
  std::int64_t expect = 0;
  // count states at sum r
  std::vector<int> levels = sp.levels();
  {
    std::vector<std::int64_t> dp(static_cast<size_t>(r) + 1, 0);
    dp[0] = 1;
    for (int p : levels) {
      std::vector<std::int64_t> next(dp.size(), 0);
      for (int s = 0; s <= r; ++s)
        if (dp[static_cast<size_t>(s)])
          for (int v = 0; v < p && s + v <= r; ++v)
            next[static_cast<size_t>(s + v)] += dp[static_cast<size_t>(s)];
      dp = std::move(next);
    }
    expect = dp[static_cast<size_t>(r)];
  }
  if (pm.domain_size() != expect)
    throw DdsError(Err::precondition, "domain is not the full level set");
  return r;
}

}  // namespace

TotalMap extend_cooperative_levelset(const PartialMap& pm) {
  const int r = level_set_sum_or_throw(pm);
  const StateSpace& sp = pm.space();
  const int n = sp.dim();
  std::vector<Rank> g(static_cast<size_t>(sp.size()), -1);
  std::vector<int> acc(static_cast<size_t>(n));
  for (Rank z = 0; z < sp.size(); ++z) {
    const bool below = rank_sum(sp, z) <= r;  // something of the layer sits above
    bool any = false;
    for (const auto& [a, img] : pm.entries()) {
      bool in = below ? rank_leq(sp, z, a) : rank_leq(sp, a, z);
      if (!in) continue;
      if (!any) {
        for (int k = 0; k < n; ++k) acc[static_cast<size_t>(k)] = sp.digit(img, k);
        any = true;
      } else {
        for (int k = 0; k < n; ++k) {
          int d = sp.digit(img, k);
          acc[static_cast<size_t>(k)] = below
                                            ? std::min(acc[static_cast<size_t>(k)], d)
                                            : std::max(acc[static_cast<size_t>(k)], d);
        }
      }
    }
    Rank v = 0;
    for (int k = 0; k < n; ++k) v = v * sp.levels()[k] + acc[static_cast<size_t>(k)];
    g[static_cast<size_t>(z)] = v;
  }
  return finish(sp, g);
}

TotalMap extend_unordered(const PartialMap& pm) {
  const StateSpace& sp = pm.space();
  std::vector<State> dom;
  dom.reserve(static_cast<size_t>(pm.domain_size()));
  for (const auto& e : pm.entries()) dom.push_back(sp.unrank(e.first));
  if (!is_unordered(sp, dom).unordered)
    throw DdsError(Err::precondition, "domain must be unordered");
  for (const auto& e : pm.entries())
    if (!pm.defined_at(e.second))
      throw DdsError(Err::precondition, "map must send its domain into itself");

  // Degenerate empty domain: take the middle layer as the maximal antichain
  // of fixed points.  Otherwise complete greedily.
  PartialMap hat = pm;
  if (pm.domain_size() == 0) {
    std::vector<std::pair<Rank, Rank>> fixed;
    for (const State& x : level_set(sp, sp.level_span() / 2)) {
      Rank r = sp.rank(x);
      fixed.emplace_back(r, r);
    }
    hat = PartialMap(sp, std::move(fixed));
  } else {
    hat = complete_with_antichain(pm);  // fixed points off the domain
  }
  const Rank bottom = 0, top = sp.size() - 1;
  std::vector<Rank> members = hat.domain();
  std::vector<Rank> g(static_cast<size_t>(sp.size()), -1);
  for (Rank z = 0; z < sp.size(); ++z) {
    if (auto img = hat.image_of(z)) {
      g[static_cast<size_t>(z)] = *img;
      continue;
    }
    // z is comparable to the maximal antichain; it cannot be both above one
    // member and below another (those members would then be comparable).
    bool below = false;
    for (Rank m : members) {
      if (rank_leq(sp, z, m)) {
        below = true;
        break;
      }
    }
    g[static_cast<size_t>(z)] = below ? bottom : top;
  }
  return finish(sp, g);
}

TotalMap discretize_map(const GridSamples& samples) {
  const StateSpace& sp = samples.grid;
  if (!sp.is_uniform())
    throw DdsError(Err::unsupported_space, "grid must have uniform levels");
  if (static_cast<std::int64_t>(samples.values.size()) != sp.size())
    throw DdsError(Err::incomplete_map, "samples must cover every grid point");
  const int n = sp.dim();
  const int p = sp.levels()[0];
  std::vector<std::uint32_t> table(static_cast<size_t>(sp.size()));
  for (Rank r = 0; r < sp.size(); ++r) {
    const auto& val = samples.values[static_cast<size_t>(r)];
    if (static_cast<int>(val.size()) != n)
      throw DdsError(Err::parse, "sample arity mismatch");
    Rank img = 0;
    for (int k = 0; k < n; ++k) {
      double v = val[static_cast<size_t>(k)];
      if (!(v >= 0.0 && v <= 1.0))
        throw DdsError(Err::input_range, "sample value outside [0,1]");
      int level = static_cast<int>(std::floor(v * (p - 1) + 0.5));  // ties up
      level = std::clamp(level, 0, p - 1);
      img = img * p + level;
    }
    table[static_cast<size_t>(r)] = static_cast<std::uint32_t>(img);
  }
  return TotalMap(sp, std::move(table));
}

double approximation_error(const GridSamples& samples, const TotalMap& m) {
  const StateSpace& sp = m.space();
  if (!(sp == samples.grid))
    throw DdsError(Err::dimension_mismatch, "samples and map disagree on the grid");
  const int p = sp.levels()[0];
  double worst = 0.0;
  for (Rank r = 0; r < sp.size(); ++r) {
    Rank img = m.apply_rank(r);
    for (int k = 0; k < sp.dim(); ++k) {
      double got = static_cast<double>(sp.digit(img, k)) / (p - 1);
      worst = std::max(worst,
                       std::abs(got - samples.values[static_cast<size_t>(r)]
                                           [static_cast<size_t>(k)]));
    }
  }
  return worst;
}

ModulusReport modulus_check(const PartialMap& pm) {
  if (pm.domain_size() < 2)
    throw DdsError(Err::not_applicable, "need at least 2 domain points");
  level_set_sum_or_throw(pm);
  const StateSpace& sp = pm.space();
  const int n = sp.dim();
  auto sup_dist = [&](Rank a, Rank b) {
    int d = 0;
    for (int k = 0; k < n; ++k)
      d = std::max(d, std::abs(sp.digit(a, k) - sp.digit(b, k)));
    return d;
  };
  ModulusReport rep;
  for (const auto& [x, gx] : pm.entries()) {
    for (const auto& [y, gy] : pm.entries()) {
      if (x == y) continue;
      rep.lip_partial = std::max(
          rep.lip_partial, static_cast<double>(sup_dist(gx, gy)) / sup_dist(x, y));
    }
  }
  TotalMap g = extend_cooperative(pm);
  for (Rank x = 0; x < sp.size(); ++x) {
    for (Rank y = x + 1; y < sp.size(); ++y) {
      rep.lip_extension =
          std::max(rep.lip_extension,
                   static_cast<double>(sup_dist(g.apply_rank(x), g.apply_rank(y))) /
                       sup_dist(x, y));
    }
  }
  rep.factor = 6.0 * n + 3.0;
  rep.holds = rep.lip_extension <= rep.factor * rep.lip_partial + 1e-12;
  return rep;
}

}  // namespace dds
