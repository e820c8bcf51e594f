#include "dds/antichain.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace dds {

UnorderedCheck is_unordered(const StateSpace& space,
                            const std::vector<State>& states) {
  for (const auto& x : states) space.require_valid(x);
  UnorderedCheck res;
  for (size_t a = 0; a < states.size(); ++a) {
    for (size_t b = a + 1; b < states.size(); ++b) {
      Order o = compare(states[a], states[b]).order;
      if (o == Order::less) {
        res.unordered = false;
        res.witness = {states[a], states[b]};
        return res;
      }
      if (o == Order::greater || o == Order::equal) {
        res.unordered = false;
        res.witness = {states[b], states[a]};
        return res;
      }
    }
  }
  return res;
}

namespace {

// Emit all states with the given coordinate sum, in rank order.
void layer_rec(const StateSpace& space, int i, int remaining, int headroom,
               State& cur, std::vector<State>& out) {
  if (i == space.dim()) {
    out.push_back(cur);
    return;
  }
  int p = space.levels()[i];
  headroom -= p - 1;
  for (int v = 0; v <= std::min(p - 1, remaining); ++v) {
    if (remaining - v > headroom) continue;  // tail cannot absorb the rest
    cur[i] = v;
    layer_rec(space, i + 1, remaining - v, headroom, cur, out);
  }
  cur[i] = 0;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw DdsError(Err::big_count, "layer count exceeds 64-bit range");
  return r;
}

}  // namespace

std::vector<State> level_set(const StateSpace& space, int target_sum) {
  std::vector<State> out;
  State cur = space.zero();
  layer_rec(space, 0, target_sum, space.level_span(), cur, out);
  return out;
}

std::vector<State> middle_layer(const StateSpace& space) {
  if (!space.is_uniform())
    throw DdsError(Err::unsupported_space,
                   "middle layer is defined for uniform levels");
  return level_set(space, space.level_span() / 2);
}

std::int64_t middle_layer_count(const std::vector<int>& levels) {
  int span = 0;
  for (int p : levels) {
    if (p < 2) throw DdsError(Err::unsupported_space, "levels must be >= 2");
    span += p - 1;
  }
  int target = span / 2;
  std::vector<std::int64_t> dp(static_cast<size_t>(target) + 1, 0);
  dp[0] = 1;
  for (int p : levels) {
    std::vector<std::int64_t> next(dp.size(), 0);
    for (int s = 0; s <= target; ++s) {
      if (dp[static_cast<size_t>(s)] == 0) continue;
      for (int v = 0; v < p && s + v <= target; ++v)
        next[static_cast<size_t>(s + v)] =
            checked_add(next[static_cast<size_t>(s + v)],
                        dp[static_cast<size_t>(s)]);
    }
    dp = std::move(next);
  }
  return dp[static_cast<size_t>(target)];
}

std::int64_t middle_layer_count(int n, int p) {
  if (n < 1 || p < 2)
    throw DdsError(Err::precondition, "need n >= 1 and p >= 2");
  return middle_layer_count(std::vector<int>(static_cast<size_t>(n), p));
}

double clt_estimate(int n, int p) {
  double var = (static_cast<double>(p) - 1.0) * (static_cast<double>(p) + 1.0) / 12.0;
  return std::pow(static_cast<double>(p), n) /
         std::sqrt(2.0 * M_PI * static_cast<double>(n) * var);
}

double clt_ratio(int n, int p) {
  return static_cast<double>(middle_layer_count(n, p)) / clt_estimate(n, p);
}

LayerBoundsReport check_layer_bounds(int n, int p, double c) {
  LayerBoundsReport rep;
  rep.count = middle_layer_count(n, p);
  rep.lower_bound = std::pow(static_cast<double>(p), n - 1) / n;
  rep.lower_ok = static_cast<double>(rep.count) >= rep.lower_bound;
  rep.upper_applicable = n >= 2;
  rep.next_count = middle_layer_count(n + 1, p);
  rep.upper_ref = std::pow(static_cast<double>(p), n);
  rep.upper_ok = static_cast<double>(rep.next_count) < rep.upper_ref;
  rep.c = c;
  rep.c_pow_n = std::pow(c, n);
  rep.exponential_ok = static_cast<double>(rep.count) >= rep.c_pow_n;
  return rep;
}

namespace {

// Hopcroft-Karp maximum matching on the strict comparability bipartite
// graph (left copy -> right copy, arc iff x < y).
struct Matching {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, dist;

  explicit Matching(int n_, const std::vector<std::vector<int>>& a)
      : n(n_), adj(a), match_l(static_cast<size_t>(n_), -1),
        match_r(static_cast<size_t>(n_), -1), dist(static_cast<size_t>(n_)) {}

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n; ++u) {
      if (match_l[static_cast<size_t>(u)] < 0) {
        dist[static_cast<size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<size_t>(u)] = -1;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<size_t>(u)]) {
        int w = match_r[static_cast<size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj[static_cast<size_t>(u)]) {
      int w = match_r[static_cast<size_t>(v)];
      if (w < 0 || (dist[static_cast<size_t>(w)] ==
                        dist[static_cast<size_t>(u)] + 1 &&
                    dfs(w))) {
        match_l[static_cast<size_t>(u)] = v;
        match_r[static_cast<size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<size_t>(u)] = -1;
    return false;
  }

  int run() {
    int size = 0;
    // greedy seed
    for (int u = 0; u < n; ++u)
      for (int v : adj[static_cast<size_t>(u)])
        if (match_r[static_cast<size_t>(v)] < 0) {
          match_l[static_cast<size_t>(u)] = v;
          match_r[static_cast<size_t>(v)] = u;
          ++size;
          break;
        }
    while (bfs())
      for (int u = 0; u < n; ++u)
        if (match_l[static_cast<size_t>(u)] < 0 && dfs(u)) ++size;
    return size;
  }
};

}  // namespace

std::int64_t max_antichain_exact(const StateSpace& space, std::int64_t cap) {
  const std::int64_t size = space.size();
  if (size > cap)
    throw DdsError(Err::oracle_cap,
                   "space of size " + std::to_string(size) +
                       " exceeds the oracle cap " + std::to_string(cap));
  const int n = static_cast<int>(size);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && rank_leq(space, a, b)) adj[static_cast<size_t>(a)].push_back(b);
  Matching m(n, adj);
  return size - m.run();
}

}  // namespace dds
