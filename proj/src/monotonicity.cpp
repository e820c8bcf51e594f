#include "dds/monotonicity.hpp"

#include <algorithm>
#include <cstdlib>

namespace dds {

CoopCheck is_cooperative(const TotalMap& m) {
  const StateSpace& sp = m.space();
  const int n = sp.dim();
  CoopCheck res;
  for (Rank r = 0; r < sp.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      Rank up = step_rank(sp, r, i, StepDir::up);
      if (up == r) continue;
      Rank ga = m.apply_rank(r), gb = m.apply_rank(up);
      for (int j = 0; j < n; ++j) {
        if (sp.digit(ga, j) > sp.digit(gb, j)) {
          res.cooperative = false;
          res.witness = CoopWitness{sp.unrank(r), i, j};
          return res;
        }
      }
    }
  }
  res.cooperative = true;
  return res;
}

CoopCheck is_cooperative_bruteforce(const TotalMap& m) {
  const StateSpace& sp = m.space();
  CoopCheck res;
  for (Rank a = 0; a < sp.size(); ++a) {
    for (Rank b = 0; b < sp.size(); ++b) {
      if (a == b || !rank_leq(sp, a, b)) continue;
      Rank ga = m.apply_rank(a), gb = m.apply_rank(b);
      for (int j = 0; j < sp.dim(); ++j) {
        if (sp.digit(ga, j) > sp.digit(gb, j)) {
          res.cooperative = false;
          // report the coordinate in which a and b first differ upward
          int i = 0;
          while (sp.digit(a, i) >= sp.digit(b, i)) ++i;
          res.witness = CoopWitness{sp.unrank(a), i, j};
          return res;
        }
      }
    }
  }
  res.cooperative = true;
  return res;
}

StrongCoopCheck is_strongly_cooperative(const TotalMap& m,
                                        bool verify_equivalence) {
  const StateSpace& sp = m.space();
  StrongCoopCheck res;
  if (!is_cooperative(m).cooperative) return res;

  // Level preservation is the O(size) primary test.
  bool sum_ok = true;
  for (Rank r = 0; r < sp.size() && sum_ok; ++r)
    if (rank_sum(sp, m.apply_rank(r)) != rank_sum(sp, r)) sum_ok = false;
  res.strongly_cooperative = sum_ok;
  res.sm_sum = sum_ok;

  if (!sum_ok || verify_equivalence) {
    // Strictness on covering pairs: x < x^{i+} must give g(x) != g(x^{i+}).
    // Difference-sum on covering pairs: S(g(x^{i+})) >= S(g(x)) + 1.
    bool strict_ok = true, diff_ok = true;
    for (Rank r = 0; r < sp.size(); ++r) {
      for (int i = 0; i < sp.dim(); ++i) {
        Rank up = step_rank(sp, r, i, StepDir::up);
        if (up == r) continue;
        Rank ga = m.apply_rank(r), gb = m.apply_rank(up);
        if (ga == gb) {
          strict_ok = false;
          if (!res.witness) res.witness = {sp.unrank(r), sp.unrank(up)};
        }
        if (rank_sum(sp, gb) < rank_sum(sp, ga) + 1) diff_ok = false;
      }
      if (!verify_equivalence && res.witness) break;
    }
    if (verify_equivalence) {
      res.sm_strict = strict_ok;
      res.sm_diff = diff_ok;
      res.verified_equivalence = true;
      if (sum_ok != strict_ok || sum_ok != diff_ok)
        throw DdsError(Err::theorem_violation,
                       "level-preservation, strictness, and difference-sum "
                       "conditions disagree on a cooperative map");
    }
  } else {
    res.sm_strict = true;
    res.sm_diff = true;
  }
  return res;
}

AlmostCoopCheck is_almost_cooperative(const TotalMap& m) {
  const StateSpace& sp = m.space();
  const int n = sp.dim();
  AlmostCoopCheck res;
  // Per ordered pair (i, j): does any state break the monotone inequalities,
  // and does any state break the reversed ones?
  std::vector<std::uint8_t> break_mono(static_cast<size_t>(n) * n, 0);
  std::vector<std::uint8_t> break_rev(static_cast<size_t>(n) * n, 0);
  for (Rank r = 0; r < sp.size(); ++r) {
    Rank g = m.apply_rank(r);
    for (int i = 0; i < n; ++i) {
      Rank gu = m.apply_rank(step_rank(sp, r, i, StepDir::up));
      Rank gd = m.apply_rank(step_rank(sp, r, i, StepDir::down));
      for (int j = 0; j < n; ++j) {
        int a = sp.digit(gd, j), b = sp.digit(g, j), c = sp.digit(gu, j);
        if (!(a <= b && b <= c)) break_mono[static_cast<size_t>(i) * n + j] = 1;
        if (!(a >= b && b >= c)) break_rev[static_cast<size_t>(i) * n + j] = 1;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool bm = break_mono[static_cast<size_t>(i) * n + j];
      bool br = break_rev[static_cast<size_t>(i) * n + j];
      if (!bm) continue;  // conforming
      if (i == j) {
        res.diagonal_ok = false;
        continue;
      }
      if (br) {
        ++res.mixed_pairs;
      } else {
        ++res.reversed_pairs;
        res.exception_i = i;
        res.exception_j = j;
      }
    }
  }
  res.almost_cooperative =
      res.diagonal_ok && res.reversed_pairs == 1 && res.mixed_pairs == 0;
  if (!res.almost_cooperative) {
    res.exception_i = -1;
    res.exception_j = -1;
  }
  return res;
}

CooperativityReport analyze_cooperativity(const TotalMap& m) {
  CooperativityReport rep;
  CoopCheck coop = is_cooperative(m);
  if (coop.cooperative) {
    rep.verdict = CooperativityReport::Verdict::cooperative;
    StrongCoopCheck sc = is_strongly_cooperative(m);
    rep.strongly_cooperative = sc.strongly_cooperative;
    rep.sc_witness = sc.witness;
  } else {
    rep.witness = coop.witness;
    AlmostCoopCheck ac = is_almost_cooperative(m);
    if (ac.almost_cooperative) {
      rep.verdict = CooperativityReport::Verdict::almost_cooperative;
      rep.exception_i = ac.exception_i;
      rep.exception_j = ac.exception_j;
    } else {
      rep.verdict = CooperativityReport::Verdict::neither;
    }
  }
  return rep;
}

bool perturbation_contract(const TotalMap& m, const State& x0,
                           const State& y0, std::int64_t t_max) {
  const StateSpace& sp = m.space();
  sp.require_valid(x0);
  sp.require_valid(y0);
  if (!is_strongly_cooperative(m).strongly_cooperative)
    throw DdsError(Err::contract_inapplicable,
                   "perturbation contract requires a strongly cooperative map");
  auto dist = [&](Rank a, Rank b) {
    int s = 0;
    for (int i = 0; i < sp.dim(); ++i)
      s += std::abs(sp.digit(a, i) - sp.digit(b, i));
    return s;
  };
  Rank x = sp.rank(x0), y = sp.rank(y0);
  const int d0 = dist(x, y);
  for (std::int64_t t = 0; t <= t_max; ++t) {
    if (dist(x, y) > d0) return false;
    x = m.apply_rank(x);
    y = m.apply_rank(y);
  }
  return true;
}

std::vector<State> eventual_sc_obstruction(const StateSpace& space) {
  if (space.dim() < 2)
    throw DdsError(Err::not_applicable,
                   "the obstruction chain needs dimension > 1");
  int imax = 0;
  for (int i = 1; i < space.dim(); ++i)
    if (space.levels()[i] > space.levels()[imax]) imax = i;
  const int pmax = space.levels()[imax];
  std::vector<State> chain;
  State cur = space.zero();
  chain.push_back(cur);
  for (int v = 1; v < pmax; ++v) {
    cur[imax] = v;
    chain.push_back(cur);
  }
  int other = imax == 0 ? 1 : 0;
  cur[other] = 1;
  chain.push_back(cur);  // p_max + 1 states, strictly increasing
  return chain;
}

}  // namespace dds
