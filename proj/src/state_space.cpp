#include "dds/state_space.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dds {

namespace {
constexpr std::int64_t kSizeCap = std::int64_t{1} << 31;
}

const char* err_name(Err kind) {
  switch (kind) {
    case Err::invalid_state: return "invalid-state";
    case Err::invalid_index: return "invalid-index";
    case Err::invalid_rank: return "invalid-rank";
    case Err::dimension_mismatch: return "dimension-mismatch";
    case Err::unsupported_space: return "unsupported-space";
    case Err::big_count: return "big-count";
    case Err::oracle_cap: return "oracle-cap";
    case Err::precondition: return "precondition";
    case Err::feasibility: return "feasibility";
    case Err::contract_inapplicable: return "contract-inapplicable";
    case Err::theorem_violation: return "theorem-violation";
    case Err::construction_failure: return "construction-failure";
    case Err::infeasible: return "infeasible";
    case Err::input_range: return "input-range";
    case Err::not_applicable: return "not-applicable";
    case Err::parse: return "parse";
    case Err::duplicate_state: return "duplicate-state";
    case Err::incomplete_map: return "incomplete-map";
    case Err::range: return "range";
    case Err::invalid_permutation: return "invalid-permutation";
    case Err::invalid_attractor: return "invalid-attractor";
    case Err::usage: return "usage";
  }
  return "unknown";
}

StateSpace::StateSpace(std::vector<int> levels) : levels_(std::move(levels)) {
  if (levels_.empty())
    throw DdsError(Err::unsupported_space, "state space needs dimension >= 1");
  for (int p : levels_)
    if (p < 2)
      throw DdsError(Err::unsupported_space,
                     "every level count must be >= 2, got " + std::to_string(p));
  size_ = 1;
  for (int p : levels_) {
    size_ *= p;
    if (size_ > kSizeCap)
      throw DdsError(Err::unsupported_space,
                     "state space exceeds the 2^31 size cap");
  }
  strides_.assign(levels_.size(), 1);
  for (int i = dim() - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * levels_[i + 1];
}

StateSpace StateSpace::uniform(int n, int p) {
  if (n < 1) throw DdsError(Err::unsupported_space, "dimension must be >= 1");
  return StateSpace(std::vector<int>(static_cast<size_t>(n), p));
}

bool StateSpace::is_uniform() const {
  return std::all_of(levels_.begin(), levels_.end(),
                     [&](int p) { return p == levels_[0]; });
}

bool StateSpace::is_boolean() const {
  return std::all_of(levels_.begin(), levels_.end(),
                     [](int p) { return p == 2; });
}

int StateSpace::level_span() const {
  int n = 0;
  for (int p : levels_) n += p - 1;
  return n;
}

bool StateSpace::contains(const State& x) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (x[i] < 0 || x[i] >= levels_[i]) return false;
  return true;
}

void StateSpace::require_valid(const State& x) const {
  if (!contains(x))
    throw DdsError(Err::invalid_state, "state is not a member of the space");
}

Rank StateSpace::rank(const State& x) const {
  require_valid(x);
  Rank r = 0;
  for (int i = 0; i < dim(); ++i) r = r * levels_[i] + x[i];
  return r;
}

void StateSpace::require_rank(Rank r) const {
  if (r < 0 || r >= size_)
    throw DdsError(Err::invalid_rank, "rank " + std::to_string(r) +
                                          " out of [0, " +
                                          std::to_string(size_) + ")");
}

State StateSpace::unrank(Rank r) const {
  require_rank(r);
  State x(levels_.size());
  for (int i = dim() - 1; i >= 0; --i) {
    x[i] = static_cast<int>(r % levels_[i]);
    r /= levels_[i];
  }
  return x;
}

State StateSpace::top() const {
  State x(levels_.size());
  for (int i = 0; i < dim(); ++i) x[i] = levels_[i] - 1;
  return x;
}

std::vector<State> StateSpace::enumerate() const {
  std::vector<State> out;
  out.reserve(static_cast<size_t>(size_));
  State cur = zero();
  for (Rank r = 0; r < size_; ++r) {
    out.push_back(cur);
    // odometer increment, last coordinate fastest
    for (int i = dim() - 1; i >= 0; --i) {
      if (++cur[i] < levels_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

OrderRel compare(const State& x, const State& y) {
  if (x.size() != y.size())
    throw DdsError(Err::dimension_mismatch, "states of different dimension");
  bool some_lt = false, some_gt = false, all_lt = true, all_gt = true;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) some_lt = true;
    if (x[i] > y[i]) some_gt = true;
    if (x[i] >= y[i]) all_lt = false;
    if (x[i] <= y[i]) all_gt = false;
  }
  OrderRel rel;
  if (!some_lt && !some_gt) rel.order = Order::equal;
  else if (!some_gt) rel.order = Order::less;
  else if (!some_lt) rel.order = Order::greater;
  else rel.order = Order::incomparable;
  rel.strictly_less_all = all_lt;
  rel.strictly_greater_all = all_gt;
  return rel;
}

int coord_sum(const State& x) {
  int s = 0;
  for (int v : x) s += v;
  return s;
}

State step(const StateSpace& space, const State& x, int i, StepDir dir) {
  space.require_valid(x);
  if (i < 0 || i >= space.dim())
    throw DdsError(Err::invalid_index, "coordinate index out of range");
  State y = x;
  if (dir == StepDir::up)
    y[i] = std::min(x[i] + 1, space.levels()[i] - 1);
  else
    y[i] = std::max(x[i] - 1, 0);
  return y;
}

Rank step_rank(const StateSpace& space, Rank r, int i, StepDir dir) {
  int d = space.digit(r, i);
  if (dir == StepDir::up)
    return d + 1 < space.levels()[i] ? r + space.strides()[i] : r;
  return d > 0 ? r - space.strides()[i] : r;
}

bool rank_leq(const StateSpace& space, Rank a, Rank b) {
  for (int i = 0; i < space.dim(); ++i)
    if (space.digit(a, i) > space.digit(b, i)) return false;
  return true;
}

int rank_sum(const StateSpace& space, Rank r) {
  int s = 0;
  for (int i = 0; i < space.dim(); ++i) s += space.digit(r, i);
  return s;
}

}  // namespace dds
