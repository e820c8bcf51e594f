#include "dds/embedding.hpp"

#include <string>

#include "dds/antichain.hpp"

namespace dds {

bool embedding_feasible(int m, int q, int n, int p) {
  if (m < 1 || n < 1 || q < 2 || p < 2)
    throw DdsError(Err::precondition, "need m,n >= 1 and q,p >= 2");
  std::int64_t d = middle_layer_count(n, p);
  std::int64_t pow = 1;
  for (int k = 0; k < m; ++k) {
    if (__builtin_mul_overflow(pow, static_cast<std::int64_t>(q), &pow))
      return false;  // q^m beyond 63 bits certainly exceeds d
    if (pow > d && k + 1 < m) return false;
  }
  return pow <= d;
}

std::pair<Embedding, TotalMap> embed_system(const TotalMap& f,
                                            const StateSpace& target) {
  const StateSpace& src = f.space();
  std::vector<State> layer = middle_layer(target);  // rank order
  if (src.size() > static_cast<std::int64_t>(layer.size()))
    throw DdsError(Err::feasibility,
                   "source size " + std::to_string(src.size()) +
                       " exceeds the target middle-layer size " +
                       std::to_string(layer.size()));

  Embedding emb{src, target, {}};
  emb.phi.reserve(static_cast<size_t>(src.size()));
  for (Rank r = 0; r < src.size(); ++r)
    emb.phi.push_back(target.rank(layer[static_cast<size_t>(r)]));

  // Conjugate f onto the image antichain and extend.
  std::vector<std::pair<Rank, Rank>> entries;
  entries.reserve(static_cast<size_t>(src.size()));
  for (Rank r = 0; r < src.size(); ++r)
    entries.emplace_back(emb.map_rank(r), emb.map_rank(f.apply_rank(r)));
  TotalMap g = extend_unordered(PartialMap(target, std::move(entries)));

  ConjugacyCheck cc = verify_conjugacy(f, g, emb);
  if (!cc.holds)
    throw DdsError(Err::theorem_violation,
                   "embedding failed to conjugate the source dynamics");
  return {std::move(emb), std::move(g)};
}

ConjugacyCheck verify_conjugacy(const TotalMap& f, const TotalMap& g,
                                const Embedding& phi) {
  ConjugacyCheck res;
  for (Rank r = 0; r < f.space().size(); ++r) {
    if (g.apply_rank(phi.map_rank(r)) != phi.map_rank(f.apply_rank(r))) {
      res.holds = false;
      res.witness = f.space().unrank(r);
      return res;
    }
  }
  res.holds = true;
  return res;
}

ThermometerLift::ThermometerLift(TotalMap base)
    : base_(std::move(base)),
      lifted_(StateSpace::boolean(base_.space().level_span())) {
  offset_.reserve(static_cast<size_t>(base_.space().dim()));
  int at = 0;
  for (int p : base_.space().levels()) {
    offset_.push_back(at);
    at += p - 1;
  }
}

State ThermometerLift::lift(const State& x) const {
  base_.space().require_valid(x);
  State y(static_cast<size_t>(lifted_.dim()), 0);
  for (int i = 0; i < base_.space().dim(); ++i)
    for (int l = 1; l < base_.space().levels()[i]; ++l)
      y[static_cast<size_t>(offset_[static_cast<size_t>(i)] + l - 1)] =
          x[static_cast<size_t>(i)] >= l ? 1 : 0;
  return y;
}

State ThermometerLift::project(const State& y) const {
  lifted_.require_valid(y);
  State x(static_cast<size_t>(base_.space().dim()), 0);
  for (int i = 0; i < base_.space().dim(); ++i) {
    int cnt = 0;
    for (int l = 1; l < base_.space().levels()[i]; ++l)
      cnt += y[static_cast<size_t>(offset_[static_cast<size_t>(i)] + l - 1)];
    x[static_cast<size_t>(i)] = cnt;
  }
  return x;
}

State ThermometerLift::retract(const State& y) const {
  // Unary normalization: each block keeps its popcount, ones pushed front.
  return lift(project(y));
}

State ThermometerLift::eval(const State& y) const {
  return lift(base_.apply(project(y)));
}

Rank ThermometerLift::eval_rank(Rank r) const {
  return lifted_.rank(eval(lifted_.unrank(r)));
}

Embedding ThermometerLift::injection() const {
  Embedding emb{base_.space(), lifted_, {}};
  emb.phi.reserve(static_cast<size_t>(base_.space().size()));
  for (Rank r = 0; r < base_.space().size(); ++r)
    emb.phi.push_back(lifted_.rank(lift(base_.space().unrank(r))));
  return emb;
}

TotalMap ThermometerLift::to_total_map(std::int64_t table_cap) const {
  if (lifted_.size() > table_cap)
    throw DdsError(Err::unsupported_space,
                   "lifted space exceeds the table cap; evaluate lazily");
  std::vector<std::uint32_t> table(static_cast<size_t>(lifted_.size()));
  for (Rank r = 0; r < lifted_.size(); ++r)
    table[static_cast<size_t>(r)] = static_cast<std::uint32_t>(eval_rank(r));
  return TotalMap(lifted_, std::move(table));
}

TotalMap ThermometerLift::retraction_map() const {
  std::vector<std::uint32_t> table(static_cast<size_t>(lifted_.size()));
  for (Rank r = 0; r < lifted_.size(); ++r)
    table[static_cast<size_t>(r)] =
        static_cast<std::uint32_t>(lifted_.rank(retract(lifted_.unrank(r))));
  return TotalMap(lifted_, std::move(table));
}

}  // namespace dds
