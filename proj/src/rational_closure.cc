#include "defeasor/rational_closure.h"

#include <stdexcept>
#include <utility>

namespace defeasor {

std::string Rank::str() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

Concept materialize(std::span<const DefeasibleInclusion> defaults) {
  std::vector<Concept> parts;
  parts.reserve(defaults.size());
  for (const auto& d : defaults) {
    parts.push_back(Concept::Or(Concept::Not(d.lhs), d.rhs));
  }
  return Concept::And(std::move(parts));
}

bool is_exceptional(const Reasoner& reasoner, const DefaultSet& level,
                    const Concept& c) {
  return !reasoner.is_satisfiable(Concept::And(materialize(level), c));
}

RankedPartition::RankedPartition(std::shared_ptr<const Reasoner> reasoner,
                                 std::vector<DefaultSet> levels,
                                 DefaultSet infinite)
    : reasoner_(std::move(reasoner)),
      levels_(std::move(levels)),
      infinite_(std::move(infinite)) {
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i) {
    if (!is_subset(levels_[i + 1], levels_[i]) ||
        levels_[i + 1] == levels_[i]) {
      throw std::logic_error("ranking levels are not strictly decreasing");
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] == infinite_) break;
    strata_.push_back(set_difference(levels_[i], level_defaults(i + 1)));
  }
}

const DefaultSet& RankedPartition::level_defaults(std::size_t i) const {
  return i < levels_.size() ? levels_[i] : infinite_;
}

Rank RankedPartition::rank_of(const DefeasibleInclusion& d) const {
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (contains(strata_[i], d)) return Rank::Finite(i);
  }
  if (contains(infinite_, d)) return Rank::Infinite();
  return rank_of(d.lhs);
}

Rank RankedPartition::rank_of(const Concept& c) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = rank_cache_.find(c);
    if (it != rank_cache_.end()) return it->second;
  }
  Rank r = Rank::Infinite();
  for (std::size_t i = 0; i <= levels_.size(); ++i) {
    if (!is_exceptional(i, c)) {
      r = Rank::Finite(i);
      break;
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  rank_cache_.emplace(c, r);
  return r;
}

bool RankedPartition::is_exceptional(std::size_t level,
                                     const Concept& c) const {
  return defeasor::is_exceptional(*reasoner_, level_defaults(level), c);
}

RankedPartition compute_ranking(const KnowledgeBase& kb,
                                const TableauOptions& options) {
  auto reasoner =
      std::make_shared<const Reasoner>(StrictTheory(kb.strict()), options);
  std::vector<DefaultSet> levels{kb.defeasible()};
  DefaultSet infinite;
  while (true) {
    const DefaultSet& current = levels.back();
    if (current.empty()) break;
    DefaultSet next;
    for (const auto& d : current) {
      if (is_exceptional(*reasoner, current, d.lhs)) next.push_back(d);
    }
    if (next == current) {
      infinite = current;
      break;
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return RankedPartition(std::move(reasoner), std::move(levels),
                         std::move(infinite));
}

bool rc_entails(const RankedPartition& p, const Query& q) {
  if (const auto* s = std::get_if<StrictQuery>(&q)) {
    return p.rank_of(Concept::And(s->lhs, Concept::Not(s->rhs))).is_infinite();
  }
  const auto& d = std::get<DefeasibleQuery>(q);
  const Rank b = p.rank_of(d.lhs);
  if (b.is_infinite()) return true;
  return b < p.rank_of(Concept::And(d.lhs, Concept::Not(d.rhs)));
}

bool rc_entails(const KnowledgeBase& kb, const Query& q,
                const TableauOptions& options) {
  return rc_entails(compute_ranking(kb, options), q);
}

}  // namespace defeasor
