// Exceptionality, the ranking sequence E0 ⊇ E1 ⊇ ... and rational closure.
//
// Every level Ei is Strict(T) plus a set of defaults; only the defaults are
// stored, the strict part lives in the shared Reasoner. A concept C is
// exceptional for E when Strict ⊨ mat(δ(E)) ⊓ C ⊑ ⊥.

#ifndef DEFEASOR_RATIONAL_CLOSURE_H_
#define DEFEASOR_RATIONAL_CLOSURE_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "defeasor/kb.h"
#include "defeasor/tableau.h"

namespace defeasor {

class Rank {
 public:
  static Rank Finite(std::size_t i) { return Rank(i, false); }
  static Rank Infinite() { return Rank(0, true); }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  // Requires is_finite().
  std::size_t value() const { return value_; }

  // Infinite is greater than every finite rank.
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.infinite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const Rank& a, const Rank& b) {
    return (a <=> b) == 0;
  }

  // "0", "1", ... or "inf".
  std::string str() const;

 private:
  Rank(std::size_t v, bool inf) : value_(v), infinite_(inf) {}
  std::size_t value_;
  bool infinite_;
};

// ⊓ (¬C ⊔ D) over the defaults in canonical order; Top when empty.
Concept materialize(std::span<const DefeasibleInclusion> defaults);

bool is_exceptional(const Reasoner& reasoner, const DefaultSet& level,
                    const Concept& c);

class RankedPartition {
 public:
  RankedPartition(std::shared_ptr<const Reasoner> reasoner,
                  std::vector<DefaultSet> levels, DefaultSet infinite);

  const Reasoner& reasoner() const { return *reasoner_; }
  std::shared_ptr<const Reasoner> shared_reasoner() const { return reasoner_; }
  const StrictTheory& strict() const { return reasoner_->theory(); }

  // δ(E0), δ(E1), ... ; strictly decreasing. The last entry is either the
  // last nonempty finite level or the infinite-rank fixpoint. A KB without
  // defaults has the single level ∅.
  const std::vector<DefaultSet>& levels() const { return levels_; }

  // δ(Ei); past the stored levels this is the infinite-rank set.
  const DefaultSet& level_defaults(std::size_t i) const;

  // Di = δ(Ei) − δ(Ei+1) for every finite rank i.
  const std::vector<DefaultSet>& strata() const { return strata_; }
  std::size_t finite_rank_count() const { return strata_.size(); }

  // Defaults whose antecedent has infinite rank.
  const DefaultSet& infinite() const { return infinite_; }

  // Rank of a default of the KB: the rank of its stratum.
  Rank rank_of(const DefeasibleInclusion& d) const;

  // Least i with c not exceptional for Ei. Memoized; thread-safe.
  Rank rank_of(const Concept& c) const;

  bool is_exceptional(std::size_t level, const Concept& c) const;

 private:
  std::shared_ptr<const Reasoner> reasoner_;
  std::vector<DefaultSet> levels_;
  DefaultSet infinite_;
  std::vector<DefaultSet> strata_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Concept, Rank, ConceptHash> rank_cache_;
};

// Requires a classically consistent strict part. ABox is ignored.
RankedPartition compute_ranking(const KnowledgeBase& kb,
                                const TableauOptions& options = {});

// T(B) ⊑ D: rank(B) < rank(B ⊓ ¬D), or rank(B) infinite.
// C ⊑ D: C ⊓ ¬D has infinite rank, i.e. it is empty in every ranked model.
// Without infinite-rank defaults this is classical entailment from Strict.
bool rc_entails(const RankedPartition& p, const Query& q);
bool rc_entails(const KnowledgeBase& kb, const Query& q,
                const TableauOptions& options = {});

}  // namespace defeasor

#endif  // DEFEASOR_RATIONAL_CLOSURE_H_
