// Skeptical closure: a single base per focus concept B, built by adding the
// rank strata below rank(B) one at a time, from the highest down, for as
// long as each stratum stays jointly compatible with B.

#ifndef DEFEASOR_SKEPTICAL_CLOSURE_H_
#define DEFEASOR_SKEPTICAL_CLOSURE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "defeasor/kb.h"
#include "defeasor/rational_closure.h"

namespace defeasor {

// Satisfiability of mat(δ(Ek)) ⊓ mat(s) ⊓ mat(s_prime) ⊓ b w.r.t. Strict.
// Increments *calls when given.
bool globally_compatible(const RankedPartition& p, const DefaultSet& s,
                         const DefaultSet& s_prime, const Concept& b,
                         std::size_t k, std::size_t* calls = nullptr);

// Members d of Di with {d} globally compatible with b w.r.t. Ek ∪ extra.
// One compatibility check per member of Di.
DefaultSet individually_compatible(const RankedPartition& p, const Concept& b,
                                   const DefaultSet& extra, std::size_t i,
                                   std::size_t* calls = nullptr);

enum class StratumStatus { kAccepted, kRejected, kNotEvaluated };

const char* to_string(StratumStatus s);

struct StratumReport {
  std::size_t rank = 0;
  // Members of Di that are individually compatible; empty when not
  // evaluated.
  DefaultSet compatible;
  // Members of Di that are not.
  DefaultSet incompatible;
  StratumStatus status = StratumStatus::kNotEvaluated;
};

struct SkepticalBase {
  Concept focus;
  std::size_t k = 0;
  // One report per rank k−1, k−2, ..., 0, in that order.
  std::vector<StratumReport> strata;
  // Least accepted rank; equals k when no stratum below k exists. Empty
  // when the base collapsed.
  std::optional<std::size_t> cutoff;
  // First rank whose stratum failed the joint check.
  std::optional<std::size_t> failing_level;
  // The stratum at rank k−1 failed, so the base is exactly Ek.
  bool collapsed = false;
  // δ(Ek).
  DefaultSet level_defaults;
  // Union of the accepted strata.
  DefaultSet accepted;
  // Compatibility checks consumed while building the base.
  std::size_t call_count = 0;

  // δ(Ek) ∪ accepted.
  DefaultSet defaults() const { return set_union(level_defaults, accepted); }
};

// Requires rank(b) finite.
SkepticalBase skeptical_base(const RankedPartition& p, const Concept& b);

struct SkepticalAnswer {
  bool entailed = false;
  // Absent when rank(B) is infinite.
  std::optional<SkepticalBase> base;
  // Checks used for the final entailment test (0 or 1).
  std::size_t query_checks = 0;
};

SkepticalAnswer sk_entails(const RankedPartition& p, const DefeasibleQuery& q);
SkepticalAnswer sk_entails(const KnowledgeBase& kb, const DefeasibleQuery& q,
                           const TableauOptions& options = {});

}  // namespace defeasor

#endif  // DEFEASOR_SKEPTICAL_CLOSURE_H_
