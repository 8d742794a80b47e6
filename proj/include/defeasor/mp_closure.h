// MP-closure and lexicographic closure.
//
// Both enumerate the bases compatible with a focus concept B that are
// maximal under a preference between rank-stratified default sets, and
// accept T(B) ⊑ D when every base entails it. The MP order compares strata
// by inclusion, the lexicographic order by cardinality, in both cases from
// the highest rank down.

#ifndef DEFEASOR_MP_CLOSURE_H_
#define DEFEASOR_MP_CLOSURE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "defeasor/kb.h"
#include "defeasor/rational_closure.h"

namespace defeasor {

// A set of finite-rank defaults split by rank.
class StratifiedDefaultSet {
 public:
  StratifiedDefaultSet() = default;

  // Throws std::invalid_argument for a default of infinite rank.
  static StratifiedDefaultSet stratify(const RankedPartition& p,
                                       const DefaultSet& s);

  const DefaultSet& defaults() const { return all_; }
  // Index i holds the rank-i members; trailing empty strata are trimmed.
  const std::vector<DefaultSet>& strata() const { return strata_; }
  // Empty past the last stored stratum.
  const DefaultSet& stratum(std::size_t i) const;

  bool operator==(const StratifiedDefaultSet& o) const {
    return all_ == o.all_;
  }

 private:
  DefaultSet all_;
  std::vector<DefaultSet> strata_;
};

// s_prime is strictly preferred to s: for some h, s_h ⊊ s'_h and the two
// agree on every rank above h.
bool mp_prefer(const StratifiedDefaultSet& s_prime,
               const StratifiedDefaultSet& s);

// At the highest rank where the stratum sizes differ, s_prime has more.
bool lex_prefer(const StratifiedDefaultSet& s_prime,
                const StratifiedDefaultSet& s);

enum class BaseOrder { kMp, kLex };

const char* to_string(BaseOrder order);

struct BaseOptions {
  // Compatibility checks allowed while enumerating bases.
  std::uint64_t candidate_budget = std::uint64_t{1} << 16;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

struct BaseSet {
  Concept focus;
  std::size_t k = 0;
  BaseOrder order = BaseOrder::kMp;
  // Canonically sorted. Each base contains every finite-rank default of
  // rank ≥ k.
  std::vector<StratifiedDefaultSet> bases;
  // Compatibility checks consumed.
  std::size_t call_count = 0;
};

// Requires rank(b) finite.
BaseSet maximal_bases(const RankedPartition& p, const Concept& b,
                      BaseOrder order, const BaseOptions& options = {});

struct ClosureAnswer {
  bool entailed = false;
  // Absent when rank(B) is infinite.
  std::optional<BaseSet> bases;
  std::size_t query_checks = 0;
};

ClosureAnswer closure_entails(const RankedPartition& p,
                              const DefeasibleQuery& q, BaseOrder order,
                              const BaseOptions& options = {});
ClosureAnswer closure_entails(const KnowledgeBase& kb,
                              const DefeasibleQuery& q, BaseOrder order,
                              const TableauOptions& tableau = {},
                              const BaseOptions& options = {});

}  // namespace defeasor

#endif  // DEFEASOR_MP_CLOSURE_H_
