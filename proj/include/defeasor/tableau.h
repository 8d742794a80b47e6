// Classical ALC reasoning w.r.t. a general TBox of strict inclusions.
//
// The TBox is internalized into a single NNF concept that every node of the
// completion tree must satisfy. Termination comes from subset blocking
// against ancestors. Rules fire in a fixed order (⊓, ⊔ left branch first,
// ∃ with ∀ propagation into the new successor) so runs are reproducible.

#ifndef DEFEASOR_TABLEAU_H_
#define DEFEASOR_TABLEAU_H_

#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "defeasor/concept.h"
#include "defeasor/kb.h"

namespace defeasor {

struct TableauOptions {
  // Maximum number of node expansions per satisfiability call.
  std::uint64_t node_budget = 1'000'000;
  // Writes an indented trace of every expansion to stderr.
  bool trace = false;
};

// Reads DEFEASOR_NODE_BUDGET when set.
TableauOptions options_from_environment();

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

class StrictTheory {
 public:
  StrictTheory() = default;
  explicit StrictTheory(std::vector<StrictInclusion> axioms);

  const std::vector<StrictInclusion>& axioms() const { return axioms_; }
  // ⊓ nnf(¬C ⊔ D) over the axioms; Top when empty.
  const Concept& internalization() const { return internalization_; }

 private:
  std::vector<StrictInclusion> axioms_;
  Concept internalization_ = Concept::Top();
};

// Satisfiability and subsumption against one StrictTheory. Results are
// memoized per concept; the memo is guarded so one Reasoner can be shared
// between threads.
class Reasoner {
 public:
  explicit Reasoner(StrictTheory theory, TableauOptions options = {});

  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  const StrictTheory& theory() const { return theory_; }
  const TableauOptions& options() const { return options_; }

  bool is_satisfiable(const Concept& c) const;

  // theory ⊨ c ⊑ d, i.e. c ⊓ ¬d is unsatisfiable.
  bool entails_subsumption(const Concept& c, const Concept& d) const;

  // Satisfiability questions answered so far, including memo hits.
  std::uint64_t queries() const { return queries_.load(); }
  // Tableau runs actually executed.
  std::uint64_t tableau_runs() const { return runs_.load(); }

 private:
  StrictTheory theory_;
  TableauOptions options_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Concept, bool, ConceptHash> memo_;
  mutable std::atomic<std::uint64_t> queries_{0};
  mutable std::atomic<std::uint64_t> runs_{0};
};

// Free-function forms of the Reasoner queries.
bool is_satisfiable(const StrictTheory& theory, const Concept& c,
                    const TableauOptions& options = {});
bool entails_subsumption(const StrictTheory& theory, const Concept& c,
                         const Concept& d, const TableauOptions& options = {});

// Strict axioms plus ABox; defeasible inclusions are ignored.
bool is_classically_consistent(const KnowledgeBase& kb,
                               const TableauOptions& options = {});

}  // namespace defeasor

#endif  // DEFEASOR_TABLEAU_H_
