#include "defeasor/tableau.h"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace defeasor {

namespace {

// Fixed-width bitset over concept ids of one pool.
class Label {
 public:
  Label() = default;
  explicit Label(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool insert(int i) {
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  bool subset_of(const Label& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool operator==(const Label& o) const { return words_ == o.words_; }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

struct PoolEntry {
  ConceptKind kind;
  int role = -1;
  int atom = -1;
  std::vector<int> children;
  int complement = -1;  // for literals: id of the complementary literal
};

// Interned NNF subconcepts of one satisfiability problem.
class Pool {
 public:
  int intern(const Concept& c) {
    auto it = ids_.find(c);
    if (it != ids_.end()) return it->second;
    PoolEntry e;
    e.kind = c.kind();
    switch (c.kind()) {
      case ConceptKind::kAtom:
        e.atom = AtomId(c.name());
        break;
      case ConceptKind::kNot:
        e.atom = AtomId(c.operand().name());
        break;
      case ConceptKind::kAnd:
      case ConceptKind::kOr:
        for (const Concept& o : c.operands()) e.children.push_back(intern(o));
        break;
      case ConceptKind::kAll:
      case ConceptKind::kSome:
        e.role = RoleId(c.name());
        e.children.push_back(intern(c.operand()));
        break;
      default:
        break;
    }
    const int id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    concepts_.push_back(c);
    ids_.emplace(c, id);
    if (c.is(ConceptKind::kAtom) || c.is(ConceptKind::kNot)) {
      const Concept other =
          c.is(ConceptKind::kAtom) ? Concept::Not(c) : c.operand();
      auto jt = ids_.find(other);
      if (jt != ids_.end()) {
        entries_[id].complement = jt->second;
        entries_[jt->second].complement = id;
      }
    }
    return id;
  }

  std::size_t size() const { return entries_.size(); }
  const PoolEntry& operator[](int i) const { return entries_[i]; }
  const Concept& at(int i) const { return concepts_[i]; }

 private:
  int AtomId(const std::string& s) {
    return static_cast<int>(atoms_.emplace(s, atoms_.size()).first->second);
  }
  int RoleId(const std::string& s) {
    return static_cast<int>(roles_.emplace(s, roles_.size()).first->second);
  }

  std::vector<PoolEntry> entries_;
  std::vector<Concept> concepts_;
  std::unordered_map<Concept, int, ConceptHash> ids_;
  std::unordered_map<std::string, std::size_t> atoms_;
  std::unordered_map<std::string, std::size_t> roles_;
};

class Tableau {
 public:
  Tableau(const Pool& pool, int top, const TableauOptions& options)
      : pool_(pool), top_(top), options_(options) {}

  Label empty() const { return Label(pool_.size()); }

  // Satisfiability of a node whose initial label is `label`.
  bool expand(Label label, std::vector<const Label*>& ancestors) {
    if (++expansions_ > options_.node_budget) {
      throw ResourceLimitError(options_.node_budget);
    }
    if (options_.trace) Trace(label, ancestors.size());
    if (!Saturate(label)) return false;
    const int open = FindOpenDisjunction(label);
    if (open >= 0) {
      for (int d : pool_[open].children) {
        if (ObviouslyFalse(label, d)) continue;
        Label branch = label;
        branch.insert(d);
        if (expand(std::move(branch), ancestors)) return true;
      }
      return false;
    }
    for (const Label* a : ancestors) {
      if (label.subset_of(*a)) return true;  // blocked
    }
    return ExpandSuccessors(label, ancestors);
  }

  // Makes every ∃R.C of a saturated label satisfiable by a fresh successor.
  bool ExpandSuccessors(const Label& label,
                        std::vector<const Label*>& ancestors) {
    for (int i = 0; i < static_cast<int>(pool_.size()); ++i) {
      if (!label.test(i) || pool_[i].kind != ConceptKind::kSome) continue;
      Label succ = Successor(label, pool_[i].role, pool_[i].children[0]);
      if (unsat_.count(succ)) return false;
      ancestors.push_back(&label);
      const bool ok = expand(succ, ancestors);
      ancestors.pop_back();
      if (!ok) {
        unsat_.insert(std::move(succ));
        return false;
      }
    }
    return true;
  }

  Label Successor(const Label& label, int role, int filler) const {
    Label succ = empty();
    succ.insert(top_);
    succ.insert(filler);
    for (int j = 0; j < static_cast<int>(pool_.size()); ++j) {
      if (label.test(j) && pool_[j].kind == ConceptKind::kAll &&
          pool_[j].role == role) {
        succ.insert(pool_[j].children[0]);
      }
    }
    return succ;
  }

  // Applies ⊓ and forced ⊔ to fixpoint. False on clash.
  bool Saturate(Label& label) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < static_cast<int>(pool_.size()); ++i) {
        if (!label.test(i)) continue;
        const PoolEntry& e = pool_[i];
        if (e.kind == ConceptKind::kBot) return false;
        if (e.complement >= 0 && label.test(e.complement)) return false;
        if (e.kind == ConceptKind::kAnd) {
          for (int c : e.children) changed |= label.insert(c);
        } else if (e.kind == ConceptKind::kOr && !Satisfied(label, i)) {
          int live = -1;
          int count = 0;
          for (int c : e.children) {
            if (!ObviouslyFalse(label, c)) {
              live = c;
              ++count;
            }
          }
          if (count == 0) return false;
          if (count == 1) changed |= label.insert(live);
        }
      }
    }
    return true;
  }

  bool Satisfied(const Label& label, int disjunction) const {
    for (int c : pool_[disjunction].children) {
      if (label.test(c)) return true;
    }
    return false;
  }

  bool ObviouslyFalse(const Label& label, int c) const {
    const PoolEntry& e = pool_[c];
    if (e.kind == ConceptKind::kBot) return true;
    return e.complement >= 0 && label.test(e.complement);
  }

  int FindOpenDisjunction(const Label& label) const {
    for (int i = 0; i < static_cast<int>(pool_.size()); ++i) {
      if (label.test(i) && pool_[i].kind == ConceptKind::kOr &&
          !Satisfied(label, i)) {
        return i;
      }
    }
    return -1;
  }

  std::uint64_t expansions() const { return expansions_; }

 private:
  void Trace(const Label& label, std::size_t depth) const {
    std::string line(depth * 2, ' ');
    line += "{";
    bool first = true;
    for (int i = 0; i < static_cast<int>(pool_.size()); ++i) {
      if (!label.test(i)) continue;
      if (!first) line += ", ";
      line += pool_.at(i).str();
      first = false;
    }
    std::cerr << line << "}\n";
  }

  const Pool& pool_;
  int top_;
  TableauOptions options_;
  std::uint64_t expansions_ = 0;
  std::unordered_set<Label, LabelHash> unsat_;
};

bool RunTableau(const StrictTheory& theory, const Concept& c,
                const TableauOptions& options) {
  Pool pool;
  const int top = pool.intern(theory.internalization());
  const int root_concept = pool.intern(nnf(c));
  Tableau t(pool, top, options);
  Label root = t.empty();
  root.insert(top);
  root.insert(root_concept);
  std::vector<const Label*> ancestors;
  return t.expand(std::move(root), ancestors);
}

// Joint completion of the named individuals, then tree expansion of their
// anonymous successors.
class AboxTableau {
 public:
  AboxTableau(const KnowledgeBase& kb, const StrictTheory& theory,
              const TableauOptions& options)
      : options_(options) {
    top_ = pool_.intern(theory.internalization());
    std::set<std::string> names;
    for (const auto& a : kb.concept_assertions()) names.insert(a.individual);
    for (const auto& a : kb.role_assertions()) {
      names.insert(a.subject);
      names.insert(a.object);
    }
    std::unordered_map<std::string, int> index;
    for (const auto& n : names) {
      index.emplace(n, static_cast<int>(index.size()));
    }
    std::vector<std::pair<int, int>> assertion_ids;
    for (const auto& a : kb.concept_assertions()) {
      assertion_ids.emplace_back(index.at(a.individual),
                                 pool_.intern(nnf(a.c)));
    }
    for (const auto& a : kb.role_assertions()) {
      edges_.push_back({RoleOf(a.role), index.at(a.subject),
                        index.at(a.object)});
    }
    // All labels must be sized after the pool is final.
    tableau_ = std::make_unique<Tableau>(pool_, top_, options_);
    initial_.assign(names.size(), tableau_->empty());
    for (auto& l : initial_) l.insert(top_);
    for (auto [ind, id] : assertion_ids) initial_[ind].insert(id);
  }

  bool consistent() { return Expand(initial_); }

 private:
  struct Edge {
    int role;
    int from;
    int to;
  };

  int RoleOf(const std::string& role) {
    // Role ids in the pool are assigned on first sight inside quantifiers;
    // interning a dummy ∀R.⊤ pins this role to the same numbering.
    const int id = pool_.intern(Concept::All(role, Concept::Top()));
    return pool_[id].role;
  }

  bool Expand(std::vector<Label> labels) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& l : labels) {
        if (!tableau_->Saturate(l)) return false;
      }
      for (const Edge& e : edges_) {
        for (int j = 0; j < static_cast<int>(pool_.size()); ++j) {
          if (labels[e.from].test(j) && pool_[j].kind == ConceptKind::kAll &&
              pool_[j].role == e.role) {
            changed |= labels[e.to].insert(pool_[j].children[0]);
          }
        }
      }
    }
    for (std::size_t n = 0; n < labels.size(); ++n) {
      const int open = tableau_->FindOpenDisjunction(labels[n]);
      if (open < 0) continue;
      for (int d : pool_[open].children) {
        if (tableau_->ObviouslyFalse(labels[n], d)) continue;
        std::vector<Label> branch = labels;
        branch[n].insert(d);
        if (Expand(std::move(branch))) return true;
      }
      return false;
    }
    std::vector<const Label*> ancestors;
    for (const Label& l : labels) {
      if (!tableau_->ExpandSuccessors(l, ancestors)) return false;
    }
    return true;
  }

  TableauOptions options_;
  Pool pool_;
  int top_ = 0;
  std::vector<Edge> edges_;
  std::unique_ptr<Tableau> tableau_;
  std::vector<Label> initial_;
};

}  // namespace

ResourceLimitError::ResourceLimitError(std::uint64_t budget)
    : std::runtime_error("tableau node budget of " + std::to_string(budget) +
                         " expansions exceeded"),
      budget_(budget) {}

TableauOptions options_from_environment() {
  TableauOptions options;
  if (const char* v = std::getenv("DEFEASOR_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) options.node_budget = n;
  }
  return options;
}

StrictTheory::StrictTheory(std::vector<StrictInclusion> axioms)
    : axioms_(std::move(axioms)) {
  std::sort(axioms_.begin(), axioms_.end());
  axioms_.erase(std::unique(axioms_.begin(), axioms_.end()), axioms_.end());
  std::vector<Concept> parts;
  parts.reserve(axioms_.size());
  for (const auto& a : axioms_) {
    parts.push_back(nnf(Concept::Or(Concept::Not(a.lhs), a.rhs)));
  }
  internalization_ = Concept::And(std::move(parts));
}

Reasoner::Reasoner(StrictTheory theory, TableauOptions options)
    : theory_(std::move(theory)), options_(options) {}

bool Reasoner::is_satisfiable(const Concept& c) const {
  ++queries_;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
  }
  ++runs_;
  const bool sat = RunTableau(theory_, c, options_);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(c, sat);
  return sat;
}

bool Reasoner::entails_subsumption(const Concept& c,
                                   const Concept& d) const {
  return !is_satisfiable(Concept::And(c, Concept::Not(d)));
}

bool is_satisfiable(const StrictTheory& theory, const Concept& c,
                    const TableauOptions& options) {
  return RunTableau(theory, c, options);
}

bool entails_subsumption(const StrictTheory& theory, const Concept& c,
                         const Concept& d, const TableauOptions& options) {
  return !RunTableau(theory, Concept::And(c, Concept::Not(d)), options);
}

bool is_classically_consistent(const KnowledgeBase& kb,
                               const TableauOptions& options) {
  StrictTheory theory(kb.strict());
  if (kb.abox_empty()) return RunTableau(theory, Concept::Top(), options);
  AboxTableau t(kb, theory, options);
  return t.consistent();
}

}  // namespace defeasor
