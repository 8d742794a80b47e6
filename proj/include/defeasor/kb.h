// Knowledge bases: strict and defeasible inclusions plus an ABox.

#ifndef DEFEASOR_KB_H_
#define DEFEASOR_KB_H_

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "defeasor/concept.h"

namespace defeasor {

// lhs ⊑ rhs.
struct StrictInclusion {
  Concept lhs;
  Concept rhs;

  auto operator<=>(const StrictInclusion&) const = default;
  bool operator==(const StrictInclusion&) const = default;
};

// T(lhs) ⊑ rhs: typical lhs-instances are rhs-instances.
struct DefeasibleInclusion {
  Concept lhs;
  Concept rhs;

  auto operator<=>(const DefeasibleInclusion&) const = default;
  bool operator==(const DefeasibleInclusion&) const = default;

  std::string str() const;
};

struct ConceptAssertion {
  Concept c;
  std::string individual;

  auto operator<=>(const ConceptAssertion&) const = default;
  bool operator==(const ConceptAssertion&) const = default;
};

struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;

  auto operator<=>(const RoleAssertion&) const = default;
  bool operator==(const RoleAssertion&) const = default;
};

using Axiom = std::variant<StrictInclusion, DefeasibleInclusion,
                           ConceptAssertion, RoleAssertion>;

// Sorted, duplicate-free set of defaults. Most closure operations take and
// return these.
using DefaultSet = std::vector<DefeasibleInclusion>;

// Sorts and removes duplicates in place.
void canonicalize(DefaultSet& s);
DefaultSet set_union(const DefaultSet& a, const DefaultSet& b);
DefaultSet set_difference(const DefaultSet& a, const DefaultSet& b);
bool contains(const DefaultSet& s, const DefeasibleInclusion& d);
bool is_subset(const DefaultSet& a, const DefaultSet& b);

struct Signature {
  std::set<std::string> atoms;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool operator==(const Signature&) const = default;
};

// All containers are kept sorted and duplicate-free.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  void add(Axiom axiom);

  const std::vector<StrictInclusion>& strict() const { return strict_; }
  const DefaultSet& defeasible() const { return defeasible_; }
  const std::vector<ConceptAssertion>& concept_assertions() const {
    return concept_assertions_;
  }
  const std::vector<RoleAssertion>& role_assertions() const {
    return role_assertions_;
  }

  bool abox_empty() const {
    return concept_assertions_.empty() && role_assertions_.empty();
  }

  std::size_t size() const {
    return strict_.size() + defeasible_.size() + concept_assertions_.size() +
           role_assertions_.size();
  }

  // Exactly the names occurring in axioms and assertions.
  Signature signature() const;

  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::vector<StrictInclusion> strict_;
  DefaultSet defeasible_;
  std::vector<ConceptAssertion> concept_assertions_;
  std::vector<RoleAssertion> role_assertions_;
};

struct StrictQuery {
  Concept lhs;
  Concept rhs;
  bool operator==(const StrictQuery&) const = default;
};

// T(lhs) ⊑ rhs.
struct DefeasibleQuery {
  Concept lhs;
  Concept rhs;
  bool operator==(const DefeasibleQuery&) const = default;
};

using Query = std::variant<StrictQuery, DefeasibleQuery>;

// Canonical text, one statement per line, each line newline-terminated.
std::string serialize(const KnowledgeBase& kb);
std::string serialize(const Query& q);
std::string serialize(const Axiom& a);

KnowledgeBase normalize(const KnowledgeBase& kb);

}  // namespace defeasor

#endif  // DEFEASOR_KB_H_
