#include "defeasor/kb.h"

#include <algorithm>
#include <iterator>
#include <utility>

namespace defeasor {

namespace {

template <typename T>
void InsertSorted(std::vector<T>& v, T value) {
  auto it = std::lower_bound(v.begin(), v.end(), value);
  if (it != v.end() && *it == value) return;
  v.insert(it, std::move(value));
}

std::string AssertionText(const ConceptAssertion& a) {
  const Concept& c = a.c;
  // Top and Bot are keywords, so only atoms may stand bare before "(".
  if (c.is(ConceptKind::kAtom)) {
    return c.str() + "(" + a.individual + ")";
  }
  return "(" + c.str() + ")(" + a.individual + ")";
}

}  // namespace

std::string DefeasibleInclusion::str() const {
  return lhs.str() + " ~> " + rhs.str();
}

void canonicalize(DefaultSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

DefaultSet set_union(const DefaultSet& a, const DefaultSet& b) {
  DefaultSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

DefaultSet set_difference(const DefaultSet& a, const DefaultSet& b) {
  DefaultSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool contains(const DefaultSet& s, const DefeasibleInclusion& d) {
  return std::binary_search(s.begin(), s.end(), d);
}

bool is_subset(const DefaultSet& a, const DefaultSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void KnowledgeBase::add(Axiom axiom) {
  std::visit(
      [this](auto&& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, StrictInclusion>) {
          InsertSorted(strict_, std::move(a));
        } else if constexpr (std::is_same_v<T, DefeasibleInclusion>) {
          InsertSorted(defeasible_, std::move(a));
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          InsertSorted(concept_assertions_, std::move(a));
        } else {
          InsertSorted(role_assertions_, std::move(a));
        }
      },
      std::move(axiom));
}

Signature KnowledgeBase::signature() const {
  Signature sig;
  auto scan = [&sig](const Concept& c) {
    c.collect_atoms(sig.atoms);
    c.collect_roles(sig.roles);
  };
  for (const auto& a : strict_) {
    scan(a.lhs);
    scan(a.rhs);
  }
  for (const auto& a : defeasible_) {
    scan(a.lhs);
    scan(a.rhs);
  }
  for (const auto& a : concept_assertions_) {
    scan(a.c);
    sig.individuals.insert(a.individual);
  }
  for (const auto& a : role_assertions_) {
    sig.roles.insert(a.role);
    sig.individuals.insert(a.subject);
    sig.individuals.insert(a.object);
  }
  return sig;
}

std::string serialize(const Axiom& a) {
  return std::visit(
      [](auto&& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, StrictInclusion>) {
          return x.lhs.str() + " => " + x.rhs.str();
        } else if constexpr (std::is_same_v<T, DefeasibleInclusion>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return AssertionText(x);
        } else {
          return x.role + "(" + x.subject + "," + x.object + ")";
        }
      },
      a);
}

std::string serialize(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& a : kb.strict()) out += serialize(Axiom(a)) + "\n";
  for (const auto& a : kb.defeasible()) out += serialize(Axiom(a)) + "\n";
  for (const auto& a : kb.concept_assertions()) {
    out += serialize(Axiom(a)) + "\n";
  }
  for (const auto& a : kb.role_assertions()) out += serialize(Axiom(a)) + "\n";
  return out;
}

std::string serialize(const Query& q) {
  return std::visit(
      [](auto&& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        const char* arrow =
            std::is_same_v<T, StrictQuery> ? " => " : " ~> ";
        return x.lhs.str() + arrow + x.rhs.str() + "\n";
      },
      q);
}

KnowledgeBase normalize(const KnowledgeBase& kb) {
  KnowledgeBase out;
  for (const auto& a : kb.strict()) {
    out.add(StrictInclusion{normalize(a.lhs), normalize(a.rhs)});
  }
  for (const auto& a : kb.defeasible()) {
    out.add(DefeasibleInclusion{normalize(a.lhs), normalize(a.rhs)});
  }
  for (const auto& a : kb.concept_assertions()) {
    out.add(ConceptAssertion{normalize(a.c), a.individual});
  }
  for (const auto& a : kb.role_assertions()) out.add(a);
  return out;
}

}  // namespace defeasor
