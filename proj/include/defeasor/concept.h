// Concept syntax trees for ALC.
//
// Concepts are immutable and structurally shared. The And/Or constructors
// flatten nested operands, sort them by the canonical ordering and drop
// duplicates, so two concepts that differ only in operand order or
// association compare equal.

#ifndef DEFEASOR_CONCEPT_H_
#define DEFEASOR_CONCEPT_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace defeasor {

// Declaration order is the canonical ordering between kinds.
enum class ConceptKind : std::uint8_t {
  kTop,
  kBot,
  kAtom,
  kNot,
  kAnd,
  kOr,
  kAll,
  kSome,
};

class Concept {
 public:
  // Default-constructed concept is Top.
  Concept();

  static Concept Top();
  static Concept Bot();
  static Concept Atom(std::string name);
  static Concept Not(Concept c);
  static Concept And(Concept l, Concept r);
  static Concept And(std::vector<Concept> operands);
  static Concept Or(Concept l, Concept r);
  static Concept Or(std::vector<Concept> operands);
  static Concept All(std::string role, Concept c);
  static Concept Some(std::string role, Concept c);

  ConceptKind kind() const;
  bool is(ConceptKind k) const { return kind() == k; }

  // Atom name for kAtom, role name for kAll/kSome, empty otherwise.
  const std::string& name() const;

  // Operands of And/Or (at least two), the single operand of Not/All/Some,
  // nothing otherwise.
  std::span<const Concept> operands() const;
  const Concept& operand() const;

  std::size_t hash() const;

  // Number of nodes in the tree.
  std::size_t size() const;

  // True when the concept contains no All/Some.
  bool role_free() const;

  void collect_atoms(std::set<std::string>& out) const;
  void collect_roles(std::set<std::string>& out) const;

  // Canonical text; see serialize.h for the grammar.
  std::string str() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a,
                                          const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node);
  static Concept Make(ConceptKind kind, std::string name,
                      std::vector<Concept> operands);
  static Concept MakeJunction(ConceptKind kind, std::vector<Concept> operands);

  std::shared_ptr<const Node> node_;
};

// Negation normal form: negation only in front of atoms.
Concept nnf(const Concept& c);

// Returns the canonical form of c. Constructors already canonicalize, so
// this rebuilds the tree bottom-up and is the identity on any value built
// through the public constructors.
Concept normalize(const Concept& c);

struct ConceptHash {
  std::size_t operator()(const Concept& c) const { return c.hash(); }
};

// Reserved words of the concept grammar.
bool is_keyword(std::string_view s);

// [A-Za-z_][A-Za-z0-9_]* and not a keyword.
bool is_valid_identifier(std::string_view s);

}  // namespace defeasor

#endif  // DEFEASOR_CONCEPT_H_
