// Brute-force semantics at desk scale.
//
// Interpretations have at most 64 elements; every extension is a bitmask
// over the domain. Concepts are evaluated directly on the interpretation,
// never through the tableau, so the oracle is an independent check of the
// syntactic closures.
//
// Canonical constructions are restricted to role-free KBs. There the domain
// is taken to be a set of atom valuations, one element per valuation:
// duplicating an element with the same valuation and rank changes no
// extension and no minimal set, so it never changes what a model satisfies.

#ifndef DEFEASOR_ORACLE_H_
#define DEFEASOR_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "defeasor/kb.h"

namespace defeasor {

struct OracleBounds {
  std::size_t max_atoms = 3;
  std::size_t max_roles = 1;
  std::size_t max_domain = 6;
  // Highest rank an element may receive.
  std::size_t max_rank = 3;
  // Canonical-model checks; requires max_roles == 0.
  bool canonical_mode = false;
  // Interpretations visited before a search over a KB with roles gives up.
  std::uint64_t max_interpretations = std::uint64_t{1} << 22;
};

enum class Verdict { kTrue, kFalse, kUnknown };

const char* to_string(Verdict v);

class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Domain {0, ..., size−1}.
struct RankedInterpretation {
  std::size_t size = 0;
  std::vector<std::size_t> rank;
  std::map<std::string, std::uint64_t> atoms;
  // roles[R][x] is the set of R-successors of x.
  std::map<std::string, std::vector<std::uint64_t>> roles;
  std::map<std::string, std::size_t> individuals;

  std::uint64_t domain() const;
  // Atoms absent from the map are empty; roles absent are empty.
  std::uint64_t extension(const Concept& c) const;
  // Least-rank elements of s.
  std::uint64_t minimal(std::uint64_t s) const;
  // Least rank of an element of c; empty when c has no instance.
  std::optional<std::size_t> rank_of(const Concept& c) const;

  // One line per element: "x<i> rank <r>: <atoms>" plus role edges.
  std::string str() const;
};

// Number of interpretations enumerate_ranked_interpretations visits,
// saturating at UINT64_MAX.
std::uint64_t count_ranked_interpretations(std::size_t atoms,
                                           std::size_t roles,
                                           std::size_t individuals,
                                           const OracleBounds& bounds);

// Every interpretation over sig with 1..max_domain elements, ranks forming
// a prefix 0..r with r ≤ max_rank, every role extension and every mapping
// of individuals. Stops early when visit returns false. Throws BoundsError
// when sig has more atoms or roles than the bounds allow.
void enumerate_ranked_interpretations(
    const Signature& sig, const OracleBounds& bounds,
    const std::function<bool(const RankedInterpretation&)>& visit);

// Strict inclusions extensionally, T(C) ⊑ D as minimal(C) ⊆ D, and the
// ABox.
bool check_ranked_model(const KnowledgeBase& kb,
                        const RankedInterpretation& m);

// Is c exceptional for Strict ∪ level: no model has a rank-0 instance of c?
// False comes with a countermodel.
Verdict oracle_exceptional(const KnowledgeBase& kb, const DefaultSet& level,
                           const Concept& c, const OracleBounds& bounds,
                           RankedInterpretation* countermodel = nullptr);

// The minimal canonical ranked models of a role-free KB over its atoms plus
// extra_atoms. With one element per valuation there is exactly one; the
// vector is empty when the KB has no model with a nonempty domain. Throws
// BoundsError when the KB has roles or the bounds are too small.
std::vector<RankedInterpretation> minimal_canonical_ranked_models(
    const KnowledgeBase& kb, const OracleBounds& bounds,
    const std::set<std::string>& extra_atoms = {});

// Truth of q in every minimal canonical ranked model. Unknown for KBs with
// roles.
Verdict ranked_min_entails(const KnowledgeBase& kb, const Query& q,
                           const OracleBounds& bounds,
                           RankedInterpretation* countermodel = nullptr);

struct BPInterpretation {
  RankedInterpretation base;
  // below[y] holds every x with x < y.
  std::vector<std::uint64_t> below;
  // Length of the longest <-chain ending in the element.
  std::vector<std::size_t> dist;
  // Defaults of the KB each element violates.
  std::vector<DefaultSet> violated;

  bool less(std::size_t x, std::size_t y) const {
    return (below[y] >> x) & 1u;
  }
  // <-minimal elements of s.
  std::uint64_t minimal(std::uint64_t s) const;
};

// The least order satisfying the specificity condition on m. Default ranks
// are read from m. Throws std::logic_error if the result is not a strict
// partial order containing the rank order.
BPInterpretation induce_bp_order(const RankedInterpretation& m,
                                 const KnowledgeBase& kb);

// Whether x <1 y holds for the violation sets of x and y, given the rank of
// each default's antecedent.
bool specificity_step(const DefaultSet& vx, const DefaultSet& vy,
                      const std::map<DefeasibleInclusion, std::size_t>& rank);

// Truth of T(B) ⊑ D in every minimal canonical BP-model.
Verdict bp_min_entails(const KnowledgeBase& kb, const DefeasibleQuery& q,
                       const OracleBounds& bounds,
                       BPInterpretation* countermodel = nullptr);

struct DISets {
  std::size_t k = 0;
  std::size_t h = 0;
  // Satisfied by every <-minimal B element.
  DefaultSet di;
  // Satisfied by some but not all of them.
  DefaultSet confl;
  // DI restricted to ranks ≥ h.
  DefaultSet di_sk;
};

// Empty when B has no instance in the canonical model (infinite rank).
std::optional<DISets> di_sets(const KnowledgeBase& kb, const Concept& b,
                              const OracleBounds& bounds,
                              const std::set<std::string>& extra_atoms = {});

// Each atom, its negation, and every conjunction of two literals over
// distinct atoms, in a fixed order. The query space of the cross-checks.
std::vector<Concept> probe_concepts(const Signature& sig);

// Strict ⊨ mat(DI_Sk(B)) ⊓ B ⊑ D, decided by the tableau.
Verdict sk_semantic_entails(const KnowledgeBase& kb, const DefeasibleQuery& q,
                            const OracleBounds& bounds);

}  // namespace defeasor

#endif  // DEFEASOR_ORACLE_H_
