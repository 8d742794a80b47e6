// Deterministic random knowledge bases and query sets shared by the
// property tests and the acceptance binary.

#ifndef DEFEASOR_TESTS_CORPUS_H_
#define DEFEASOR_TESTS_CORPUS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "defeasor/kb.h"

namespace defeasor::testing {

struct CorpusKb {
  std::string name;
  KnowledgeBase kb;
  // Role-free variant for the canonical-model oracle; equal to kb when kb is
  // already role-free.
  KnowledgeBase atomized;
};

struct ConceptShape {
  std::vector<std::string> atoms;
  std::vector<std::string> roles;
  std::size_t max_depth = 0;
  std::size_t max_size = 6;
};

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  std::size_t Below(std::size_t n);
  Concept Literal(const std::vector<std::string>& atoms);
  // Random concept of the given shape; quantifier depth ≤ shape.max_depth.
  Concept RandomConcept(const ConceptShape& shape);
  // Role-free KB over 2..4 atoms with 0..2 strict axioms and 1..6 defaults.
  // The strict part is classically consistent.
  KnowledgeBase RandomRoleFreeKb();
  // KB with roles and an ABox, for syntax round trips.
  KnowledgeBase RandomKb();

 private:
  std::mt19937 rng_;
};

// The six worked KBs followed by `random` role-free KBs from a fixed seed.
std::vector<CorpusKb> Corpus(std::size_t random, std::uint32_t seed = 20240611);

// Signature literals and conjunctions of two literals over distinct atoms.
std::vector<Concept> QueryConcepts(const KnowledgeBase& kb);

}  // namespace defeasor::testing

#endif  // DEFEASOR_TESTS_CORPUS_H_
