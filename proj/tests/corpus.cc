#include "corpus.h"

#include "defeasor/oracle.h"
#include "defeasor/tableau.h"
#include "test_util.h"

namespace defeasor::testing {

namespace {

const std::vector<std::string> kAtomPool = {"A", "B", "C", "E"};

}  // namespace

std::size_t Generator::Below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Concept Generator::Literal(const std::vector<std::string>& atoms) {
  Concept a = Concept::Atom(atoms[Below(atoms.size())]);
  return Below(2) ? Concept::Not(a) : a;
}

Concept Generator::RandomConcept(const ConceptShape& shape) {
  if (shape.max_size <= 1) {
    switch (Below(10)) {
      case 0:
        return Concept::Top();
      case 1:
        return Concept::Bot();
      default:
        return Concept::Atom(shape.atoms[Below(shape.atoms.size())]);
    }
  }
  ConceptShape sub = shape;
  const std::size_t pick = Below(shape.roles.empty() || shape.max_depth == 0
                                     ? 4
                                     : 6);
  switch (pick) {
    case 0:
      sub.max_size = 1;
      return RandomConcept(sub);
    case 1:
      sub.max_size = shape.max_size - 1;
      return Concept::Not(RandomConcept(sub));
    case 2:
    case 3: {
      const std::size_t left = 1 + Below(shape.max_size - 1);
      sub.max_size = left;
      Concept l = RandomConcept(sub);
      sub.max_size = std::max<std::size_t>(1, shape.max_size - left);
      Concept r = RandomConcept(sub);
      return pick == 2 ? Concept::And(l, r) : Concept::Or(l, r);
    }
    default: {
      sub.max_size = shape.max_size - 1;
      sub.max_depth = shape.max_depth - 1;
      const std::string& role = shape.roles[Below(shape.roles.size())];
      Concept body = RandomConcept(sub);
      return pick == 4 ? Concept::Some(role, body) : Concept::All(role, body);
    }
  }
}

KnowledgeBase Generator::RandomRoleFreeKb() {
  while (true) {
    const std::vector<std::string> atoms(kAtomPool.begin(),
                                         kAtomPool.begin() + 2 + Below(3));
    ConceptShape shape{atoms, {}, 0, 3};
    auto lhs = [&] {
      switch (Below(4)) {
        case 0:
          return Concept::And(Literal(atoms), Literal(atoms));
        case 1:
          return Concept::Atom(atoms[Below(atoms.size())]);
        default:
          return Literal(atoms);
      }
    };
    KnowledgeBase kb;
    const std::size_t strict = Below(3);
    for (std::size_t i = 0; i < strict; ++i) {
      kb.add(StrictInclusion{lhs(), RandomConcept(shape)});
    }
    const std::size_t defaults = 1 + Below(6);
    for (std::size_t i = 0; i < defaults; ++i) {
      kb.add(DefeasibleInclusion{lhs(), Below(3) ? Literal(atoms)
                                                 : RandomConcept(shape)});
    }
    if (is_classically_consistent(kb)) return kb;
  }
}

KnowledgeBase Generator::RandomKb() {
  const std::vector<std::string> atoms = {"A", "B", "C"};
  const std::vector<std::string> roles = {"r", "s"};
  const std::vector<std::string> names = {"a", "b"};
  ConceptShape shape{atoms, roles, 2, 6};
  KnowledgeBase kb;
  const std::size_t n = Below(6);
  for (std::size_t i = 0; i < n; ++i) {
    switch (Below(4)) {
      case 0:
        kb.add(StrictInclusion{RandomConcept(shape), RandomConcept(shape)});
        break;
      case 1:
        kb.add(DefeasibleInclusion{RandomConcept(shape), RandomConcept(shape)});
        break;
      case 2:
        kb.add(ConceptAssertion{RandomConcept(shape), names[Below(2)]});
        break;
      default:
        kb.add(RoleAssertion{roles[Below(2)], names[Below(2)], names[Below(2)]});
    }
  }
  return kb;
}

std::vector<CorpusKb> Corpus(std::size_t random, std::uint32_t seed) {
  std::vector<CorpusKb> out;
  const std::pair<const char*, const char*> paper[] = {
      {"student", "student"},
      {"student_employee", "student_employee"},
      {"student_employee_weak", "student_employee_weak"},
      {"penguin", "penguin"},
      {"ssn", "ssn_atomized"},
      {"ssn_smart", "ssn_smart_atomized"},
  };
  for (const auto& [name, atomized] : paper) {
    out.push_back({name, LoadKb(name), LoadKb(atomized)});
  }
  Generator gen(seed);
  for (std::size_t i = 0; i < random; ++i) {
    KnowledgeBase kb = gen.RandomRoleFreeKb();
    out.push_back({"random" + std::to_string(i), kb, kb});
  }
  return out;
}

std::vector<Concept> QueryConcepts(const KnowledgeBase& kb) {
  return probe_concepts(kb.signature());
}

}  // namespace defeasor::testing
