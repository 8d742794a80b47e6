#include <string>

#include "defeasor/concept.h"
#include "defeasor/kb.h"
#include "defeasor/parser.h"
#include "doctest.h"

using namespace defeasor;

namespace {

Concept A(const char* n) { return Concept::Atom(n); }

ParseErrorKind KbErrorKind(const std::string& text) {
  try {
    parse_kb(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error for: " << text);
  return ParseErrorKind::kSyntax;
}

}  // namespace

TEST_CASE("single strict axiom") {
  KnowledgeBase kb = parse_kb("WStudent => Student");
  REQUIRE(kb.strict().size() == 1);
  CHECK(kb.strict()[0].lhs == A("WStudent"));
  CHECK(kb.strict()[0].rhs == A("Student"));
  CHECK(kb.defeasible().empty());
  CHECK(serialize(kb) == "WStudent => Student\n");
}

TEST_CASE("student tax KB has four axioms") {
  KnowledgeBase kb = parse_kb(
      "Student ~> !Pay_Taxes\nWStudent ~> Pay_Taxes\nStudent ~> Smart\n"
      "WStudent => Student");
  CHECK(kb.strict().size() == 1);
  CHECK(kb.defeasible().size() == 3);
  CHECK(contains(kb.defeasible(),
                 {A("Student"), Concept::Not(A("Pay_Taxes"))}));
  CHECK(contains(kb.defeasible(), {A("WStudent"), A("Pay_Taxes")}));
  CHECK(contains(kb.defeasible(), {A("Student"), A("Smart")}));
  Signature sig = kb.signature();
  CHECK(sig.atoms ==
        std::set<std::string>{"Pay_Taxes", "Smart", "Student", "WStudent"});
  CHECK(sig.roles.empty());
  CHECK(parse_kb(serialize(kb)) == normalize(kb));
}

TEST_CASE("typicality is rejected inside concepts") {
  CHECK(KbErrorKind("Student ~> T(Smart)") ==
        ParseErrorKind::kTypicalityOnRight);
  CHECK(KbErrorKind("A ~> T(B)") == ParseErrorKind::kTypicalityOnRight);
  CHECK(KbErrorKind("A & T(B) => C") == ParseErrorKind::kTypicalityInConcept);
  CHECK(KbErrorKind("T(T(A)) => B") == ParseErrorKind::kNestedTypicality);
  CHECK(KbErrorKind("T(A) ~> B") == ParseErrorKind::kNestedTypicality);
}

TEST_CASE("explicit typicality on the left reads as a default") {
  KnowledgeBase kb = parse_kb("T(Bird) => Fly");
  REQUIRE(kb.defeasible().size() == 1);
  CHECK(kb.defeasible()[0].lhs == A("Bird"));
  CHECK(kb.strict().empty());
}

TEST_CASE("queries") {
  Query q = parse_query("WStudent ~> Smart");
  REQUIRE(std::holds_alternative<DefeasibleQuery>(q));
  CHECK(std::get<DefeasibleQuery>(q).lhs == A("WStudent"));
  CHECK(std::get<DefeasibleQuery>(q).rhs == A("Smart"));

  Query top = parse_query("Top ~> Bot");
  REQUIRE(std::holds_alternative<DefeasibleQuery>(top));
  CHECK(std::get<DefeasibleQuery>(top).lhs == Concept::Top());
  CHECK(std::get<DefeasibleQuery>(top).rhs == Concept::Bot());

  Query strict = parse_query("A => B | C");
  CHECK(std::holds_alternative<StrictQuery>(strict));
  CHECK(serialize(strict) == "A => B | C\n");

  CHECK_THROWS_AS(parse_query("A & ~> B"), ParseError);
  CHECK_THROWS_AS(parse_query("Student(x)"), ParseError);
  CHECK_THROWS_AS(parse_query(""), ParseError);
}

TEST_CASE("syntax error carries position and expected tokens") {
  try {
    parse_query("A & ~> B");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::kSyntax);
    CHECK(e.diagnostic().line == 1);
    CHECK(e.diagnostic().column == 5);
    CHECK_FALSE(e.diagnostic().expected.empty());
  }
  try {
    parse_kb("A => B\n\n  C => (D\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.diagnostic().line == 3);
  }
}

TEST_CASE("nnf") {
  Concept a = A("A"), b = A("B");
  CHECK(nnf(Concept::Not(Concept::And(a, b))) ==
        Concept::Or(Concept::Not(a), Concept::Not(b)));
  CHECK(nnf(Concept::Not(Concept::Some("R", a))) ==
        Concept::All("R", Concept::Not(a)));
  CHECK(nnf(Concept::Not(Concept::Not(a))) == a);
  CHECK(nnf(Concept::Not(Concept::Top())) == Concept::Bot());
  Concept c = Concept::Not(Concept::Or(Concept::All("R", a), Concept::Not(b)));
  CHECK(nnf(nnf(c)) == nnf(c));
}

TEST_CASE("canonical ordering of junctions") {
  CHECK(Concept::And(A("B"), A("A")).str() == "A & B");
  CHECK(Concept::And(A("B"), A("A")) == Concept::And(A("A"), A("B")));
  CHECK(Concept::And(A("A"), A("A")) == A("A"));
  CHECK(parse_concept("(A | B) & C").str() == "C & (A | B)");
  CHECK(parse_concept("!(A & B)").str() == "!(A & B)");
  CHECK(parse_concept("all R. A & B") ==
        Concept::And(Concept::All("R", A("A")), A("B")));
  CHECK(parse_concept("some R. (A & B)").str() == "some R. (A & B)");
}

TEST_CASE("assertions and comments") {
  KnowledgeBase kb = parse_kb(
      "# people\nStudent(ann)  # trailing\nhasSSN(ann, n1)\n"
      "(Student & !Young)(bob)\n\n");
  CHECK(kb.concept_assertions().size() == 2);
  CHECK(kb.role_assertions().size() == 1);
  CHECK(kb.signature().individuals ==
        std::set<std::string>{"ann", "bob", "n1"});
  CHECK(kb.signature().roles == std::set<std::string>{"hasSSN"});
  CHECK(parse_kb(serialize(kb)) == kb);
}

TEST_CASE("duplicates collapse") {
  KnowledgeBase kb = parse_kb("A ~> B\nA ~> B\nB & A => C\nA & B => C");
  CHECK(kb.defeasible().size() == 1);
  CHECK(kb.strict().size() == 1);
}

TEST_CASE("keywords are not identifiers") {
  CHECK_FALSE(is_valid_identifier("Top"));
  CHECK_FALSE(is_valid_identifier("some"));
  CHECK_FALSE(is_valid_identifier("9a"));
  CHECK(is_valid_identifier("_x9"));
  CHECK_THROWS_AS(parse_kb("all => B"), ParseError);
}

TEST_CASE("garbage input yields diagnostics") {
  const char* inputs[] = {"=>", "A =>", "(((", "A ~> B ~> C", "A(b,",
                          "\xc3\xa9 => A", "A => B)", "some . A => B",
                          "A(b) => C", "R(a,b,c)", "T()", "!"};
  for (const char* in : inputs) {
    CHECK_THROWS_AS(parse_kb(in), ParseError);
  }
}
