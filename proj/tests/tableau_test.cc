#include "defeasor/parser.h"
#include "defeasor/tableau.h"
#include "doctest.h"

using namespace defeasor;

namespace {

StrictTheory Theory(const char* text) {
  return StrictTheory(parse_kb(text).strict());
}

bool Sat(const char* tbox, const char* c) {
  return is_satisfiable(Theory(tbox), parse_concept(c));
}

}  // namespace

TEST_CASE("satisfiability basics") {
  CHECK(Sat("", "Top"));
  CHECK_FALSE(Sat("", "A & !A"));
  CHECK_FALSE(Sat("", "Bot"));
  CHECK_FALSE(Sat("WStudent => Student", "WStudent & !Student"));
  CHECK(Sat("WStudent => Student", "Student & !WStudent"));
  CHECK_FALSE(Sat("", "some R. A & all R. !A"));
  CHECK(Sat("", "some R. A & all R. B"));
  CHECK_FALSE(Sat("", "some R. (A & B) & all R. (!A | !B)"));
}

TEST_CASE("subsumption") {
  StrictTheory t = Theory("WStudent => Student");
  CHECK(entails_subsumption(t, parse_concept("WStudent"),
                            parse_concept("Student")));
  CHECK(entails_subsumption(StrictTheory(), parse_concept("A"),
                            parse_concept("A | B")));
  CHECK_FALSE(entails_subsumption(StrictTheory(), parse_concept("A | B"),
                                  parse_concept("A")));
}

TEST_CASE("cyclic TBoxes terminate through blocking") {
  CHECK(Sat("A => some R. A", "A"));
  CHECK(Sat("Top => some R. Top", "Top"));
  CHECK_FALSE(Sat("A => some R. A\nA => all R. B\nB => Bot", "A"));
  // Infinite chains alternating between two labels.
  CHECK(Sat("A => some R. B\nB => some R. A\nA & B => Bot", "A"));
  CHECK_FALSE(Sat("Top => some R. A\nA => some R. !A\n!A => Bot", "Top"));
}

TEST_CASE("general TBox constraints propagate to successors") {
  CHECK_FALSE(Sat("Top => B", "some R. !B"));
  CHECK_FALSE(Sat("C => all R. D", "C & some R. !D"));
  CHECK(Sat("C => all R. D", "!C & some R. !D"));
}

TEST_CASE("classical consistency") {
  CHECK(is_classically_consistent(parse_kb(
      "Student ~> !Pay_Taxes\nWStudent ~> Pay_Taxes\nStudent ~> Smart\n"
      "WStudent => Student")));
  CHECK_FALSE(is_classically_consistent(parse_kb("A => Bot\nA(x)")));
  CHECK(is_classically_consistent(KnowledgeBase()));
  CHECK_FALSE(is_classically_consistent(
      parse_kb("A => all R. B\nA(x)\nR(x,y)\n(!B)(y)")));
  CHECK(is_classically_consistent(parse_kb("A => all R. B\nA(x)\nR(y,x)")));
  CHECK_FALSE(is_classically_consistent(
      parse_kb("(some R. A)(x)\nA => Bot")));
  CHECK(is_classically_consistent(parse_kb("(A | B)(x)\n(!A)(x)")));
  CHECK_FALSE(is_classically_consistent(parse_kb("(A | B)(x)\n(!A & !B)(x)")));
  // Defaults are ignored: contradictory defaults do not make it inconsistent.
  CHECK(is_classically_consistent(parse_kb("A ~> B\nA ~> !B\nA(x)")));
}

TEST_CASE("resource limit is reported, not answered") {
  TableauOptions tiny;
  tiny.node_budget = 2;
  StrictTheory t = Theory("Top => some R. (A | B)\nA => some S. C");
  CHECK_THROWS_AS(is_satisfiable(t, parse_concept("Top"), tiny),
                  ResourceLimitError);
}

TEST_CASE("reasoner memo") {
  Reasoner r(Theory("A => B"));
  CHECK(r.is_satisfiable(parse_concept("A & B")));
  CHECK(r.is_satisfiable(parse_concept("B & A")));
  CHECK(r.queries() == 2);
  CHECK(r.tableau_runs() == 1);
  CHECK(r.entails_subsumption(parse_concept("A"), parse_concept("B")));
}
