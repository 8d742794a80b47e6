// Reader for the .dkb knowledge-base format and for queries.
//
//   statement := concept "=>" concept        strict inclusion
//              | concept "~>" concept        defeasible inclusion T(C) ⊑ D
//              | "T" "(" concept ")" "=>" concept   same as "~>"
//              | IDENT "(" IDENT ")"          concept assertion
//              | "(" concept ")" "(" IDENT ")"
//              | IDENT "(" IDENT "," IDENT ")" role assertion
//   concept   := conj ("|" conj)*
//   conj      := unary ("&" unary)*
//   unary     := "!" unary | "all" IDENT "." unary | "some" IDENT "." unary
//              | "Top" | "Bot" | IDENT | "(" concept ")"
//
// One statement per line; '#' starts a comment; blank lines are ignored.

#ifndef DEFEASOR_PARSER_H_
#define DEFEASOR_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "defeasor/kb.h"

namespace defeasor {

enum class ParseErrorKind {
  kSyntax,
  kNestedTypicality,
  kTypicalityOnRight,
  kTypicalityInConcept,
  kAssertionInQuery,
};

struct Diagnostic {
  ParseErrorKind kind = ParseErrorKind::kSyntax;
  int line = 1;
  int column = 1;
  std::string message;
  std::vector<std::string> expected;

  // "line:col: message (expected a, b)"
  std::string str() const;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diagnostic_; }
  ParseErrorKind kind() const { return diagnostic_.kind; }

 private:
  Diagnostic diagnostic_;
};

KnowledgeBase parse_kb(std::string_view text);
Query parse_query(std::string_view text);
Concept parse_concept(std::string_view text);

}  // namespace defeasor

#endif  // DEFEASOR_PARSER_H_
