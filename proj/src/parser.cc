#include "defeasor/parser.h"

#include <cstddef>
#include <optional>
#include <utility>

namespace defeasor {

std::string Diagnostic::str() const {
  std::string out = std::to_string(line) + ":" + std::to_string(column) +
                    ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

ParseError::ParseError(Diagnostic d)
    : std::runtime_error(d.str()), diagnostic_(std::move(d)) {}

namespace {

enum class Tok {
  kIdent,
  kTop,
  kBot,
  kAll,
  kSome,
  kAmp,
  kBar,
  kBang,
  kLParen,
  kRParen,
  kDot,
  kComma,
  kStrict,
  kDefeasible,
  kNewline,
  kEnd,
};

struct Token {
  Tok type;
  std::string text;
  int line;
  int column;
};

std::string Describe(const Token& t) {
  switch (t.type) {
    case Tok::kIdent:
      return "identifier '" + t.text + "'";
    case Tok::kNewline:
      return "end of line";
    case Tok::kEnd:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto push = [&](Tok type, std::string s, int col) {
    out.push_back(Token{type, std::move(s), line, col});
  };
  while (i < text.size()) {
    const char c = text[i];
    const int col = column;
    if (c == '\n') {
      push(Tok::kNewline, "\n", col);
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++column;
      }
      continue;
    }
    auto ident_start = [](char ch) {
      return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_';
    };
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() &&
             (ident_start(text[j]) || (text[j] >= '0' && text[j] <= '9'))) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      Tok type = Tok::kIdent;
      if (word == "Top") type = Tok::kTop;
      if (word == "Bot") type = Tok::kBot;
      if (word == "all") type = Tok::kAll;
      if (word == "some") type = Tok::kSome;
      push(type, std::move(word), col);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (text.substr(i, 2) == "=>") {
      push(Tok::kStrict, "=>", col);
      i += 2;
      column += 2;
      continue;
    }
    if (text.substr(i, 2) == "~>") {
      push(Tok::kDefeasible, "~>", col);
      i += 2;
      column += 2;
      continue;
    }
    std::optional<Tok> single;
    switch (c) {
      case '&': single = Tok::kAmp; break;
      case '|': single = Tok::kBar; break;
      case '!': single = Tok::kBang; break;
      case '(': single = Tok::kLParen; break;
      case ')': single = Tok::kRParen; break;
      case '.': single = Tok::kDot; break;
      case ',': single = Tok::kComma; break;
      default: break;
    }
    if (!single) {
      Diagnostic d;
      d.line = line;
      d.column = col;
      const auto byte = static_cast<unsigned char>(c);
      d.message = byte < 0x80 && byte >= 0x20
                      ? std::string("unexpected character '") + c + "'"
                      : "unexpected byte " + std::to_string(byte);
      throw ParseError(std::move(d));
    }
    push(*single, std::string(1, c), col);
    ++i;
    ++column;
  }
  out.push_back(Token{Tok::kEnd, "", line, column});
  return out;
}

// Where the concept being parsed sits inside its statement. Decides which
// diagnostic a stray T(...) produces.
enum class Position { kLhs, kRhs, kInsideTypicality, kAssertion };

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lex(text)) {}

  KnowledgeBase ParseKb() {
    KnowledgeBase kb;
    for (;;) {
      SkipNewlines();
      if (Peek().type == Tok::kEnd) break;
      kb.add(ParseStatement(/*query=*/false));
      ExpectEndOfStatement();
    }
    return kb;
  }

  Query ParseQuery() {
    SkipNewlines();
    Axiom a = ParseStatement(/*query=*/true);
    SkipNewlines();
    if (Peek().type != Tok::kEnd) Fail(Peek(), "trailing input after query",
                                       {"end of input"});
    if (auto* s = std::get_if<StrictInclusion>(&a)) {
      return StrictQuery{s->lhs, s->rhs};
    }
    const auto& d = std::get<DefeasibleInclusion>(a);
    return DefeasibleQuery{d.lhs, d.rhs};
  }

  Concept ParseStandaloneConcept() {
    SkipNewlines();
    Concept c = ParseConcept(Position::kLhs);
    SkipNewlines();
    if (Peek().type != Tok::kEnd) {
      Fail(Peek(), "unexpected " + Describe(Peek()), {"'&'", "'|'",
                                                       "end of input"});
    }
    return c;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& Next() {
    const Token& t = Peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const Token& at, std::string message,
                         std::vector<std::string> expected = {},
                         ParseErrorKind kind = ParseErrorKind::kSyntax) const {
    Diagnostic d;
    d.kind = kind;
    d.line = at.line;
    d.column = at.column;
    d.message = std::move(message);
    d.expected = std::move(expected);
    throw ParseError(std::move(d));
  }

  const Token& Expect(Tok type, const char* what) {
    if (Peek().type != type) {
      Fail(Peek(), "unexpected " + Describe(Peek()), {what});
    }
    return Next();
  }

  void SkipNewlines() {
    while (Peek().type == Tok::kNewline) Next();
  }

  void ExpectEndOfStatement() {
    const Token& t = Peek();
    if (t.type != Tok::kNewline && t.type != Tok::kEnd) {
      Fail(t, "unexpected " + Describe(t) + " after statement",
           {"end of line"});
    }
  }

  // Index of the ')' matching the '(' at pos_ + offset, or npos.
  std::size_t MatchingParen(std::size_t offset) const {
    int depth = 0;
    for (std::size_t i = pos_ + offset; i < tokens_.size(); ++i) {
      const Tok t = tokens_[i].type;
      if (t == Tok::kNewline || t == Tok::kEnd) break;
      if (t == Tok::kLParen) ++depth;
      if (t == Tok::kRParen && --depth == 0) return i;
    }
    return std::string::npos;
  }

  Axiom ParseStatement(bool query) {
    const Token& first = Peek();
    if (first.type == Tok::kIdent && Peek(1).type == Tok::kLParen) {
      const std::size_t close = MatchingParen(1);
      const bool arrow_follows =
          close != std::string::npos && close + 1 < tokens_.size() &&
          (tokens_[close + 1].type == Tok::kStrict ||
           tokens_[close + 1].type == Tok::kDefeasible);
      if (first.text == "T" && arrow_follows) return ParseTypicalityForm();
      if (query) {
        Fail(first, "assertion queries are not supported", {},
             ParseErrorKind::kAssertionInQuery);
      }
      return ParseAssertion();
    }
    if (first.type == Tok::kLParen) {
      const std::size_t close = MatchingParen(0);
      if (close != std::string::npos && close + 1 < tokens_.size() &&
          tokens_[close + 1].type == Tok::kLParen) {
        if (query) {
          Fail(first, "assertion queries are not supported", {},
               ParseErrorKind::kAssertionInQuery);
        }
        Next();
        Concept c = ParseConcept(Position::kAssertion);
        Expect(Tok::kRParen, "')'");
        Expect(Tok::kLParen, "'('");
        std::string ind = Expect(Tok::kIdent, "individual name").text;
        Expect(Tok::kRParen, "')'");
        return ConceptAssertion{std::move(c), std::move(ind)};
      }
    }
    Concept lhs = ParseConcept(Position::kLhs);
    const Token& arrow = Peek();
    if (arrow.type != Tok::kStrict && arrow.type != Tok::kDefeasible) {
      Fail(arrow, "unexpected " + Describe(arrow),
           {"'=>'", "'~>'", "'&'", "'|'"});
    }
    Next();
    Concept rhs = ParseConcept(Position::kRhs);
    if (arrow.type == Tok::kStrict) {
      return StrictInclusion{std::move(lhs), std::move(rhs)};
    }
    return DefeasibleInclusion{std::move(lhs), std::move(rhs)};
  }

  // T(C) => D, read as the defeasible inclusion C ~> D.
  Axiom ParseTypicalityForm() {
    Next();  // T
    Next();  // (
    Concept lhs = ParseConcept(Position::kInsideTypicality);
    Expect(Tok::kRParen, "')'");
    const Token& arrow = Next();
    if (arrow.type == Tok::kDefeasible) {
      Fail(arrow, "'~>' already implies typicality on the left-hand side",
           {"'=>'"}, ParseErrorKind::kNestedTypicality);
    }
    Concept rhs = ParseConcept(Position::kRhs);
    return DefeasibleInclusion{std::move(lhs), std::move(rhs)};
  }

  Axiom ParseAssertion() {
    std::string name = Next().text;
    Next();  // (
    std::string a = Expect(Tok::kIdent, "individual name").text;
    if (Peek().type == Tok::kComma) {
      Next();
      std::string b = Expect(Tok::kIdent, "individual name").text;
      Expect(Tok::kRParen, "')'");
      return RoleAssertion{std::move(name), std::move(a), std::move(b)};
    }
    Expect(Tok::kRParen, "')' or ','");
    return ConceptAssertion{Concept::Atom(std::move(name)), std::move(a)};
  }

  Concept ParseConcept(Position where) {
    std::vector<Concept> ops{ParseConj(where)};
    while (Peek().type == Tok::kBar) {
      Next();
      ops.push_back(ParseConj(where));
    }
    return ops.size() == 1 ? ops.front() : Concept::Or(std::move(ops));
  }

  Concept ParseConj(Position where) {
    std::vector<Concept> ops{ParseUnary(where)};
    while (Peek().type == Tok::kAmp) {
      Next();
      ops.push_back(ParseUnary(where));
    }
    return ops.size() == 1 ? ops.front() : Concept::And(std::move(ops));
  }

  Concept ParseUnary(Position where) {
    const Token& t = Peek();
    switch (t.type) {
      case Tok::kBang:
        Next();
        return Concept::Not(ParseUnary(where));
      case Tok::kAll:
      case Tok::kSome: {
        Next();
        std::string role = Expect(Tok::kIdent, "role name").text;
        Expect(Tok::kDot, "'.'");
        Concept body = ParseUnary(where);
        return t.type == Tok::kAll ? Concept::All(role, std::move(body))
                                   : Concept::Some(role, std::move(body));
      }
      case Tok::kTop:
        Next();
        return Concept::Top();
      case Tok::kBot:
        Next();
        return Concept::Bot();
      case Tok::kLParen: {
        Next();
        Concept c = ParseConcept(where);
        Expect(Tok::kRParen, "')'");
        return c;
      }
      case Tok::kIdent: {
        if (Peek(1).type == Tok::kLParen) RejectApplication(t, where);
        Next();
        return Concept::Atom(t.text);
      }
      default:
        Fail(t, "unexpected " + Describe(t),
             {"concept name", "'Top'", "'Bot'", "'!'", "'all'", "'some'",
              "'('"});
    }
  }

  [[noreturn]] void RejectApplication(const Token& t, Position where) {
    if (t.text != "T") {
      Fail(Peek(1), "unexpected '(' after concept name '" + t.text + "'",
           {"'&'", "'|'", "'=>'", "'~>'", "')'"});
    }
    switch (where) {
      case Position::kRhs:
        Fail(t, "typicality is not allowed on the right-hand side", {},
             ParseErrorKind::kTypicalityOnRight);
      case Position::kInsideTypicality:
        Fail(t, "nested typicality is not allowed", {},
             ParseErrorKind::kNestedTypicality);
      default:
        Fail(t,
             "typicality is not allowed inside concepts; write 'C ~> D' for "
             "T(C) ⊑ D",
             {}, ParseErrorKind::kTypicalityInConcept);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) {
  return Parser(text).ParseKb();
}

Query parse_query(std::string_view text) { return Parser(text).ParseQuery(); }

Concept parse_concept(std::string_view text) {
  return Parser(text).ParseStandaloneConcept();
}

}  // namespace defeasor
