#include "defeasor/concept.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <utility>

namespace defeasor {

struct Concept::Node {
  ConceptKind kind;
  std::string name;
  std::vector<Concept> operands;
  std::size_t hash;
  std::size_t size;
  bool role_free;
};

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Concept& TopSingleton() {
  static const Concept top = Concept::Top();
  return top;
}

}  // namespace

Concept::Concept() : Concept(TopSingleton()) {}

Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Concept Concept::Make(ConceptKind kind, std::string name,
                      std::vector<Concept> operands) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = Mix(static_cast<std::size_t>(kind) + 1,
                      std::hash<std::string>{}(name));
  std::size_t size = 1;
  bool role_free = kind != ConceptKind::kAll && kind != ConceptKind::kSome;
  for (const Concept& c : operands) {
    h = Mix(h, c.hash());
    size += c.size();
    role_free = role_free && c.role_free();
  }
  node->name = std::move(name);
  node->operands = std::move(operands);
  node->hash = h;
  node->size = size;
  node->role_free = role_free;
  return Concept(std::shared_ptr<const Node>(std::move(node)));
}

Concept Concept::Top() {
  static const Concept top = Make(ConceptKind::kTop, "", {});
  return top;
}

Concept Concept::Bot() {
  static const Concept bot = Make(ConceptKind::kBot, "", {});
  return bot;
}

Concept Concept::Atom(std::string name) {
  assert(is_valid_identifier(name));
  return Make(ConceptKind::kAtom, std::move(name), {});
}

Concept Concept::Not(Concept c) {
  return Make(ConceptKind::kNot, "", {std::move(c)});
}

Concept Concept::MakeJunction(ConceptKind kind,
                              std::vector<Concept> operands) {
  std::vector<Concept> flat;
  flat.reserve(operands.size());
  for (Concept& c : operands) {
    if (c.kind() == kind) {
      for (const Concept& inner : c.operands()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kind == ConceptKind::kAnd ? Top() : Bot();
  if (flat.size() == 1) return flat.front();
  return Make(kind, "", std::move(flat));
}

Concept Concept::And(Concept l, Concept r) {
  return MakeJunction(ConceptKind::kAnd, {std::move(l), std::move(r)});
}

Concept Concept::And(std::vector<Concept> operands) {
  return MakeJunction(ConceptKind::kAnd, std::move(operands));
}

Concept Concept::Or(Concept l, Concept r) {
  return MakeJunction(ConceptKind::kOr, {std::move(l), std::move(r)});
}

Concept Concept::Or(std::vector<Concept> operands) {
  return MakeJunction(ConceptKind::kOr, std::move(operands));
}

Concept Concept::All(std::string role, Concept c) {
  assert(is_valid_identifier(role));
  return Make(ConceptKind::kAll, std::move(role), {std::move(c)});
}

Concept Concept::Some(std::string role, Concept c) {
  assert(is_valid_identifier(role));
  return Make(ConceptKind::kSome, std::move(role), {std::move(c)});
}

ConceptKind Concept::kind() const { return node_->kind; }

const std::string& Concept::name() const { return node_->name; }

std::span<const Concept> Concept::operands() const {
  return node_->operands;
}

const Concept& Concept::operand() const {
  assert(node_->operands.size() == 1);
  return node_->operands.front();
}

std::size_t Concept::hash() const { return node_->hash; }

std::size_t Concept::size() const { return node_->size; }

bool Concept::role_free() const { return node_->role_free; }

void Concept::collect_atoms(std::set<std::string>& out) const {
  if (kind() == ConceptKind::kAtom) out.insert(name());
  for (const Concept& c : operands()) c.collect_atoms(out);
}

void Concept::collect_roles(std::set<std::string>& out) const {
  if (kind() == ConceptKind::kAll || kind() == ConceptKind::kSome) {
    out.insert(name());
  }
  for (const Concept& c : operands()) c.collect_roles(out);
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  auto lhs = a.operands();
  auto rhs = b.operands();
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(),
                                                rhs.begin(), rhs.end());
}

namespace {

// Binding strength: Or < And < prefix forms.
int Precedence(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kOr:
      return 1;
    case ConceptKind::kAnd:
      return 2;
    default:
      return 3;
  }
}

void Print(const Concept& c, int context, std::string& out) {
  const bool parens = Precedence(c) < context;
  if (parens) out += '(';
  switch (c.kind()) {
    case ConceptKind::kTop:
      out += "Top";
      break;
    case ConceptKind::kBot:
      out += "Bot";
      break;
    case ConceptKind::kAtom:
      out += c.name();
      break;
    case ConceptKind::kNot:
      out += '!';
      Print(c.operand(), 3, out);
      break;
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      const bool conj = c.kind() == ConceptKind::kAnd;
      bool first = true;
      for (const Concept& op : c.operands()) {
        if (!first) out += conj ? " & " : " | ";
        first = false;
        Print(op, conj ? 3 : 2, out);
      }
      break;
    }
    case ConceptKind::kAll:
    case ConceptKind::kSome:
      out += c.kind() == ConceptKind::kAll ? "all " : "some ";
      out += c.name();
      out += ". ";
      Print(c.operand(), 3, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Concept::str() const {
  std::string out;
  Print(*this, 0, out);
  return out;
}

namespace {

Concept Nnf(const Concept& c, bool negated) {
  switch (c.kind()) {
    case ConceptKind::kTop:
      return negated ? Concept::Bot() : c;
    case ConceptKind::kBot:
      return negated ? Concept::Top() : c;
    case ConceptKind::kAtom:
      return negated ? Concept::Not(c) : c;
    case ConceptKind::kNot:
      return Nnf(c.operand(), !negated);
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const Concept& op : c.operands()) ops.push_back(Nnf(op, negated));
      const bool conj = (c.kind() == ConceptKind::kAnd) != negated;
      return conj ? Concept::And(std::move(ops)) : Concept::Or(std::move(ops));
    }
    case ConceptKind::kAll:
    case ConceptKind::kSome: {
      const bool universal = (c.kind() == ConceptKind::kAll) != negated;
      Concept body = Nnf(c.operand(), negated);
      return universal ? Concept::All(c.name(), std::move(body))
                       : Concept::Some(c.name(), std::move(body));
    }
  }
  return c;
}

}  // namespace

Concept nnf(const Concept& c) { return Nnf(c, false); }

Concept normalize(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kTop:
    case ConceptKind::kBot:
    case ConceptKind::kAtom:
      return c;
    case ConceptKind::kNot:
      return Concept::Not(normalize(c.operand()));
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      std::vector<Concept> ops;
      for (const Concept& op : c.operands()) ops.push_back(normalize(op));
      return c.kind() == ConceptKind::kAnd ? Concept::And(std::move(ops))
                                           : Concept::Or(std::move(ops));
    }
    case ConceptKind::kAll:
      return Concept::All(c.name(), normalize(c.operand()));
    case ConceptKind::kSome:
      return Concept::Some(c.name(), normalize(c.operand()));
  }
  return c;
}

bool is_keyword(std::string_view s) {
  return s == "Top" || s == "Bot" || s == "all" || s == "some";
}

bool is_valid_identifier(std::string_view s) {
  if (s.empty() || is_keyword(s)) return false;
  auto alpha = [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_';
  };
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char ch) { return alpha(ch) || digit(ch); });
}

}  // namespace defeasor
