#include "defeasor/oracle.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "defeasor/rational_closure.h"
#include "defeasor/tableau.h"

namespace defeasor {

namespace {

constexpr std::size_t kMaxElements = 64;
constexpr std::size_t kNoInstance = std::numeric_limits<std::size_t>::max();

std::uint64_t Bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > std::numeric_limits<std::uint64_t>::max()
             ? std::numeric_limits<std::uint64_t>::max()
             : static_cast<std::uint64_t>(r);
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = SaturatingMul(r, base);
  return r;
}

// Surjections from an n-set onto a k-set.
std::uint64_t Surjections(std::uint64_t n, std::uint64_t k) {
  // Inclusion-exclusion: Σ (−1)^i C(k,i) (k−i)^n.
  __int128 total = 0;
  __int128 binom = 1;
  for (std::uint64_t i = 0; i <= k; ++i) {
    __int128 term = binom;
    for (std::uint64_t j = 0; j < n; ++j) term *= static_cast<__int128>(k - i);
    total += (i % 2 == 0) ? term : -term;
    binom = binom * static_cast<__int128>(k - i) / static_cast<__int128>(i + 1);
  }
  return static_cast<std::uint64_t>(total);
}

// The TBox part of a KB; canonical constructions ignore the ABox.
KnowledgeBase TBoxOf(const KnowledgeBase& kb) {
  KnowledgeBase out;
  for (const auto& a : kb.strict()) out.add(a);
  for (const auto& a : kb.defeasible()) out.add(a);
  return out;
}

KnowledgeBase WithLevel(const KnowledgeBase& kb, const DefaultSet& level) {
  KnowledgeBase out;
  for (const auto& a : kb.strict()) out.add(a);
  for (const auto& d : level) out.add(d);
  return out;
}

std::set<std::string> AtomsOf(const Query& q) {
  std::set<std::string> out;
  std::visit(
      [&out](const auto& x) {
        x.lhs.collect_atoms(out);
        x.rhs.collect_atoms(out);
      },
      q);
  return out;
}

bool QueryRoleFree(const Query& q) {
  return std::visit(
      [](const auto& x) { return x.lhs.role_free() && x.rhs.role_free(); },
      q);
}

bool RoleFree(const KnowledgeBase& kb) {
  return kb.signature().roles.empty();
}

// All 2^n valuations of `atoms` as a rank-0 interpretation whose element i
// is the valuation with bit j set iff atoms[j] holds.
RankedInterpretation ValuationSpace(const std::vector<std::string>& atoms) {
  RankedInterpretation m;
  m.size = std::size_t{1} << atoms.size();
  m.rank.assign(m.size, 0);
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    std::uint64_t ext = 0;
    for (std::size_t v = 0; v < m.size; ++v) {
      if ((v >> j) & 1u) ext |= Bit(v);
    }
    m.atoms[atoms[j]] = ext;
  }
  return m;
}

std::map<DefeasibleInclusion, std::size_t> SemanticRanks(
    const RankedInterpretation& m, const DefaultSet& defaults) {
  std::map<DefeasibleInclusion, std::size_t> out;
  for (const auto& d : defaults) {
    out[d] = m.rank_of(d.lhs).value_or(kNoInstance);
  }
  return out;
}

void CheckCanonicalBounds(const OracleBounds& bounds) {
  if (bounds.canonical_mode && bounds.max_roles != 0) {
    throw BoundsError("canonical mode requires max_roles = 0");
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "";
}

std::uint64_t RankedInterpretation::domain() const {
  return size >= 64 ? ~std::uint64_t{0} : Bit(size) - 1;
}

std::uint64_t RankedInterpretation::extension(const Concept& c) const {
  switch (c.kind()) {
    case ConceptKind::kTop:
      return domain();
    case ConceptKind::kBot:
      return 0;
    case ConceptKind::kAtom: {
      auto it = atoms.find(c.name());
      return it == atoms.end() ? 0 : it->second;
    }
    case ConceptKind::kNot:
      return domain() & ~extension(c.operand());
    case ConceptKind::kAnd: {
      std::uint64_t r = domain();
      for (const Concept& o : c.operands()) r &= extension(o);
      return r;
    }
    case ConceptKind::kOr: {
      std::uint64_t r = 0;
      for (const Concept& o : c.operands()) r |= extension(o);
      return r;
    }
    case ConceptKind::kAll:
    case ConceptKind::kSome: {
      const std::uint64_t filler = extension(c.operand());
      auto it = roles.find(c.name());
      std::uint64_t r = 0;
      for (std::size_t x = 0; x < size; ++x) {
        const std::uint64_t succ = it == roles.end() ? 0 : it->second[x];
        const bool in = c.is(ConceptKind::kSome) ? (succ & filler) != 0
                                                 : (succ & ~filler) == 0;
        if (in) r |= Bit(x);
      }
      return r;
    }
  }
  return 0;
}

std::uint64_t RankedInterpretation::minimal(std::uint64_t s) const {
  std::size_t best = kNoInstance;
  for (std::size_t x = 0; x < size; ++x) {
    if ((s >> x) & 1u) best = std::min(best, rank[x]);
  }
  std::uint64_t r = 0;
  for (std::size_t x = 0; x < size; ++x) {
    if (((s >> x) & 1u) && rank[x] == best) r |= Bit(x);
  }
  return r;
}

std::optional<std::size_t> RankedInterpretation::rank_of(
    const Concept& c) const {
  const std::uint64_t ext = extension(c);
  if (ext == 0) return std::nullopt;
  std::size_t best = kNoInstance;
  for (std::size_t x = 0; x < size; ++x) {
    if ((ext >> x) & 1u) best = std::min(best, rank[x]);
  }
  return best;
}

std::string RankedInterpretation::str() const {
  std::ostringstream out;
  for (std::size_t x = 0; x < size; ++x) {
    out << "x" << x << " rank " << rank[x] << ":";
    for (const auto& [name, ext] : atoms) {
      if ((ext >> x) & 1u) out << " " << name;
    }
    for (const auto& [role, succ] : roles) {
      for (std::size_t y = 0; y < size; ++y) {
        if ((succ[x] >> y) & 1u) out << " " << role << "->x" << y;
      }
    }
    for (const auto& [ind, e] : individuals) {
      if (e == x) out << " =" << ind;
    }
    out << "\n";
  }
  return out.str();
}

std::uint64_t count_ranked_interpretations(std::size_t atoms,
                                           std::size_t roles,
                                           std::size_t individuals,
                                           const OracleBounds& bounds) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= bounds.max_domain; ++n) {
    std::uint64_t rankings = 0;
    for (std::size_t r = 0; r <= bounds.max_rank && r < n; ++r) {
      rankings = SaturatingAdd(rankings, Surjections(n, r + 1));
    }
    std::uint64_t term = SaturatingPow(SaturatingPow(2, atoms), n);
    term = SaturatingMul(term, rankings);
    term = SaturatingMul(term, SaturatingPow(2, roles * n * n));
    term = SaturatingMul(term, SaturatingPow(n, individuals));
    total = SaturatingAdd(total, term);
  }
  return total;
}

void enumerate_ranked_interpretations(
    const Signature& sig, const OracleBounds& bounds,
    const std::function<bool(const RankedInterpretation&)>& visit) {
  if (sig.atoms.size() > bounds.max_atoms) {
    throw BoundsError("signature has " + std::to_string(sig.atoms.size()) +
                      " atoms, bound is " + std::to_string(bounds.max_atoms));
  }
  if (sig.roles.size() > bounds.max_roles) {
    throw BoundsError("signature has " + std::to_string(sig.roles.size()) +
                      " roles, bound is " + std::to_string(bounds.max_roles));
  }
  if (bounds.max_domain > kMaxElements) {
    throw BoundsError("domains are limited to 64 elements");
  }
  const std::vector<std::string> atoms(sig.atoms.begin(), sig.atoms.end());
  const std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
  const std::vector<std::string> inds(sig.individuals.begin(),
                                      sig.individuals.end());
  const std::size_t labels = std::size_t{1} << atoms.size();

  for (std::size_t n = 1; n <= bounds.max_domain; ++n) {
    const std::size_t role_bits = roles.size() * n * n;
    if (role_bits >= 63) throw BoundsError("role extensions too large");
    RankedInterpretation m;
    m.size = n;
    m.rank.assign(n, 0);
    std::vector<std::size_t> label(n, 0);
    const std::size_t top_rank = std::min(bounds.max_rank, n - 1);

    // Odometers: labels, then ranks, then roles, then individuals.
    while (true) {
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        std::uint64_t ext = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if ((label[x] >> j) & 1u) ext |= Bit(x);
        }
        m.atoms[atoms[j]] = ext;
      }
      std::vector<std::size_t> rank(n, 0);
      while (true) {
        // Ranks must form a prefix 0..r.
        std::uint64_t used = 0;
        std::size_t hi = 0;
        for (std::size_t r : rank) {
          used |= Bit(r);
          hi = std::max(hi, r);
        }
        if (used == Bit(hi + 1) - 1) {
          m.rank = rank;
          for (std::uint64_t rbits = 0; rbits < (std::uint64_t{1} << role_bits);
               ++rbits) {
            for (std::size_t k = 0; k < roles.size(); ++k) {
              std::vector<std::uint64_t> succ(n, 0);
              for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) {
                  const std::size_t bit = k * n * n + x * n + y;
                  if ((rbits >> bit) & 1u) succ[x] |= Bit(y);
                }
              }
              m.roles[roles[k]] = std::move(succ);
            }
            std::vector<std::size_t> ind(inds.size(), 0);
            while (true) {
              for (std::size_t i = 0; i < inds.size(); ++i) {
                m.individuals[inds[i]] = ind[i];
              }
              if (!visit(m)) return;
              std::size_t i = 0;
              while (i < ind.size() && ++ind[i] == n) ind[i++] = 0;
              if (i == ind.size()) break;
            }
          }
        }
        std::size_t i = 0;
        while (i < n && ++rank[i] > top_rank) rank[i++] = 0;
        if (i == n) break;
      }
      std::size_t i = 0;
      while (i < n && ++label[i] == labels) label[i++] = 0;
      if (i == n) break;
    }
  }
}

bool check_ranked_model(const KnowledgeBase& kb,
                        const RankedInterpretation& m) {
  for (const auto& a : kb.strict()) {
    if (m.extension(a.lhs) & ~m.extension(a.rhs)) return false;
  }
  for (const auto& d : kb.defeasible()) {
    if (m.minimal(m.extension(d.lhs)) & ~m.extension(d.rhs)) return false;
  }
  for (const auto& a : kb.concept_assertions()) {
    auto it = m.individuals.find(a.individual);
    if (it == m.individuals.end()) return false;
    if (!((m.extension(a.c) >> it->second) & 1u)) return false;
  }
  for (const auto& a : kb.role_assertions()) {
    auto s = m.individuals.find(a.subject);
    auto o = m.individuals.find(a.object);
    auto r = m.roles.find(a.role);
    if (s == m.individuals.end() || o == m.individuals.end() ||
        r == m.roles.end()) {
      return false;
    }
    if (!((r->second[s->second] >> o->second) & 1u)) return false;
  }
  return true;
}

Verdict oracle_exceptional(const KnowledgeBase& kb, const DefaultSet& level,
                           const Concept& c, const OracleBounds& bounds,
                           RankedInterpretation* countermodel) {
  const KnowledgeBase e = WithLevel(kb, level);
  Signature sig = e.signature();
  c.collect_atoms(sig.atoms);
  c.collect_roles(sig.roles);
  if (sig.atoms.size() > bounds.max_atoms) return Verdict::kUnknown;

  if (sig.roles.empty()) {
    // The rank-0 layer of a model is a model on its own, and so is any
    // subset of a single-layer model of a role-free KB. A rank-0 instance
    // of c therefore exists iff some one-element model has one.
    const std::vector<std::string> atoms(sig.atoms.begin(), sig.atoms.end());
    const RankedInterpretation space = ValuationSpace(atoms);
    for (std::size_t v = 0; v < space.size; ++v) {
      RankedInterpretation m;
      m.size = 1;
      m.rank = {0};
      for (const auto& [name, ext] : space.atoms) m.atoms[name] = (ext >> v) & 1u;
      if (check_ranked_model(e, m) && (m.extension(c) & 1u)) {
        if (countermodel) *countermodel = m;
        return Verdict::kFalse;
      }
    }
    const bool complete = bounds.max_domain >= space.size &&
                          bounds.max_rank >= level.size();
    return complete ? Verdict::kTrue : Verdict::kUnknown;
  }

  Verdict verdict = Verdict::kUnknown;
  std::uint64_t visited = 0;
  try {
    enumerate_ranked_interpretations(
        sig, bounds, [&](const RankedInterpretation& m) {
          if (++visited > bounds.max_interpretations) return false;
          if (!check_ranked_model(e, m)) return true;
          const std::uint64_t ext = m.extension(c);
          for (std::size_t x = 0; x < m.size; ++x) {
            if (((ext >> x) & 1u) && m.rank[x] == 0) {
              if (countermodel) *countermodel = m;
              verdict = Verdict::kFalse;
              return false;
            }
          }
          return true;
        });
  } catch (const BoundsError&) {
    return Verdict::kUnknown;
  }
  return verdict;
}

std::vector<RankedInterpretation> minimal_canonical_ranked_models(
    const KnowledgeBase& kb, const OracleBounds& bounds,
    const std::set<std::string>& extra_atoms) {
  CheckCanonicalBounds(bounds);
  const KnowledgeBase tbox = TBoxOf(kb);
  Signature sig = tbox.signature();
  if (!sig.roles.empty()) {
    throw BoundsError("canonical models are only built for role-free KBs");
  }
  sig.atoms.insert(extra_atoms.begin(), extra_atoms.end());
  if (sig.atoms.size() > bounds.max_atoms || sig.atoms.size() > 6) {
    throw BoundsError("too many atoms for canonical models: " +
                      std::to_string(sig.atoms.size()));
  }
  const std::vector<std::string> atoms(sig.atoms.begin(), sig.atoms.end());
  const RankedInterpretation space = ValuationSpace(atoms);

  std::uint64_t valid = space.domain();
  for (const auto& a : tbox.strict()) {
    valid &= ~space.extension(a.lhs) | space.extension(a.rhs);
  }
  const DefaultSet& defaults = tbox.defeasible();
  std::vector<std::uint64_t> cext, viol;
  for (const auto& d : defaults) {
    cext.push_back(space.extension(d.lhs));
    viol.push_back(cext.back() & ~space.extension(d.rhs));
  }

  // Layer j takes every remaining valuation that violates no default whose
  // antecedent is still unrealized below j. This gives each valuation its
  // least possible rank; valuations never placed occur in no model.
  std::vector<std::size_t> rank(space.size, kNoInstance);
  std::vector<bool> decided(defaults.size(), false);
  std::uint64_t remaining = valid;
  for (std::size_t j = 0; remaining != 0; ++j) {
    std::uint64_t good = remaining;
    for (std::size_t i = 0; i < defaults.size(); ++i) {
      if (!decided[i]) good &= ~viol[i];
    }
    if (good == 0) break;
    if (j > bounds.max_rank) {
      throw BoundsError("canonical model needs rank " + std::to_string(j) +
                        ", bound is " + std::to_string(bounds.max_rank));
    }
    for (std::size_t v = 0; v < space.size; ++v) {
      if ((good >> v) & 1u) rank[v] = j;
    }
    for (std::size_t i = 0; i < defaults.size(); ++i) {
      if (cext[i] & good) decided[i] = true;
    }
    remaining &= ~good;
  }

  RankedInterpretation m;
  std::vector<std::size_t> members;
  for (std::size_t v = 0; v < space.size; ++v) {
    if (rank[v] != kNoInstance) members.push_back(v);
  }
  if (members.empty()) return {};
  if (members.size() > bounds.max_domain) {
    throw BoundsError("canonical model needs " +
                      std::to_string(members.size()) +
                      " elements, bound is " +
                      std::to_string(bounds.max_domain));
  }
  m.size = members.size();
  for (std::size_t x = 0; x < members.size(); ++x) {
    m.rank.push_back(rank[members[x]]);
  }
  for (const auto& [name, ext] : space.atoms) {
    std::uint64_t e = 0;
    for (std::size_t x = 0; x < members.size(); ++x) {
      if ((ext >> members[x]) & 1u) e |= Bit(x);
    }
    m.atoms[name] = e;
  }
  return {m};
}

Verdict ranked_min_entails(const KnowledgeBase& kb, const Query& q,
                           const OracleBounds& bounds,
                           RankedInterpretation* countermodel) {
  if (!RoleFree(TBoxOf(kb)) || !QueryRoleFree(q)) return Verdict::kUnknown;
  for (const auto& m :
       minimal_canonical_ranked_models(kb, bounds, AtomsOf(q))) {
    bool holds;
    if (const auto* s = std::get_if<StrictQuery>(&q)) {
      holds = (m.extension(s->lhs) & ~m.extension(s->rhs)) == 0;
    } else {
      const auto& d = std::get<DefeasibleQuery>(q);
      holds = (m.minimal(m.extension(d.lhs)) & ~m.extension(d.rhs)) == 0;
    }
    if (!holds) {
      if (countermodel) *countermodel = m;
      return Verdict::kFalse;
    }
  }
  return Verdict::kTrue;
}

std::uint64_t BPInterpretation::minimal(std::uint64_t s) const {
  std::uint64_t r = 0;
  for (std::size_t x = 0; x < base.size; ++x) {
    if (((s >> x) & 1u) && (below[x] & s) == 0) r |= Bit(x);
  }
  return r;
}

bool specificity_step(const DefaultSet& vx, const DefaultSet& vy,
                      const std::map<DefeasibleInclusion, std::size_t>& rank) {
  const DefaultSet only_y = set_difference(vy, vx);
  if (only_y.empty()) return false;
  for (const auto& dj : set_difference(vx, vy)) {
    bool outranked = false;
    for (const auto& dk : only_y) {
      if (rank.at(dj) < rank.at(dk)) {
        outranked = true;
        break;
      }
    }
    if (!outranked) return false;
  }
  return true;
}

BPInterpretation induce_bp_order(const RankedInterpretation& m,
                                 const KnowledgeBase& kb) {
  BPInterpretation bp;
  bp.base = m;
  const std::size_t n = m.size;
  const DefaultSet& defaults = kb.defeasible();
  const auto rank = SemanticRanks(m, defaults);
  bp.violated.assign(n, {});
  for (const auto& d : defaults) {
    const std::uint64_t v = m.extension(d.lhs) & ~m.extension(d.rhs);
    for (std::size_t x = 0; x < n; ++x) {
      if ((v >> x) & 1u) bp.violated[x].push_back(d);
    }
  }
  bp.below.assign(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (specificity_step(bp.violated[x], bp.violated[y], rank)) {
        bp.below[y] |= Bit(x);
      }
    }
  }
  // Transitive closure.
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((bp.below[y] >> z) & 1u) bp.below[y] |= bp.below[z];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (bp.less(x, x)) {
      throw std::logic_error("induced order is reflexive at x" +
                             std::to_string(x) + "\n" + m.str());
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (m.rank[x] < m.rank[y] && !bp.less(x, y)) {
        throw std::logic_error("rank order not contained in induced order: x" +
                               std::to_string(x) + ", x" + std::to_string(y) +
                               "\n" + m.str());
      }
    }
  }
  bp.dist.assign(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (bp.less(x, y)) bp.dist[y] = std::max(bp.dist[y], bp.dist[x] + 1);
      }
    }
  }
  return bp;
}

Verdict bp_min_entails(const KnowledgeBase& kb, const DefeasibleQuery& q,
                       const OracleBounds& bounds,
                       BPInterpretation* countermodel) {
  if (!RoleFree(TBoxOf(kb)) || !QueryRoleFree(q)) return Verdict::kUnknown;
  const KnowledgeBase tbox = TBoxOf(kb);
  for (const auto& m :
       minimal_canonical_ranked_models(tbox, bounds, AtomsOf(q))) {
    BPInterpretation bp = induce_bp_order(m, tbox);
    if (bp.minimal(m.extension(q.lhs)) & ~m.extension(q.rhs)) {
      if (countermodel) *countermodel = std::move(bp);
      return Verdict::kFalse;
    }
  }
  return Verdict::kTrue;
}

std::optional<DISets> di_sets(const KnowledgeBase& kb, const Concept& b,
                              const OracleBounds& bounds,
                              const std::set<std::string>& extra_atoms) {
  const KnowledgeBase tbox = TBoxOf(kb);
  std::set<std::string> atoms = extra_atoms;
  b.collect_atoms(atoms);
  const auto models = minimal_canonical_ranked_models(tbox, bounds, atoms);
  if (models.empty()) return std::nullopt;
  const RankedInterpretation& m = models.front();
  const BPInterpretation bp = induce_bp_order(m, tbox);
  const std::uint64_t mins = bp.minimal(m.extension(b));
  if (mins == 0) return std::nullopt;

  DISets out;
  out.k = *m.rank_of(b);
  const auto rank = SemanticRanks(m, tbox.defeasible());
  for (const auto& d : tbox.defeasible()) {
    const std::uint64_t sat = mins & ~(m.extension(d.lhs) &
                                       ~m.extension(d.rhs));
    if (sat == mins) {
      out.di.push_back(d);
    } else if (sat != 0) {
      out.confl.push_back(d);
    }
  }
  auto conflict_at = [&](std::size_t j) {
    return std::any_of(out.confl.begin(), out.confl.end(),
                       [&](const auto& d) { return rank.at(d) == j; });
  };
  out.h = out.k;
  while (out.h > 0 && !conflict_at(out.h - 1)) --out.h;
  for (const auto& d : out.di) {
    if (rank.at(d) >= out.h) out.di_sk.push_back(d);
  }
  return out;
}

Verdict sk_semantic_entails(const KnowledgeBase& kb, const DefeasibleQuery& q,
                            const OracleBounds& bounds) {
  if (!RoleFree(TBoxOf(kb)) || !QueryRoleFree(Query(q))) {
    return Verdict::kUnknown;
  }
  std::set<std::string> atoms;
  q.rhs.collect_atoms(atoms);
  const auto sets = di_sets(kb, q.lhs, bounds, atoms);
  if (!sets) return Verdict::kTrue;
  const Reasoner reasoner{StrictTheory(kb.strict())};
  const bool entailed = reasoner.entails_subsumption(
      Concept::And(materialize(sets->di_sk), q.lhs), q.rhs);
  return entailed ? Verdict::kTrue : Verdict::kFalse;
}

std::vector<Concept> probe_concepts(const Signature& sig) {
  const std::vector<std::string> atoms(sig.atoms.begin(), sig.atoms.end());
  std::vector<Concept> out;
  for (const auto& a : atoms) {
    out.push_back(Concept::Atom(a));
    out.push_back(Concept::Not(Concept::Atom(a)));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      for (int signs = 0; signs < 4; ++signs) {
        Concept a = Concept::Atom(atoms[i]);
        Concept b = Concept::Atom(atoms[j]);
        out.push_back(Concept::And(signs & 1 ? Concept::Not(a) : a,
                                   signs & 2 ? Concept::Not(b) : b));
      }
    }
  }
  return out;
}

}  // namespace defeasor
