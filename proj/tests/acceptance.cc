// Acceptance criteria A1..A10: one PASS/FAIL line each, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.h"
#include "defeasor/mp_closure.h"
#include "defeasor/oracle.h"
#include "defeasor/skeptical_closure.h"
#include "test_util.h"

using namespace defeasor;
using namespace defeasor::testing;

namespace {

constexpr std::size_t kRandomKbs = 200;

struct Criterion {
  std::string id;
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::ostringstream detail;

  void Expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    pass = false;
    if (failures++ < 5) detail << "\n    " << what;
  }
};

OracleBounds Canonical(const KnowledgeBase& kb) {
  OracleBounds b;
  b.max_atoms = kb.signature().atoms.size();
  b.max_roles = 0;
  b.max_domain = std::size_t{1} << b.max_atoms;
  b.max_rank = kb.defeasible().size() + 1;
  b.canonical_mode = true;
  return b;
}

std::string Show(const std::string& kb, const DefeasibleQuery& q) {
  return kb + ": " + serialize(Query{q});
}

DefaultSet Set(std::initializer_list<DefeasibleInclusion> ds) {
  DefaultSet s(ds);
  canonicalize(s);
  return s;
}

void A1(Criterion& c) {
  RankedPartition p = compute_ranking(LoadKb("student"));
  const std::pair<const char*, std::size_t> ranks[] = {
      {"Student", 0},
      {"WStudent", 1},
      {"Student & Italian", 0},
      {"Student & Italian & Pay_Taxes", 1},
      {"WStudent & Italian", 1},
      {"WStudent & Italian & !Pay_Taxes", 2}};
  for (const auto& [concept_text, rank] : ranks) {
    c.Expect(p.rank_of(C(concept_text)) == Rank::Finite(rank),
             std::string("rank of ") + concept_text);
  }
  c.Expect(rc_entails(p, Q("Student & Italian", "!Pay_Taxes")),
           "Student & Italian ~> !Pay_Taxes");
  c.Expect(rc_entails(p, Q("WStudent & Italian", "Pay_Taxes")),
           "WStudent & Italian ~> Pay_Taxes");
  c.Expect(!rc_entails(p, Q("WStudent", "Smart")), "WStudent ~> Smart");
}

void A2(Criterion& c) {
  RankedPartition student = compute_ranking(LoadKb("student"));
  SkepticalAnswer ws = sk_entails(student, Q("WStudent", "Smart"));
  c.Expect(ws.entailed, "WStudent ~> Smart");
  c.Expect(ws.base && ws.base->defaults() ==
                          set_union(student.levels()[1],
                                    Set({D("Student", "Smart")})),
           "working-student base");

  RankedPartition k2 = compute_ranking(LoadKb("student_employee"));
  SkepticalBase collapsed = skeptical_base(k2, C("Student & Employee"));
  c.Expect(collapsed.collapsed && collapsed.defaults() == k2.levels()[1],
           "base collapses to E1");

  RankedPartition penguin = compute_ranking(LoadKb("penguin"));
  c.Expect(sk_entails(penguin,
                      Q("BabyPenguin", "NiceFeather & !Fly & !BlackFeather"))
               .entailed,
           "baby penguins");

  RankedPartition weak = compute_ranking(LoadKb("student_employee_weak"));
  DefeasibleQuery young = Q("Student & Employee", "Young");
  c.Expect(!sk_entails(weak, young).entailed, "young under sk");
  c.Expect(closure_entails(weak, young, BaseOrder::kLex).entailed,
           "young under lex");
}

void A3(Criterion& c) {
  RankedPartition ssn = compute_ranking(LoadKb("ssn"));
  c.Expect(maximal_bases(ssn, C("Student & Employee"), BaseOrder::kMp)
                   .bases.size() == 2,
           "two MP bases");
  DefeasibleQuery q = Q("Student & Employee", "some hasSSN. Top");
  c.Expect(closure_entails(ssn, q, BaseOrder::kMp).entailed, "hasSSN under mp");
  c.Expect(!sk_entails(ssn, q).entailed, "hasSSN under sk");

  RankedPartition smart = compute_ranking(LoadKb("ssn_smart"));
  c.Expect(maximal_bases(smart, C("Student & Employee"), BaseOrder::kLex)
                   .bases.size() == 1,
           "one lex base");
  c.Expect(maximal_bases(smart, C("Student & Employee"), BaseOrder::kMp)
                   .bases.size() == 2,
           "two MP bases");
}

struct Sweep {
  Criterion& a4;
  Criterion& a9;
  std::size_t sk_not_in_mp = 0;
  // Queries separating adjacent closures; shows the chain is not vacuous.
  std::size_t sk_over_rc = 0, mp_over_sk = 0, lex_over_mp = 0;
};

void A4A9(const std::vector<CorpusKb>& corpus, Sweep& s) {
  std::size_t worst_calls = 0, worst_bound = 1;
  for (const CorpusKb& entry : corpus) {
    RankedPartition p = compute_ranking(entry.kb);
    const std::size_t bound = 2 * entry.kb.defeasible().size();
    const auto concepts = QueryConcepts(entry.kb);
    for (const Concept& lhs : concepts) {
      if (p.rank_of(lhs).is_finite()) {
        SkepticalBase base = skeptical_base(p, lhs);
        s.a9.Expect(base.call_count <= bound,
                    entry.name + ": " + lhs.str() + " used " +
                        std::to_string(base.call_count) + " checks");
        if (base.call_count * worst_bound > worst_calls * bound) {
          worst_calls = base.call_count;
          worst_bound = bound;
        }
      }
      for (const Concept& rhs : concepts) {
        const DefeasibleQuery q{lhs, rhs};
        const bool rc = rc_entails(p, q);
        const bool sk = sk_entails(p, q).entailed;
        const bool mp = closure_entails(p, q, BaseOrder::kMp).entailed;
        const bool lex = closure_entails(p, q, BaseOrder::kLex).entailed;
        s.a4.Expect(!rc || sk, "RC not in SK at " + Show(entry.name, q));
        s.a4.Expect(!sk || mp, "SK not in MP at " + Show(entry.name, q));
        s.a4.Expect(!mp || lex, "MP not in LEX at " + Show(entry.name, q));
        s.a4.Expect(!rc || mp, "RC not in MP at " + Show(entry.name, q));
        if (sk && !mp) ++s.sk_not_in_mp;
        s.sk_over_rc += sk && !rc;
        s.mp_over_sk += mp && !sk;
        s.lex_over_mp += lex && !mp;
      }
    }
  }
  s.a9.detail << " (worst " << worst_calls << " of " << worst_bound << ")";
}

void A5(const std::vector<CorpusKb>& corpus, Criterion& c,
        std::size_t& unknown) {
  for (const CorpusKb& entry : corpus) {
    const KnowledgeBase& kb = entry.atomized;
    RankedPartition p = compute_ranking(kb);
    OracleBounds bounds = Canonical(kb);
    std::vector<Concept> concepts = QueryConcepts(kb);
    for (const auto& d : kb.defeasible()) concepts.push_back(d.lhs);
    for (std::size_t i = 0; i <= p.levels().size(); ++i) {
      const DefaultSet& level = p.level_defaults(i);
      for (const Concept& x : concepts) {
        const Verdict v = oracle_exceptional(kb, level, x, bounds);
        if (v == Verdict::kUnknown) {
          ++unknown;
          continue;
        }
        c.Expect(is_exceptional(p.reasoner(), level, x) == (v == Verdict::kTrue),
                 entry.name + ": level " + std::to_string(i) + ", " + x.str());
      }
    }
  }
}

void Oracles(const std::vector<CorpusKb>& corpus, Criterion& a6,
             Criterion& a7, Criterion& a8, std::size_t& unknown) {
  for (const CorpusKb& entry : corpus) {
    const KnowledgeBase& kb = entry.atomized;
    RankedPartition p = compute_ranking(kb);
    OracleBounds bounds = Canonical(kb);
    const auto concepts = QueryConcepts(kb);
    for (const Concept& lhs : concepts) {
      for (const Concept& rhs : concepts) {
        const DefeasibleQuery q{lhs, rhs};
        auto compare = [&](Criterion& c, bool syntactic, Verdict v) {
          if (v == Verdict::kUnknown) {
            ++unknown;
            return;
          }
          c.Expect(syntactic == (v == Verdict::kTrue),
                   Show(entry.name, q) + " closure says " +
                       (syntactic ? "true" : "false"));
        };
        compare(a6, rc_entails(p, q), ranked_min_entails(kb, q, bounds));
        compare(a7, closure_entails(p, q, BaseOrder::kMp).entailed,
                bp_min_entails(kb, q, bounds));
        compare(a8, sk_entails(p, q).entailed,
                sk_semantic_entails(kb, q, bounds));
      }
    }
  }
}

void A10(const std::vector<CorpusKb>& corpus, Criterion& c) {
  Generator gen(7);
  for (const CorpusKb& entry : corpus) {
    RankedPartition p = compute_ranking(entry.kb);
    const auto& levels = p.levels();
    for (std::size_t i = 1; i < levels.size(); ++i) {
      c.Expect(is_subset(levels[i], levels[i - 1]) &&
                   levels[i] != levels[i - 1],
               entry.name + ": level " + std::to_string(i) + " not below");
    }
    c.Expect(is_subset(p.infinite(), levels.back()),
             entry.name + ": infinite defaults outside the last level");

    const auto concepts = QueryConcepts(entry.kb);
    for (const Concept& x : concepts) {
      for (const Concept& y : concepts) {
        c.Expect(p.rank_of(x) <= p.rank_of(Concept::And(x, y)),
                 entry.name + ": rank of " + x.str() + " and " + y.str());
      }
    }

    // Strict partial-order laws on sampled stratified subsets.
    DefaultSet finite;
    for (const auto& s : p.strata()) finite = set_union(finite, s);
    std::vector<StratifiedDefaultSet> sample;
    for (int i = 0; i < 12; ++i) {
      DefaultSet s;
      for (const auto& d : finite) {
        if (gen.Below(2)) s.push_back(d);
      }
      sample.push_back(StratifiedDefaultSet::stratify(p, s));
    }
    for (auto prefer : {mp_prefer, lex_prefer}) {
      for (const auto& x : sample) {
        c.Expect(!prefer(x, x), entry.name + ": order reflexive");
        for (const auto& y : sample) {
          c.Expect(!(prefer(x, y) && prefer(y, x)),
                   entry.name + ": order symmetric");
          for (const auto& z : sample) {
            c.Expect(!(prefer(x, y) && prefer(y, z)) || prefer(x, z),
                     entry.name + ": order not transitive");
          }
        }
      }
    }

    // Induced BP orders extend the rank order and satisfy specificity.
    const KnowledgeBase& kb = entry.atomized;
    for (const auto& m : minimal_canonical_ranked_models(kb, Canonical(kb))) {
      BPInterpretation bp;
      try {
        bp = induce_bp_order(m, kb);
      } catch (const std::logic_error& e) {
        c.Expect(false, entry.name + ": " + e.what());
        continue;
      }
      std::map<DefeasibleInclusion, std::size_t> ranks;
      for (const auto& d : kb.defeasible()) {
        ranks[d] = m.rank_of(d.lhs).value_or(SIZE_MAX);
      }
      for (std::size_t x = 0; x < m.size; ++x) {
        for (std::size_t y = 0; y < m.size; ++y) {
          if (m.rank[x] < m.rank[y]) {
            c.Expect(bp.less(x, y), entry.name + ": rank order not kept");
          }
          if (specificity_step(bp.violated[x], bp.violated[y], ranks)) {
            c.Expect(bp.less(x, y), entry.name + ": specificity not kept");
          }
        }
      }
      for (const auto& d : kb.defeasible()) {
        const std::uint64_t lhs = m.extension(d.lhs);
        c.Expect((bp.minimal(lhs) & ~m.extension(d.rhs)) == 0,
                 entry.name + ": " + d.str() + " fails in the BP model");
      }
    }
  }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<CorpusKb> corpus = Corpus(kRandomKbs);
  std::vector<Criterion> c(10);
  for (std::size_t i = 0; i < c.size(); ++i) c[i].id = "A" + std::to_string(i + 1);

  auto guarded = [](Criterion& crit, const auto& body) {
    try {
      body();
    } catch (const std::exception& e) {
      crit.Expect(false, std::string("exception: ") + e.what());
    }
  };
  guarded(c[0], [&] { A1(c[0]); });
  guarded(c[1], [&] { A2(c[1]); });
  guarded(c[2], [&] { A3(c[2]); });
  Sweep sweep{c[3], c[8]};
  guarded(c[3], [&] { A4A9(corpus, sweep); });
  std::size_t unknown5 = 0, unknown_oracle = 0;
  guarded(c[4], [&] { A5(corpus, c[4], unknown5); });
  guarded(c[5], [&] { Oracles(corpus, c[5], c[6], c[7], unknown_oracle); });
  guarded(c[9], [&] { A10(corpus, c[9]); });

  c[3].detail << " (" << sweep.sk_not_in_mp << " SK answers outside MP; "
               << "strict gains: sk/rc " << sweep.sk_over_rc << ", mp/sk "
               << sweep.mp_over_sk << ", lex/mp " << sweep.lex_over_mp << ")";
  c[4].detail << " (" << unknown5 << " unknown verdicts skipped)";
  c[5].detail << " (" << unknown_oracle << " unknown verdicts skipped in A6-A8)";

  bool all = true;
  for (Criterion& crit : c) {
    all = all && crit.pass;
    std::cout << (crit.pass ? "PASS " : "FAIL ") << crit.id << "  "
              << crit.checks - crit.failures << "/" << crit.checks
              << " checks" << crit.detail.str() << "\n";
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::cout << "corpus: 6 worked KBs + " << kRandomKbs << " random, " << secs
            << " s\n";
  return all ? 0 : 1;
}
