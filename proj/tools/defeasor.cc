// defeasor: command-line front end for ranking, closure queries, base
// enumeration and oracle cross-checks.
//
// Exit codes: 0 entailed / success, 1 not entailed, 2 parse or usage error,
// 3 classically inconsistent KB, 4 resource or budget limit, 5 infinite-rank
// concept for `bases`, 6 oracle disagreement, 7 oracle verdict unknown.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "defeasor/mp_closure.h"
#include "defeasor/oracle.h"
#include "defeasor/parser.h"
#include "defeasor/skeptical_closure.h"
#include "json.hpp"

using namespace defeasor;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode {
  kYes = 0,
  kNo = 1,
  kUsage = 2,
  kInconsistent = 3,
  kResource = 4,
  kInfiniteRank = 5,
  kDisagree = 6,
  kUnknown = 7,
};

// Aborts the command with an exit code; the message goes to stderr.
struct Failure {
  int code;
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Where(const std::string& source, const ParseError& e) {
  const Diagnostic& d = e.diagnostic();
  return source + ":" + std::to_string(d.line) + ":" +
         std::to_string(d.column) + ": " + d.message;
}

KnowledgeBase LoadKb(const std::string& path, const TableauOptions& opts) {
  KnowledgeBase kb;
  try {
    kb = parse_kb(ReadFile(path));
  } catch (const ParseError& e) {
    throw Failure{kUsage, Where(path, e)};
  }
  if (!is_classically_consistent(kb, opts)) {
    throw Failure{kInconsistent, path + ": the strict part and ABox have no "
                                        "classical model"};
  }
  return kb;
}

std::string QueryText(const Query& q) {
  std::string s = serialize(q);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

Json RankJson(const Rank& r) {
  if (r.is_infinite()) return "inf";
  return r.value();
}

Json AxiomList(const DefaultSet& s) {
  Json out = Json::array();
  for (const auto& d : s) out.push_back(d.str());
  return out;
}

std::vector<std::string> InfiniteWarnings(const RankedPartition& p) {
  std::vector<std::string> out;
  for (const auto& d : p.infinite()) {
    out.push_back("default '" + d.str() +
                  "' has infinite rank: its antecedent is empty in every "
                  "ranked model");
  }
  for (const auto& w : out) std::cerr << "warning: " << w << "\n";
  return out;
}

Json StratifiedJson(const StratifiedDefaultSet& s) {
  Json strata = Json::array();
  for (std::size_t i = s.strata().size(); i-- > 0;) {
    if (s.stratum(i).empty()) continue;
    strata.push_back({{"rank", i}, {"defaults", AxiomList(s.stratum(i))}});
  }
  return {{"defaults", AxiomList(s.defaults())}, {"strata", strata}};
}

Json SkepticalJson(const SkepticalBase& b) {
  Json strata = Json::array();
  for (const auto& s : b.strata) {
    strata.push_back({{"rank", s.rank},
                      {"status", to_string(s.status)},
                      {"compatible", AxiomList(s.compatible)},
                      {"incompatible", AxiomList(s.incompatible)}});
  }
  Json cutoff = b.cutoff ? Json(*b.cutoff) : Json(nullptr);
  Json failing = b.failing_level ? Json(*b.failing_level) : Json(nullptr);
  return {{"focus", b.focus.str()},
          {"k", b.k},
          {"cutoff", cutoff},
          {"failing_level", failing},
          {"collapsed", b.collapsed},
          {"strata", strata},
          {"defaults", AxiomList(b.defaults())},
          {"call_count", b.call_count}};
}

void PrintSet(std::ostream& out, const std::string& label, const DefaultSet& s) {
  out << "  " << label << " = {";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i ? ", " : "") << s[i].str();
  }
  out << "}\n";
}

void PrintStratified(std::ostream& out, const StratifiedDefaultSet& s) {
  for (std::size_t i = s.strata().size(); i-- > 0;) {
    for (const auto& d : s.stratum(i)) {
      out << "  rank " << i << ": " << d.str() << "\n";
    }
  }
}

struct Common {
  std::string kb_path;
  bool json = false;
};

int RunRank(const Common& c, const TableauOptions& opts) {
  const KnowledgeBase kb = LoadKb(c.kb_path, opts);
  const RankedPartition p = compute_ranking(kb, opts);
  const auto warnings = InfiniteWarnings(p);
  std::vector<Concept> lhs;
  for (const auto& d : kb.defeasible()) {
    if (std::find(lhs.begin(), lhs.end(), d.lhs) == lhs.end()) {
      lhs.push_back(d.lhs);
    }
  }
  if (c.json) {
    Json levels = Json::array(), strata = Json::array();
    for (const auto& l : p.levels()) levels.push_back(AxiomList(l));
    for (const auto& s : p.strata()) strata.push_back(AxiomList(s));
    Json ranks = Json::object();
    for (const auto& x : lhs) ranks[x.str()] = RankJson(p.rank_of(x));
    std::cout << Json{{"command", "rank"},
                      {"levels", levels},
                      {"strata", strata},
                      {"infinite", AxiomList(p.infinite())},
                      {"ranks", ranks},
                      {"warnings", warnings}}
                     .dump(2)
              << "\n";
    return kYes;
  }
  std::cout << "levels:\n";
  for (std::size_t i = 0; i < p.levels().size(); ++i) {
    PrintSet(std::cout, "E" + std::to_string(i), p.levels()[i]);
  }
  std::cout << "strata:\n";
  for (std::size_t i = 0; i < p.strata().size(); ++i) {
    PrintSet(std::cout, "D" + std::to_string(i), p.strata()[i]);
  }
  std::cout << "infinite:\n";
  PrintSet(std::cout, "E_inf", p.infinite());
  std::cout << "ranks:\n";
  for (const auto& x : lhs) {
    std::cout << "  " << x.str() << ": " << p.rank_of(x).str() << "\n";
  }
  return kYes;
}

Query ParseQueryText(const std::string& text) {
  try {
    return parse_query(text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, Where("query", e)};
  }
}

Concept ParseConceptText(const std::string& text) {
  try {
    return parse_concept(text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, Where("concept", e)};
  }
}

struct QueryArgs {
  std::string mode;
  std::string query;
  bool stats = false;
};

int RunQuery(const Common& c, const QueryArgs& a, const TableauOptions& opts) {
  const KnowledgeBase kb = LoadKb(c.kb_path, opts);
  const Query q = ParseQueryText(a.query);
  const RankedPartition p = compute_ranking(kb, opts);
  InfiniteWarnings(p);
  const std::size_t before = p.reasoner().queries();

  Json out{{"command", "query"}, {"mode", a.mode}, {"query", QueryText(q)}};
  std::ostringstream text;
  bool entailed = false;
  std::size_t checks = 0;
  std::optional<std::size_t> bound;
  if (const auto* s = std::get_if<StrictQuery>(&q)) {
    // Strict inclusions belong to every closure on the same terms.
    out["kind"] = "strict";
    entailed = rc_entails(p, *s);
    checks = p.reasoner().queries() - before;
  } else {
    const auto& d = std::get<DefeasibleQuery>(q);
    out["kind"] = "defeasible";
    out["rank"] = RankJson(p.rank_of(d.lhs));
    if (a.mode == "rc") {
      entailed = rc_entails(p, d);
      checks = p.reasoner().queries() - before;
    } else if (a.mode == "sk") {
      const SkepticalAnswer ans = sk_entails(p, d);
      entailed = ans.entailed;
      checks = ans.query_checks;
      bound = 2 * kb.defeasible().size();
      if (ans.base) {
        checks += ans.base->call_count;
        out["base"] = SkepticalJson(*ans.base);
        text << "base:" << (ans.base->defaults().empty() ? " (empty)" : "")
             << "\n";
        for (const auto& x : ans.base->defaults()) {
          text << "  " << x.str() << "\n";
        }
        if (*bound < ans.base->call_count) {
          std::cerr << "warning: " << ans.base->call_count
                    << " compatibility checks exceed 2|T| = " << *bound << "\n";
        }
      }
    } else {
      const BaseOrder order = a.mode == "mp" ? BaseOrder::kMp : BaseOrder::kLex;
      const ClosureAnswer ans = closure_entails(p, d, order);
      entailed = ans.entailed;
      checks = ans.query_checks;
      if (ans.bases) {
        checks += ans.bases->call_count;
        Json bases = Json::array();
        for (std::size_t i = 0; i < ans.bases->bases.size(); ++i) {
          bases.push_back(StratifiedJson(ans.bases->bases[i]));
          text << "base " << i + 1 << ":\n";
          PrintStratified(text, ans.bases->bases[i]);
        }
        out["bases"] = bases;
      }
    }
  }
  out["entailed"] = entailed;
  if (a.stats) {
    Json stats{{"entailment_checks", checks},
               {"reasoner_queries", p.reasoner().queries()},
               {"tableau_runs", p.reasoner().tableau_runs()}};
    if (bound) stats["bound"] = *bound;
    out["stats"] = stats;
  }
  if (c.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << a.mode << ": " << QueryText(q) << " is "
              << (entailed ? "entailed" : "not entailed") << "\n"
              << text.str();
    if (a.stats) {
      std::cout << "entailment checks: " << checks;
      if (bound) std::cout << " (bound " << *bound << ")";
      std::cout << "\nreasoner queries: " << p.reasoner().queries()
                << ", tableau runs: " << p.reasoner().tableau_runs() << "\n";
    }
  }
  return entailed ? kYes : kNo;
}

struct BasesArgs {
  std::string concept_text;
  std::string order;
};

int RunBases(const Common& c, const BasesArgs& a, const TableauOptions& opts) {
  const KnowledgeBase kb = LoadKb(c.kb_path, opts);
  const Concept b = ParseConceptText(a.concept_text);
  const RankedPartition p = compute_ranking(kb, opts);
  InfiniteWarnings(p);
  if (p.rank_of(b).is_infinite()) {
    throw Failure{kInfiniteRank, b.str() + " has infinite rank; it has no "
                                           "instance in any ranked model"};
  }
  const BaseOrder order = a.order == "mp" ? BaseOrder::kMp : BaseOrder::kLex;
  const BaseSet set = maximal_bases(p, b, order);
  if (c.json) {
    Json bases = Json::array();
    for (const auto& s : set.bases) bases.push_back(StratifiedJson(s));
    std::cout << Json{{"command", "bases"},
                      {"concept", b.str()},
                      {"order", to_string(order)},
                      {"k", set.k},
                      {"bases", bases},
                      {"call_count", set.call_count}}
                     .dump(2)
              << "\n";
    return kYes;
  }
  std::cout << set.bases.size() << " " << to_string(order)
            << " base(s) for " << b.str() << " (rank " << set.k << ")\n";
  for (std::size_t i = 0; i < set.bases.size(); ++i) {
    std::cout << "base " << i + 1 << ":\n";
    PrintStratified(std::cout, set.bases[i]);
  }
  return kYes;
}

struct OracleArgs {
  std::string check;
  std::size_t max_atoms = 6;
  std::size_t max_domain = 64;
  std::size_t max_rank = 8;
};

Json ModelJson(const RankedInterpretation& m,
               const BPInterpretation* bp = nullptr) {
  Json domain = Json::array();
  for (std::size_t x = 0; x < m.size; ++x) {
    Json atoms = Json::array();
    for (const auto& [name, ext] : m.atoms) {
      if ((ext >> x) & 1u) atoms.push_back(name);
    }
    Json element{{"element", x}, {"rank", m.rank[x]}, {"atoms", atoms}};
    Json succ = Json::object();
    for (const auto& [role, edges] : m.roles) {
      Json targets = Json::array();
      for (std::size_t y = 0; y < m.size; ++y) {
        if ((edges[x] >> y) & 1u) targets.push_back(y);
      }
      if (!targets.empty()) succ[role] = targets;
    }
    if (!succ.empty()) element["successors"] = succ;
    domain.push_back(element);
  }
  Json out{{"domain", domain}};
  if (bp) {
    Json order = Json::array();
    for (std::size_t x = 0; x < m.size; ++x) {
      for (std::size_t y = 0; y < m.size; ++y) {
        if (bp->less(x, y)) order.push_back({x, y});
      }
    }
    out["order"] = order;
  }
  return out;
}

void PrintModel(std::ostream& out, const RankedInterpretation& m,
                const BPInterpretation* bp = nullptr) {
  out << m.str();
  if (!bp) return;
  out << "order:";
  for (std::size_t x = 0; x < m.size; ++x) {
    for (std::size_t y = 0; y < m.size; ++y) {
      if (bp->less(x, y)) out << " x" << x << "<x" << y;
    }
  }
  out << "\n";
}

int RunOracle(const Common& c, const OracleArgs& a,
              const TableauOptions& opts) {
  const KnowledgeBase kb = LoadKb(c.kb_path, opts);
  const RankedPartition p = compute_ranking(kb, opts);
  InfiniteWarnings(p);
  const Signature sig = kb.signature();
  const bool exceptional = a.check == "exceptional";

  OracleBounds bounds;
  bounds.max_atoms = a.max_atoms;
  bounds.max_domain = a.max_domain;
  bounds.max_rank = a.max_rank;
  bounds.max_roles = exceptional ? 1 : 0;
  bounds.canonical_mode = !exceptional;

  Json report{{"command", "oracle"},
              {"check", a.check},
              {"verdict", "agree"},
              {"bounds",
               {{"max_atoms", bounds.max_atoms},
                {"max_roles", bounds.max_roles},
                {"max_domain", bounds.max_domain},
                {"max_rank", bounds.max_rank}}},
              {"checked", 0},
              {"unknown", 0}};
  std::size_t checked = 0, unknown = 0;
  std::ostringstream text;

  auto finish = [&](int code) {
    report["checked"] = checked;
    report["unknown"] = unknown;
    if (c.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << a.check << ": " << report["verdict"].get<std::string>()
                << " (" << checked << " checked, " << unknown << " unknown)\n"
                << text.str();
    }
    return code;
  };
  auto unknown_verdict = [&](const std::string& why) {
    report["verdict"] = "unknown";
    report["message"] = why;
    text << why << "\n";
    return finish(kUnknown);
  };
  auto disagree = [&](const std::string& probe, bool closure, Verdict v) {
    report["verdict"] = "disagree";
    report["disagreement"] = {
        {"probe", probe}, {"closure", closure}, {"oracle", to_string(v)}};
    text << "disagreement on " << probe << ": closure says "
         << (closure ? "true" : "false") << ", oracle says " << to_string(v)
         << "\n";
  };

  if (!exceptional && !sig.roles.empty()) {
    return unknown_verdict("canonical models are only built for role-free KBs");
  }
  if (sig.atoms.size() > bounds.max_atoms) {
    return unknown_verdict("KB has " + std::to_string(sig.atoms.size()) +
                           " atoms, above --max-atoms");
  }
  const std::vector<Concept> probes = probe_concepts(sig);

  if (exceptional) {
    std::vector<Concept> concepts = probes;
    for (const auto& d : kb.defeasible()) concepts.push_back(d.lhs);
    for (std::size_t i = 0; i <= p.levels().size(); ++i) {
      const DefaultSet& level = p.level_defaults(i);
      for (const Concept& x : concepts) {
        RankedInterpretation cm;
        const Verdict v = oracle_exceptional(kb, level, x, bounds, &cm);
        if (v == Verdict::kUnknown) {
          ++unknown;
          continue;
        }
        ++checked;
        const bool syntactic = p.is_exceptional(i, x);
        if (syntactic == (v == Verdict::kTrue)) continue;
        disagree("level " + std::to_string(i) + ", " + x.str(), syntactic, v);
        if (v == Verdict::kFalse) {
          report["countermodel"] = ModelJson(cm);
          PrintModel(text, cm);
        }
        return finish(kDisagree);
      }
    }
    if (unknown > 0) report["verdict"] = "unknown";
    return finish(unknown > 0 ? kUnknown : kYes);
  }

  // Canonical checks. Bounds that cannot hold the canonical model give
  // BoundsError, reported as unknown.
  std::vector<RankedInterpretation> models;
  try {
    models = minimal_canonical_ranked_models(kb, bounds);
  } catch (const BoundsError& e) {
    return unknown_verdict(e.what());
  }
  auto attach_model = [&] {
    if (models.empty()) return;
    if (a.check == "rc-vs-models") {
      report["countermodel"] = ModelJson(models.front());
      PrintModel(text, models.front());
    } else {
      const BPInterpretation bp = induce_bp_order(models.front(), kb);
      report["countermodel"] = ModelJson(models.front(), &bp);
      PrintModel(text, models.front(), &bp);
    }
  };

  std::vector<Query> queries;
  for (const Concept& l : probes) {
    for (const Concept& r : probes) {
      queries.push_back(DefeasibleQuery{l, r});
      if (a.check == "rc-vs-models") queries.push_back(StrictQuery{l, r});
    }
  }
  for (const Query& q : queries) {
    bool closure = false;
    Verdict v = Verdict::kUnknown;
    if (a.check == "rc-vs-models") {
      closure = rc_entails(p, q);
      v = ranked_min_entails(kb, q, bounds);
    } else {
      const auto& d = std::get<DefeasibleQuery>(q);
      if (a.check == "mp-vs-bp") {
        closure = closure_entails(p, d, BaseOrder::kMp).entailed;
        v = bp_min_entails(kb, d, bounds);
      } else {
        closure = sk_entails(p, d).entailed;
        v = sk_semantic_entails(kb, d, bounds);
        if (closure != (v == Verdict::kTrue) && v != Verdict::kUnknown) {
          if (const auto sets = di_sets(kb, d.lhs, bounds)) {
            report["di_sets"] = {{"k", sets->k},
                                 {"h", sets->h},
                                 {"di", AxiomList(sets->di)},
                                 {"confl", AxiomList(sets->confl)},
                                 {"di_sk", AxiomList(sets->di_sk)}};
          }
        }
      }
    }
    if (v == Verdict::kUnknown) {
      ++unknown;
      continue;
    }
    ++checked;
    if (closure == (v == Verdict::kTrue)) continue;
    disagree(QueryText(q), closure, v);
    attach_model();
    return finish(kDisagree);
  }
  if (unknown > 0) report["verdict"] = "unknown";
  return finish(unknown > 0 ? kUnknown : kYes);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defeasor: defeasible reasoning over ALC with typicality"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("kb", common.kb_path, "knowledge base file")->required();
    sub->add_flag("--json", common.json, "emit JSON");
  };

  CLI::App* rank = app.add_subcommand("rank", "print the rational ranking");
  add_common(rank);

  QueryArgs query_args;
  CLI::App* query = app.add_subcommand("query", "decide a query");
  add_common(query);
  query->add_option("--mode", query_args.mode, "closure")
      ->required()
      ->check(CLI::IsMember({"rc", "sk", "mp", "lex"}));
  query->add_option("query", query_args.query, "\"C ~> D\" or \"C => D\"")
      ->required();
  query->add_flag("--stats", query_args.stats, "report entailment checks");

  BasesArgs bases_args;
  CLI::App* bases = app.add_subcommand("bases", "list maximal bases");
  add_common(bases);
  bases->add_option("--concept", bases_args.concept_text, "focus concept")
      ->required();
  bases->add_option("--order", bases_args.order, "base order")
      ->required()
      ->check(CLI::IsMember({"mp", "lex"}));

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "cross-check against models");
  add_common(oracle);
  oracle->add_option("--check", oracle_args.check, "cross-check to run")
      ->required()
      ->check(CLI::IsMember(
          {"rc-vs-models", "sk-vs-disk", "mp-vs-bp", "exceptional"}));
  oracle->add_option("--max-atoms", oracle_args.max_atoms)
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  oracle->add_option("--max-domain", oracle_args.max_domain)
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  oracle->add_option("--max-rank", oracle_args.max_rank)
      ->check(CLI::Range(0, 64))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const TableauOptions opts = options_from_environment();
  try {
    if (rank->parsed()) return RunRank(common, opts);
    if (query->parsed()) return RunQuery(common, query_args, opts);
    if (bases->parsed()) return RunBases(common, bases_args, opts);
    return RunOracle(common, oracle_args, opts);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknown;
  }
}
