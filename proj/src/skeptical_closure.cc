#include "defeasor/skeptical_closure.h"

#include <stdexcept>

namespace defeasor {

bool globally_compatible(const RankedPartition& p, const DefaultSet& s,
                         const DefaultSet& s_prime, const Concept& b,
                         std::size_t k, std::size_t* calls) {
  if (calls) ++*calls;
  return p.reasoner().is_satisfiable(Concept::And(
      {materialize(p.level_defaults(k)), materialize(s), materialize(s_prime),
       b}));
}

DefaultSet individually_compatible(const RankedPartition& p, const Concept& b,
                                   const DefaultSet& extra, std::size_t i,
                                   std::size_t* calls) {
  const Rank rank = p.rank_of(b);
  if (rank.is_infinite() || i >= rank.value()) {
    throw std::invalid_argument("stratum index must be below the focus rank");
  }
  DefaultSet out;
  for (const auto& d : p.strata()[i]) {
    if (globally_compatible(p, DefaultSet{d}, extra, b, rank.value(), calls)) {
      out.push_back(d);
    }
  }
  return out;
}

const char* to_string(StratumStatus s) {
  switch (s) {
    case StratumStatus::kAccepted:
      return "accepted";
    case StratumStatus::kRejected:
      return "rejected";
    case StratumStatus::kNotEvaluated:
      return "not evaluated";
  }
  return "";
}

SkepticalBase skeptical_base(const RankedPartition& p, const Concept& b) {
  const Rank rank = p.rank_of(b);
  if (rank.is_infinite()) {
    throw std::invalid_argument("skeptical base needs a finite-rank focus");
  }
  SkepticalBase base;
  base.focus = b;
  base.k = rank.value();
  base.level_defaults = p.level_defaults(base.k);
  base.cutoff = base.k;
  bool stopped = false;
  for (std::size_t i = base.k; i-- > 0;) {
    StratumReport report;
    report.rank = i;
    if (!stopped) {
      report.compatible =
          individually_compatible(p, b, base.accepted, i, &base.call_count);
      report.incompatible = set_difference(p.strata()[i], report.compatible);
      // A single individually compatible default is compatible jointly.
      const bool joint =
          report.compatible.size() <= 1 ||
          globally_compatible(p, report.compatible, base.accepted, b, base.k,
                              &base.call_count);
      if (joint) {
        report.status = StratumStatus::kAccepted;
        base.accepted = set_union(base.accepted, report.compatible);
        base.cutoff = i;
      } else {
        report.status = StratumStatus::kRejected;
        base.failing_level = i;
        stopped = true;
        if (i + 1 == base.k) {
          base.collapsed = true;
          base.cutoff.reset();
        }
      }
    }
    base.strata.push_back(std::move(report));
  }
  return base;
}

SkepticalAnswer sk_entails(const RankedPartition& p,
                           const DefeasibleQuery& q) {
  SkepticalAnswer answer;
  if (p.rank_of(q.lhs).is_infinite()) {
    answer.entailed = true;
    return answer;
  }
  answer.base = skeptical_base(p, q.lhs);
  answer.query_checks = 1;
  answer.entailed = !p.reasoner().is_satisfiable(
      Concept::And({materialize(answer.base->defaults()), q.lhs,
                    Concept::Not(q.rhs)}));
  return answer;
}

SkepticalAnswer sk_entails(const KnowledgeBase& kb, const DefeasibleQuery& q,
                           const TableauOptions& options) {
  return sk_entails(compute_ranking(kb, options), q);
}

}  // namespace defeasor
