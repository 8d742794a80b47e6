#include "defeasor/mp_closure.h"

#include <algorithm>
#include <string>
#include <utility>

#include "defeasor/skeptical_closure.h"

namespace defeasor {

namespace {

const DefaultSet kEmpty;

struct Prefix {
  DefaultSet chosen;
  // Stratum sizes from rank k−1 downward, compared lexicographically.
  std::vector<std::size_t> sizes;
};

class Enumerator {
 public:
  Enumerator(const RankedPartition& p, const Concept& b, std::size_t k,
             const BaseOptions& options, std::size_t& calls)
      : p_(p), b_(b), k_(k), options_(options), calls_(calls) {}

  bool Compatible(const DefaultSet& s, const DefaultSet& prefix) {
    if (calls_ >= options_.candidate_budget) {
      throw BudgetExceededError(options_.candidate_budget);
    }
    return globally_compatible(p_, s, prefix, b_, k_, &calls_);
  }

  // ⊆-maximal subsets X of `stratum` with X ∪ prefix compatible.
  std::vector<DefaultSet> MaximalExtensions(const DefaultSet& stratum,
                                            const DefaultSet& prefix) {
    DefaultSet live;
    for (const auto& d : stratum) {
      if (Compatible(DefaultSet{d}, prefix)) live.push_back(d);
    }
    const std::size_t n = live.size();
    if (n == 0) return {DefaultSet{}};
    if (n >= 32 || (std::uint64_t{1} << n) > options_.candidate_budget) {
      throw BudgetExceededError(options_.candidate_budget);
    }
    std::vector<std::uint32_t> masks(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                       return __builtin_popcount(a) > __builtin_popcount(b);
                     });
    std::vector<std::uint32_t> found;
    for (std::uint32_t m : masks) {
      bool dominated = false;
      for (std::uint32_t f : found) {
        if ((m & f) == m) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      const bool singleton = __builtin_popcount(m) <= 1;
      if (singleton || Compatible(Select(live, m), prefix)) found.push_back(m);
    }
    std::vector<DefaultSet> out;
    for (std::uint32_t f : found) out.push_back(Select(live, f));
    return out;
  }

 private:
  static DefaultSet Select(const DefaultSet& from, std::uint32_t mask) {
    DefaultSet out;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (mask >> i & 1u) out.push_back(from[i]);
    }
    return out;
  }

  const RankedPartition& p_;
  const Concept& b_;
  std::size_t k_;
  const BaseOptions& options_;
  std::size_t& calls_;
};

}  // namespace

StratifiedDefaultSet StratifiedDefaultSet::stratify(const RankedPartition& p,
                                                    const DefaultSet& s) {
  StratifiedDefaultSet out;
  out.all_ = s;
  canonicalize(out.all_);
  for (const auto& d : out.all_) {
    const Rank r = p.rank_of(d);
    if (r.is_infinite()) {
      throw std::invalid_argument("default of infinite rank: " + d.str());
    }
    if (out.strata_.size() <= r.value()) out.strata_.resize(r.value() + 1);
    out.strata_[r.value()].push_back(d);
  }
  return out;
}

const DefaultSet& StratifiedDefaultSet::stratum(std::size_t i) const {
  return i < strata_.size() ? strata_[i] : kEmpty;
}

bool mp_prefer(const StratifiedDefaultSet& s_prime,
               const StratifiedDefaultSet& s) {
  const std::size_t n = std::max(s_prime.strata().size(), s.strata().size());
  for (std::size_t j = n; j-- > 0;) {
    const DefaultSet& a = s_prime.stratum(j);
    const DefaultSet& b = s.stratum(j);
    if (a == b) continue;
    return is_subset(b, a);
  }
  return false;
}

bool lex_prefer(const StratifiedDefaultSet& s_prime,
                const StratifiedDefaultSet& s) {
  const std::size_t n = std::max(s_prime.strata().size(), s.strata().size());
  for (std::size_t j = n; j-- > 0;) {
    const std::size_t a = s_prime.stratum(j).size();
    const std::size_t b = s.stratum(j).size();
    if (a != b) return a > b;
  }
  return false;
}

const char* to_string(BaseOrder order) {
  return order == BaseOrder::kMp ? "mp" : "lex";
}

BudgetExceededError::BudgetExceededError(std::uint64_t budget)
    : std::runtime_error("base enumeration budget of " +
                         std::to_string(budget) + " candidates exceeded"),
      budget_(budget) {}

BaseSet maximal_bases(const RankedPartition& p, const Concept& b,
                      BaseOrder order, const BaseOptions& options) {
  const Rank rank = p.rank_of(b);
  if (rank.is_infinite()) {
    throw std::invalid_argument("bases need a finite-rank focus");
  }
  BaseSet result;
  result.focus = b;
  result.k = rank.value();
  result.order = order;
  Enumerator e(p, b, result.k, options, result.call_count);

  std::vector<Prefix> beam{Prefix{}};
  for (std::size_t i = result.k; i-- > 0;) {
    std::vector<Prefix> next;
    for (const Prefix& prefix : beam) {
      for (DefaultSet& x :
           e.MaximalExtensions(p.strata()[i], prefix.chosen)) {
        Prefix extended{set_union(prefix.chosen, x), prefix.sizes};
        extended.sizes.push_back(x.size());
        next.push_back(std::move(extended));
      }
    }
    if (order == BaseOrder::kLex) {
      const auto best =
          std::max_element(next.begin(), next.end(),
                           [](const Prefix& a, const Prefix& b) {
                             return a.sizes < b.sizes;
                           })
              ->sizes;
      std::erase_if(next, [&](const Prefix& x) { return x.sizes != best; });
    }
    beam = std::move(next);
  }

  DefaultSet upper;
  for (std::size_t i = result.k; i < p.finite_rank_count(); ++i) {
    upper = set_union(upper, p.strata()[i]);
  }
  for (const Prefix& prefix : beam) {
    result.bases.push_back(StratifiedDefaultSet::stratify(
        p, set_union(prefix.chosen, upper)));
  }
  std::sort(result.bases.begin(), result.bases.end(),
            [](const StratifiedDefaultSet& a, const StratifiedDefaultSet& b) {
              return a.defaults() < b.defaults();
            });
  result.bases.erase(std::unique(result.bases.begin(), result.bases.end()),
                     result.bases.end());
  return result;
}

ClosureAnswer closure_entails(const RankedPartition& p,
                              const DefeasibleQuery& q, BaseOrder order,
                              const BaseOptions& options) {
  ClosureAnswer answer;
  const Rank rank = p.rank_of(q.lhs);
  if (rank.is_infinite()) {
    answer.entailed = true;
    return answer;
  }
  answer.bases = maximal_bases(p, q.lhs, order, options);
  const Concept level = materialize(p.level_defaults(rank.value()));
  answer.entailed = true;
  for (const auto& base : answer.bases->bases) {
    ++answer.query_checks;
    if (p.reasoner().is_satisfiable(
            Concept::And({level, materialize(base.defaults()), q.lhs,
                          Concept::Not(q.rhs)}))) {
      answer.entailed = false;
      break;
    }
  }
  return answer;
}

ClosureAnswer closure_entails(const KnowledgeBase& kb,
                              const DefeasibleQuery& q, BaseOrder order,
                              const TableauOptions& tableau,
                              const BaseOptions& options) {
  return closure_entails(compute_ranking(kb, tableau), q, order, options);
}

}  // namespace defeasor
