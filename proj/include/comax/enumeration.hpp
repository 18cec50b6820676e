#ifndef COMAX_ENUMERATION_HPP
#define COMAX_ENUMERATION_HPP

#include <functional>
#include <map>
#include <span>

#include "comax/bigint.hpp"
#include "comax/config.hpp"
#include "comax/graph.hpp"
#include "comax/polynomial.hpp"

namespace comax {

/// Exact counts keyed by set cardinality.  No zero-valued entries stored.
struct SizeHistogram {
    std::map<int, BigInt> counts;

    void bump(int k, const BigInt& by = 1) {
        auto [it, inserted] = counts.emplace(k, by);
        if (!inserted) {
            it->second += by;
            if (it->second == 0) counts.erase(it);
        }
    }

    friend bool operator==(const SizeHistogram&, const SizeHistogram&) = default;
};

IntPolynomial to_polynomial(const SizeHistogram& h);

/// Enumerates every maximal independent set (= independent dominating set),
/// invoking visit with the member vertices in increasing order.  Universal
/// vertices are emitted as singletons up front and never branched on.
void for_each_maximal_independent_set(const CompactGraph& g,
                                      const std::function<void(std::span<const int>)>& visit,
                                      int oracle_limit = RunConfig{}.oracle_limit_mis);

/// counts[k] = number of maximal independent sets of cardinality k.
SizeHistogram maximal_independent_sets(const CompactGraph& g,
                                       int oracle_limit = RunConfig{}.oracle_limit_mis);

/// counts[k] = number of independent vertex subsets of cardinality k,
/// counts[0] = 1 for the empty set.  Deletion/contraction on a highest-degree
/// pivot with memoization on the surviving vertex set (capped; recursion
/// proceeds uncached beyond the cap).
SizeHistogram independent_sets_by_size(const CompactGraph& g,
                                       int oracle_limit = RunConfig{}.oracle_limit_ind);

/// True iff s is pairwise non-adjacent and every vertex outside s has a
/// neighbor inside it.
bool verify_dominating_independent(const CompactGraph& g, std::span<const int> s);

struct GraphNumbers {
    int gamma_i;  ///< independent domination number
    int alpha;    ///< independence number
};

GraphNumbers graph_numbers(const CompactGraph& g, const RunConfig& cfg = {});

}  // namespace comax

#endif
