#include "comax/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "comax/errors.hpp"

namespace comax {

IntPolynomial to_polynomial(const SizeHistogram& h) {
    IntPolynomial p;
    for (const auto& [k, c] : h.counts) p.set_coefficient(k, c);
    return p;
}

namespace {

using Words = std::vector<std::uint64_t>;

bool none(const Words& w) {
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

bool test_bit(const Words& w, int v) { return (w[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u; }
void set_bit(Words& w, int v) { w[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64); }
void clear_bit(Words& w, int v) { w[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64)); }

template <typename F>
void for_each_bit(const Words& w, F&& fn) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t word = w[i];
        while (word) {
            fn(static_cast<int>(i * 64) + __builtin_ctzll(word));
            word &= word - 1;
        }
    }
}

int intersection_count(const Words& a, std::span<const std::uint64_t> b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

struct WordsHash {
    std::size_t operator()(const Words& w) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : w) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Bron-Kerbosch over non-adjacency with Tomita-style pivoting; reports every
/// maximal independent set of the subgraph induced on the initial candidates.
class MisEnumerator {
public:
    MisEnumerator(const CompactGraph& g, const std::function<void(std::span<const int>)>& visit)
        : graph_(g), visit_(visit), words_(static_cast<std::size_t>(g.words_per_row())) {
        nonadj_.resize(static_cast<std::size_t>(g.order()), Words(words_, 0));
        Words universe(words_, 0);
        for (int v = 0; v < g.order(); ++v) set_bit(universe, v);
        for (int v = 0; v < g.order(); ++v) {
            auto row = g.row(v);
            Words& nv = nonadj_[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < words_; ++i) nv[i] = universe[i] & ~row[i];
            clear_bit(nv, v);
        }
    }

    void run(const Words& candidates) {
        Words empty(words_, 0);
        expand(candidates, empty);
    }

private:
    void report() {
        std::vector<int> sorted = current_;
        std::sort(sorted.begin(), sorted.end());
        visit_(sorted);
    }

    void expand(const Words& p, const Words& x) {
        if (none(p) && none(x)) {
            report();
            return;
        }
        // pivot u in P|X maximizing |P & nonadj(u)|: branching is confined to
        // P minus nonadj(u), i.e. the pivot itself and its neighbors
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            const int score = intersection_count(p, nonadj_[static_cast<std::size_t>(u)]);
            if (score > best) {
                best = score;
                pivot = u;
            }
        };
        for_each_bit(p, consider);
        for_each_bit(x, consider);

        Words ext(words_);
        const Words& pn = nonadj_[static_cast<std::size_t>(pivot)];
        for (std::size_t i = 0; i < words_; ++i) ext[i] = p[i] & ~pn[i];

        Words np(words_), nx(words_);
        Words pp = p, xx = x;
        for_each_bit(ext, [&](int v) {
            const Words& nv = nonadj_[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < words_; ++i) {
                np[i] = pp[i] & nv[i];
                nx[i] = xx[i] & nv[i];
            }
            current_.push_back(v);
            expand(np, nx);
            current_.pop_back();
            clear_bit(pp, v);
            set_bit(xx, v);
        });
    }

    const CompactGraph& graph_;
    const std::function<void(std::span<const int>)>& visit_;
    std::size_t words_;
    std::vector<Words> nonadj_;
    std::vector<int> current_;
};

}  // namespace

void for_each_maximal_independent_set(const CompactGraph& g,
                                      const std::function<void(std::span<const int>)>& visit,
                                      int oracle_limit) {
    if (g.order() > oracle_limit)
        throw capacity_error("maximal_independent_sets: order " + std::to_string(g.order()) +
                             " exceeds oracle limit " + std::to_string(oracle_limit));
    const std::size_t words = static_cast<std::size_t>(g.words_per_row());

    // universal vertices are singleton maximal independent sets and belong to
    // no other one; emit and exclude them from branching entirely
    Words rest(words, 0);
    int rest_count = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1) {
            const int single[] = {v};
            visit(single);
        } else {
            set_bit(rest, v);
            ++rest_count;
        }
    }
    if (rest_count == 0 && g.order() > 0) return;

    MisEnumerator enumerator(g, visit);
    enumerator.run(rest);
}

SizeHistogram maximal_independent_sets(const CompactGraph& g, int oracle_limit) {
    SizeHistogram hist;
    for_each_maximal_independent_set(
        g, [&](std::span<const int> s) { hist.bump(static_cast<int>(s.size())); }, oracle_limit);
    return hist;
}

namespace {

constexpr std::size_t kMemoCap = std::size_t{1} << 22;

/// Dense coefficient vectors of independence polynomials per surviving
/// vertex set; index k holds the number of independent k-subsets.
class IndependentSetCounter {
public:
    explicit IndependentSetCounter(const CompactGraph& g)
        : graph_(g), words_(static_cast<std::size_t>(g.words_per_row())) {}

    std::vector<BigInt> count(const Words& live) {
        if (none(live)) return {BigInt(1)};
        if (auto it = memo_.find(live); it != memo_.end()) return it->second;

        std::vector<BigInt> result;
        Words active = live;
        int isolated = 0;
        for_each_bit(live, [&](int v) {
            if (intersection_count(live, graph_.row(v)) == 0) {
                clear_bit(active, v);
                ++isolated;
            }
        });

        if (isolated > 0) {
            result = convolve_binomial(count(active), isolated);
        } else {
            int pivot = -1, best = -1;
            for_each_bit(live, [&](int v) {
                const int d = intersection_count(live, graph_.row(v));
                if (d > best) {
                    best = d;
                    pivot = v;
                }
            });
            Words without = live;
            clear_bit(without, pivot);
            std::vector<BigInt> skip = count(without);

            Words closed = without;
            for (std::size_t i = 0; i < words_; ++i) closed[i] &= ~graph_.row(pivot)[i];
            std::vector<BigInt> take = count(closed);

            result.assign(std::max(skip.size(), take.size() + 1), BigInt(0));
            for (std::size_t i = 0; i < skip.size(); ++i) result[i] = skip[i];
            for (std::size_t i = 0; i < take.size(); ++i) result[i + 1] += take[i];
        }

        if (memo_.size() < kMemoCap) memo_.emplace(live, result);
        return result;
    }

private:
    static std::vector<BigInt> convolve_binomial(const std::vector<BigInt>& base, int k) {
        // multiply by (1 + x)^k
        std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
        row[0] = 1;
        for (int i = 0; i < k; ++i) row[static_cast<std::size_t>(i) + 1] = row[static_cast<std::size_t>(i)] * (k - i) / (i + 1);
        std::vector<BigInt> out(base.size() + static_cast<std::size_t>(k), BigInt(0));
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (base[i] == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j) out[i + j] += base[i] * row[j];
        }
        return out;
    }

    const CompactGraph& graph_;
    std::size_t words_;
    std::unordered_map<Words, std::vector<BigInt>, WordsHash> memo_;
};

}  // namespace

SizeHistogram independent_sets_by_size(const CompactGraph& g, int oracle_limit) {
    if (g.order() > oracle_limit)
        throw capacity_error("independent_sets_by_size: order " + std::to_string(g.order()) +
                             " exceeds oracle limit " + std::to_string(oracle_limit));
    Words all(static_cast<std::size_t>(g.words_per_row()), 0);
    for (int v = 0; v < g.order(); ++v) set_bit(all, v);

    IndependentSetCounter counter(g);
    const std::vector<BigInt> dense = counter.count(all);

    SizeHistogram hist;
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (dense[k] != 0) hist.bump(static_cast<int>(k), dense[k]);
    return hist;
}

bool verify_dominating_independent(const CompactGraph& g, std::span<const int> s) {
    Words mask(static_cast<std::size_t>(g.words_per_row()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.order())
            throw std::domain_error("verify_dominating_independent: vertex " + std::to_string(v) +
                                    " out of range");
        set_bit(mask, v);
    }
    for (int v : s)
        if (intersection_count(mask, g.row(v)) != 0) return false;  // not independent
    for (int v = 0; v < g.order(); ++v) {
        if (test_bit(mask, v)) continue;
        if (intersection_count(mask, g.row(v)) == 0) return false;  // not dominated
    }
    return true;
}

GraphNumbers graph_numbers(const CompactGraph& g, const RunConfig& cfg) {
    const SizeHistogram mis = maximal_independent_sets(g, cfg.oracle_limit_mis);
    const SizeHistogram ind = independent_sets_by_size(g, cfg.oracle_limit_ind);
    if (mis.counts.empty() || ind.counts.empty())
        throw std::domain_error("graph_numbers: empty histogram");
    return {mis.counts.begin()->first, ind.counts.rbegin()->first};
}

}  // namespace comax
