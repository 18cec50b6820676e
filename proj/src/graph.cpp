#include "comax/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "comax/errors.hpp"
#include "comax/number_theory.hpp"

namespace comax {

CompactGraph::CompactGraph(int order) : order_(order) {
    if (order < 0) throw std::domain_error("CompactGraph: negative order");
    words_ = (order + 63) / 64;
    bits_.assign(static_cast<std::size_t>(order) * words_, 0);
}

void CompactGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::domain_error("CompactGraph: vertex " + std::to_string(v) + " out of range");
}

void CompactGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::domain_error("CompactGraph: self-loops not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool CompactGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

int CompactGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto word : row(v)) d += std::popcount(word);
    return d;
}

std::size_t CompactGraph::edge_count() const {
    std::size_t total = 0;
    for (int v = 0; v < order_; ++v) total += static_cast<std::size_t>(degree(v));
    return total / 2;
}

CompactGraph complete_graph(int k) {
    CompactGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

CompactGraph empty_graph(int k) { return CompactGraph(k); }

CompactGraph complement(const CompactGraph& g) {
    CompactGraph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

CompactGraph disjoint_union(const CompactGraph& a, const CompactGraph& b) {
    CompactGraph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        a.for_each_neighbor(u, [&](int v) {
            if (u < v) g.add_edge(u, v);
        });
    const int offset = a.order();
    for (int u = 0; u < b.order(); ++u)
        b.for_each_neighbor(u, [&](int v) {
            if (u < v) g.add_edge(u + offset, v + offset);
        });
    return g;
}

CompactGraph join(const CompactGraph& a, const CompactGraph& b) {
    CompactGraph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

CompactGraph blow_up(const CompactGraph& quotient, std::span<const std::int64_t> sizes) {
    if (static_cast<int>(sizes.size()) != quotient.order())
        throw std::domain_error("blow_up: one size per quotient vertex required");
    std::int64_t total = 0;
    for (auto s : sizes) {
        if (s <= 0) throw std::domain_error("blow_up: cell sizes must be positive");
        total += s;
    }
    if (total > std::numeric_limits<int>::max())
        throw capacity_error("blow_up: resulting order overflows");

    std::vector<int> start(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        start[i + 1] = start[i] + static_cast<int>(sizes[i]);

    CompactGraph g(static_cast<int>(total));
    g.labels.resize(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int v = start[i]; v < start[i + 1]; ++v) g.labels[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(i);

    for (int qu = 0; qu < quotient.order(); ++qu)
        quotient.for_each_neighbor(qu, [&](int qv) {
            if (qu >= qv) return;
            for (int u = start[qu]; u < start[qu + 1]; ++u)
                for (int v = start[qv]; v < start[qv + 1]; ++v) g.add_edge(u, v);
        });
    return g;
}

CompactGraph induced_subgraph(const CompactGraph& g, std::span<const int> vertices) {
    CompactGraph sub(static_cast<int>(vertices.size()));
    sub.labels.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        sub.labels[i] = g.labels.empty() ? vertices[i] : g.labels[static_cast<std::size_t>(vertices[i])];
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return sub;
}

DivisorPartition divisor_partition(std::int64_t n) {
    if (n < 2) throw std::domain_error("divisor_partition: n must be >= 2");
    DivisorPartition part;
    part.n = n;
    for (auto d : proper_divisors(n)) part.classes.push_back({d, {}});
    for (std::int64_t x = 1; x < n; ++x) {
        const std::int64_t g = std::gcd(x, n);
        if (g == 1) {
            part.units.push_back(x);
        } else {
            auto it = std::lower_bound(part.classes.begin(), part.classes.end(), g,
                                       [](const auto& cell, std::int64_t key) { return cell.divisor < key; });
            it->members.push_back(x);
        }
    }
    return part;
}

namespace {

void check_capacity(std::int64_t n, const RunConfig& cfg) {
    if (n > cfg.vertex_capacity)
        throw capacity_error("comaximal graph order " + std::to_string(n) +
                             " exceeds vertex capacity " + std::to_string(cfg.vertex_capacity));
}

}  // namespace

ComaximalGraph comaximal_graph_direct(std::int64_t n, const RunConfig& cfg) {
    if (n < 2) throw std::domain_error("comaximal_graph_direct: n must be >= 2");
    check_capacity(n, cfg);
    const int order = static_cast<int>(n);

    std::vector<std::int64_t> gcd_with_n(static_cast<std::size_t>(order));
    for (int x = 0; x < order; ++x)
        gcd_with_n[static_cast<std::size_t>(x)] = std::gcd(static_cast<std::int64_t>(x), n);

    CompactGraph g(order);
    g.labels.resize(static_cast<std::size_t>(order));
    std::iota(g.labels.begin(), g.labels.end(), 0);
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (std::gcd(gcd_with_n[static_cast<std::size_t>(a)], gcd_with_n[static_cast<std::size_t>(b)]) == 1)
                g.add_edge(a, b);

    return {std::move(g), divisor_partition(n)};
}

CompactGraph divisor_graph(std::int64_t n) {
    if (n < 2) throw std::domain_error("divisor_graph: n must be >= 2");
    const auto divisors = proper_divisors(n);
    CompactGraph g(static_cast<int>(divisors.size()));
    g.labels = divisors;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j)
            if (std::gcd(divisors[i], divisors[j]) == 1)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

CompactGraph comaximal_graph_structured(std::int64_t n, const RunConfig& cfg) {
    if (n < 2) throw std::domain_error("comaximal_graph_structured: n must be >= 2");
    check_capacity(n, cfg);

    const DivisorPartition part = divisor_partition(n);
    const CompactGraph quotient = divisor_graph(n);

    std::vector<std::int64_t> sizes;
    sizes.reserve(part.classes.size());
    for (const auto& cell : part.classes) sizes.push_back(static_cast<std::int64_t>(cell.members.size()));

    // unit clique joined onto ({0} union blown-up divisor graph)
    CompactGraph nonunits = disjoint_union(empty_graph(1), blow_up(quotient, sizes));
    CompactGraph assembled = join(complete_graph(static_cast<int>(part.units.size())), nonunits);

    // assembled order: units first, then 0, then the divisor classes in
    // ascending divisor order; map each slot back to its ring element
    std::vector<int> ring_of(static_cast<std::size_t>(assembled.order()));
    std::size_t slot = 0;
    for (auto u : part.units) ring_of[slot++] = static_cast<int>(u);
    ring_of[slot++] = 0;
    for (const auto& cell : part.classes)
        for (auto x : cell.members) ring_of[slot++] = static_cast<int>(x);

    CompactGraph g(assembled.order());
    g.labels.resize(static_cast<std::size_t>(assembled.order()));
    std::iota(g.labels.begin(), g.labels.end(), 0);
    for (int u = 0; u < assembled.order(); ++u)
        assembled.for_each_neighbor(u, [&](int v) {
            if (u < v) g.add_edge(ring_of[static_cast<std::size_t>(u)], ring_of[static_cast<std::size_t>(v)]);
        });
    return g;
}

}  // namespace comax
