#include <doctest.h>

#include <stdexcept>
#include <numeric>
#include <random>

#include "comax/errors.hpp"
#include "comax/graph.hpp"
#include "comax/number_theory.hpp"

using namespace comax;

TEST_CASE("comaximal graph of a prime is complete") {
    const auto built = comaximal_graph_direct(5);
    CHECK(built.graph.order() == 5);
    CHECK(built.graph.edge_count() == 10);
    for (int v = 0; v < 5; ++v) CHECK(built.graph.degree(v) == 4);
}

TEST_CASE("comaximal graph of Z_15") {
    const auto built = comaximal_graph_direct(15);
    CHECK(built.partition.units == std::vector<std::int64_t>{1, 2, 4, 7, 8, 11, 13, 14});
    for (auto u : built.partition.units) CHECK(built.graph.degree(static_cast<int>(u)) == 14);
}

TEST_CASE("vertex 0 is adjacent exactly to the units") {
    const auto built = comaximal_graph_direct(16);
    int zero_neighbors = 0;
    for (int v = 1; v < 16; ++v) {
        const bool unit = std::gcd(v, 16) == 1;
        CHECK(built.graph.adjacent(0, v) == unit);
        if (built.graph.adjacent(0, v)) ++zero_neighbors;
    }
    CHECK(zero_neighbors == 8);
}

TEST_CASE("divisor partition structure") {
    const DivisorPartition part = divisor_partition(16);
    REQUIRE(part.classes.size() == 3);
    CHECK(part.classes[0].divisor == 2);
    CHECK(part.classes[0].members == std::vector<std::int64_t>{2, 6, 10, 14});
    CHECK(part.classes[1].members == std::vector<std::int64_t>{4, 12});
    CHECK(part.classes[2].members == std::vector<std::int64_t>{8});

    // cells are disjoint and cover 0..n-1
    for (std::int64_t n = 2; n <= 60; ++n) {
        const DivisorPartition p = divisor_partition(n);
        std::vector<std::int64_t> all{p.zero};
        all.insert(all.end(), p.units.begin(), p.units.end());
        for (const auto& cell : p.classes) {
            CHECK(static_cast<std::int64_t>(cell.members.size()) == totient(n / cell.divisor));
            for (auto x : cell.members) CHECK(std::gcd(x, n) == cell.divisor);
            all.insert(all.end(), cell.members.begin(), cell.members.end());
        }
        std::sort(all.begin(), all.end());
        std::vector<std::int64_t> expected(static_cast<std::size_t>(n));
        std::iota(expected.begin(), expected.end(), 0);
        CHECK(all == expected);
        CHECK(static_cast<std::int64_t>(p.units.size()) == totient(n));
    }
}

TEST_CASE("divisor graph shapes") {
    const CompactGraph g16 = divisor_graph(16);
    CHECK(g16.order() == 3);
    CHECK(g16.edge_count() == 0);

    const CompactGraph g15 = divisor_graph(15);
    CHECK(g15.order() == 2);
    CHECK(g15.edge_count() == 1);

    // derived from the gcd table over {2,3,4,6,9,12,18}
    const CompactGraph g36 = divisor_graph(36);
    CHECK(g36.labels == std::vector<std::int64_t>{2, 3, 4, 6, 9, 12, 18});
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (int u = 0; u < g36.order(); ++u)
        for (int v = u + 1; v < g36.order(); ++v)
            if (g36.adjacent(u, v))
                edges.emplace_back(g36.labels[static_cast<std::size_t>(u)],
                                   g36.labels[static_cast<std::size_t>(v)]);
    CHECK(edges == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 9}, {3, 4}, {4, 9}});

    const CompactGraph g13 = divisor_graph(13);
    CHECK(g13.order() == 0);
}

TEST_CASE("blow-up") {
    // single edge with sizes [2,4] gives K_{2,4}
    CompactGraph edge(2);
    edge.add_edge(0, 1);
    const std::int64_t sizes24[] = {2, 4};
    const CompactGraph k24 = blow_up(edge, sizes24);
    CHECK(k24.order() == 6);
    CHECK(k24.edge_count() == 8);
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 6; ++v) CHECK(k24.adjacent(u, v));

    // blow-up of the divisor graph of 36 is K_{12,6} plus 5 isolated vertices
    const CompactGraph q = divisor_graph(36);
    std::vector<std::int64_t> sizes;
    for (auto d : q.labels) sizes.push_back(totient(36 / d));
    CHECK(sizes == std::vector<std::int64_t>{6, 4, 6, 2, 2, 2, 1});
    const CompactGraph g2 = blow_up(q, sizes);
    CHECK(g2.order() == 23);
    CHECK(g2.edge_count() == 72);  // 12 * 6
    int isolated = 0;
    for (int v = 0; v < g2.order(); ++v)
        if (g2.degree(v) == 0) ++isolated;
    CHECK(isolated == 5);

    // identity blow-up
    std::vector<std::int64_t> ones(static_cast<std::size_t>(q.order()), 1);
    CHECK(blow_up(q, ones) == q);

    const std::int64_t wrong[] = {1};
    CHECK_THROWS_AS(blow_up(edge, wrong), std::domain_error);
}

TEST_CASE("structured construction is vertex-for-vertex identical to direct") {
    for (std::int64_t n = 2; n <= 200; ++n)
        CHECK(comaximal_graph_structured(n) == comaximal_graph_direct(n).graph);
}

TEST_CASE("structured construction known degree facts") {
    CHECK(comaximal_graph_structured(7) == complete_graph(7));
    const CompactGraph g30 = comaximal_graph_structured(30);
    int universal = 0;
    for (int v = 0; v < 30; ++v)
        if (g30.degree(v) == 29) ++universal;
    CHECK(universal == 8);
}

TEST_CASE("unit and zero degrees over a range") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        const auto built = comaximal_graph_direct(n);
        for (auto u : built.partition.units)
            CHECK(built.graph.degree(static_cast<int>(u)) == static_cast<int>(n) - 1);
        CHECK(built.graph.degree(0) == static_cast<int>(totient(n)));
        // each divisor class is an independent set
        for (const auto& cell : built.partition.classes)
            for (std::size_t i = 0; i < cell.members.size(); ++i)
                for (std::size_t j = i + 1; j < cell.members.size(); ++j)
                    CHECK(!built.graph.adjacent(static_cast<int>(cell.members[i]),
                                                static_cast<int>(cell.members[j])));
    }
}

TEST_CASE("generic graph operations") {
    CHECK(complement(complete_graph(6)) == empty_graph(6));
    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    const CompactGraph u = disjoint_union(complete_graph(2), complete_graph(3));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> order_dist(1, 64);
        const int order = order_dist(rng);
        CompactGraph g(order);
        std::bernoulli_distribution edge_dist(0.3);
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (edge_dist(rng)) g.add_edge(a, b);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("capacity limit") {
    RunConfig small;
    small.vertex_capacity = 100;
    CHECK_THROWS_AS(comaximal_graph_direct(101, small), capacity_error);
    CHECK_THROWS_AS(comaximal_graph_structured(101, small), capacity_error);
    CHECK_NOTHROW(comaximal_graph_direct(100, small));
}
