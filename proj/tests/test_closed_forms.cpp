#include <doctest.h>

#include <stdexcept>
#include <random>

#include "comax/closed_forms.hpp"
#include "comax/enumeration.hpp"
#include "comax/errors.hpp"
#include "comax/graph.hpp"
#include "comax/number_theory.hpp"

using namespace comax;

namespace {

IntPolynomial sparse(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    IntPolynomial p;
    for (auto [e, c] : terms) p.set_coefficient(e, c);
    return p;
}

IntPolynomial di_oracle(std::int64_t n, int limit = 150) {
    RunConfig cfg;
    cfg.vertex_capacity = std::max(cfg.vertex_capacity, limit);
    return to_polynomial(maximal_independent_sets(comaximal_graph_direct(n, cfg).graph, limit));
}

IntPolynomial independence_oracle(std::int64_t n, int limit = 100) {
    RunConfig cfg;
    cfg.vertex_capacity = std::max(cfg.vertex_capacity, limit);
    return to_polynomial(independent_sets_by_size(comaximal_graph_direct(n, cfg).graph, limit));
}

}  // namespace

TEST_CASE("shape classification") {
    CHECK(classify(factorize(5)) == FactorShape::prime);
    CHECK(classify(factorize(16)) == FactorShape::prime_power);
    CHECK(classify(factorize(15)) == FactorShape::two_primes);
    CHECK(classify(factorize(36)) == FactorShape::two_primes_general);
    CHECK(classify(factorize(30)) == FactorShape::three_primes);
    CHECK(classify(factorize(60)) == FactorShape::three_primes_general);
    CHECK(classify(factorize(210)) == FactorShape::generic);
}

TEST_CASE("independent domination closed forms match the worked examples") {
    CHECK(di_closed_form(5).polynomial == sparse({{1, 5}}));
    CHECK(di_closed_form(15).polynomial == sparse({{1, 8}, {3, 1}, {5, 1}}));
    CHECK(di_closed_form(16).polynomial == sparse({{1, 8}, {8, 1}}));
    CHECK(di_closed_form(30).polynomial == sparse({{1, 8}, {6, 1}, {8, 1}, {10, 1}, {15, 1}}));
    CHECK(di_closed_form(36).polynomial == sparse({{1, 12}, {12, 1}, {18, 1}}));
}

TEST_CASE("three-prime general shape: derivation-based exponents, oracle-certified") {
    // 60 = 2^2*3*5: S = 2, exponents S*(p+q+r-2)=16, S*pq=12, S*pr=20, S*qr=30
    const FormulaResult r = di_closed_form(60);
    CHECK(r.polynomial == sparse({{1, 16}, {12, 1}, {16, 1}, {20, 1}, {30, 1}}));
    CHECK(r.shape == FactorShape::three_primes_general);
    CHECK_FALSE(r.discrepancy_notes.empty());
    CHECK(r.polynomial == di_oracle(60));

    // the literal displayed variant shifts instead of scaling and must differ
    const FormulaResult printed = di_closed_form_printed(60);
    CHECK(printed.polynomial == sparse({{1, 16}, {10, 1}, {8, 1}, {12, 1}, {17, 1}}));
    CHECK(printed.polynomial != r.polynomial);
    CHECK_FALSE(printed.discrepancy_notes.empty());
}

TEST_CASE("discrepancy notes appear exactly on the two conflicting shapes") {
    CHECK(di_closed_form(5).discrepancy_notes.empty());
    CHECK(di_closed_form(16).discrepancy_notes.empty());
    CHECK(di_closed_form(15).discrepancy_notes.empty());
    CHECK(di_closed_form(36).discrepancy_notes.empty());
    CHECK(di_closed_form(30).discrepancy_notes.empty());
    CHECK_FALSE(di_closed_form(60).discrepancy_notes.empty());

    CHECK(independence_closed_form(7).discrepancy_notes.empty());
    CHECK(independence_closed_form(32).discrepancy_notes.empty());
    CHECK(independence_closed_form(15).discrepancy_notes.empty());
    CHECK_FALSE(independence_closed_form(36).discrepancy_notes.empty());
}

TEST_CASE("di_structured matches examples and generalizes past three primes") {
    CHECK(di_structured(30) == sparse({{1, 8}, {6, 1}, {8, 1}, {10, 1}, {15, 1}}));
    CHECK(di_structured(16) == sparse({{1, 8}, {8, 1}}));
    // four distinct primes: no closed form, oracle run at n = 210
    CHECK_THROWS_AS(di_closed_form(210), unsupported_shape_error);
    CHECK(di_structured(210) == di_oracle(210, 210));
}

TEST_CASE("di_structured equals the enumeration oracle for every n up to 150") {
    for (std::int64_t n = 2; n <= 150; ++n) CHECK(di_structured(n) == di_oracle(n));
}

TEST_CASE("independence closed forms match the printed expansions") {
    const IntPolynomial i77 = independence_closed_form(77).polynomial;
    const long expected77[] = {1, 77, 76, 200, 365, 483, 469, 331, 165, 55, 11, 1};
    CHECK(i77.degree() == 11);
    for (int k = 0; k <= 11; ++k) CHECK(i77.coefficient(k) == expected77[k]);

    const IntPolynomial i32 = independence_closed_form(32).polynomial;
    const long expected32[] = {1,    32,   120,  560,  1820, 4368, 8008, 11440, 12870,
                               11440, 8008, 4368, 1820, 560,  120,  16,   1};
    CHECK(i32.degree() == 16);
    for (int k = 0; k <= 16; ++k) CHECK(i32.coefficient(k) == expected32[k]);
}

TEST_CASE("independence closed form for two-prime general shape") {
    // 36: phi(36)x + (1+x)^18 + (1+x)^12 - (1+x)^6
    const IntPolynomial expected =
        subtract(add(add(IntPolynomial::monomial(1, 12), binomial_power(18)), binomial_power(12)),
                 binomial_power(6));
    CHECK(independence_closed_form(36).polynomial == expected);
    CHECK(independence_closed_form(36).polynomial == independence_oracle(36));

    // printed variant blows past the graph order (exponent 72 > 36) and differs
    const FormulaResult printed = independence_closed_form_printed(36);
    CHECK(printed.polynomial.degree() == 72);
    CHECK(printed.polynomial != independence_closed_form(36).polynomial);

    CHECK_THROWS_AS(independence_closed_form(30), unsupported_shape_error);
}

TEST_CASE("independence structured matches shape formulas and oracle") {
    // p^m
    CHECK(independence_structured(16) ==
          add(IntPolynomial::monomial(1, 8), binomial_power(8)));
    // pq instantiated at 15, verified against the oracle
    const IntPolynomial i15 = subtract(
        add(add(IntPolynomial::monomial(1, 7), binomial_power(3)), binomial_power(5)),
        IntPolynomial::constant(1));
    CHECK(independence_structured(15) == i15);
    CHECK(independence_structured(15) == independence_oracle(15));
    // four primes exceeds the direct-oracle default at 210; validate at 105
    CHECK(independence_structured(105) == independence_oracle(105, 105));
}

TEST_CASE("independence_structured equals the counting oracle for every n up to 100") {
    for (std::int64_t n = 2; n <= 100; ++n)
        CHECK(independence_structured(n) == independence_oracle(n));
}

TEST_CASE("closed and structured agree on every supported shape up to 2000") {
    for (std::int64_t n = 2; n <= 2000; ++n) {
        const FactorShape shape = classify(factorize(n));
        if (shape == FactorShape::generic) continue;
        if (tau(n) - 2 > 30) continue;  // structured quotient bound
        CHECK(di_closed_form(n).polynomial == di_structured(n));
        if (shape == FactorShape::prime || shape == FactorShape::prime_power ||
            shape == FactorShape::two_primes || shape == FactorShape::two_primes_general)
            CHECK(independence_closed_form(n).polynomial == independence_structured(n));
    }
}

TEST_CASE("di polynomials of odd two-prime products are divisible by x with zero constant") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) {
        for (std::int64_t q : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            if (q <= p) continue;
            const IntPolynomial di = di_closed_form(p * q).polynomial;
            CHECK(di.coefficient(0) == 0);
            CHECK(di.min_exponent() >= 1);
        }
    }
}

TEST_CASE("linear coefficients count singletons and universal vertices") {
    for (std::int64_t n = 2; n <= 500; ++n) {
        if (tau(n) - 2 > 30) continue;
        CHECK(independence_structured(n).coefficient(1) == n);
        // units are the only universal vertices except when every nonzero
        // element is one (n prime or 2), where 0 is universal too
        const BigInt expected_d1 = is_prime(n) || n == 2 ? BigInt(n) : BigInt(totient(n));
        CHECK(di_structured(n).coefficient(1) == expected_d1);
    }
}

TEST_CASE("composition laws") {
    const IntPolynomial k_a = add(IntPolynomial::constant(1), IntPolynomial::monomial(1, 4));
    const IntPolynomial k_b = add(IntPolynomial::constant(1), IntPolynomial::monomial(1, 9));
    CHECK(independence_join(k_a, k_b) ==
          add(IntPolynomial::constant(1), IntPolynomial::monomial(1, 13)));

    CHECK(independence_union(binomial_power(2), binomial_power(3)) == binomial_power(5));

    // join of two empty graphs is complete bipartite
    const IntPolynomial lhs = independence_join(binomial_power(2), binomial_power(4));
    CHECK(lhs == subtract(add(binomial_power(2), binomial_power(4)), IntPolynomial::constant(1)));

    CHECK_THROWS_AS(independence_join(IntPolynomial::monomial(1, 3), k_a), std::domain_error);
    CHECK_THROWS_AS(independence_union(IntPolynomial::monomial(1, 3), k_a), std::domain_error);

    // di laws: join adds, union multiplies
    IntPolynomial f;  // x * (2 + x)
    f.set_coefficient(1, 2);
    f.set_coefficient(2, 1);
    CHECK(di_join(IntPolynomial::monomial(1, 5), f) == sparse({{1, 7}, {2, 1}}));
    const IntPolynomial x = IntPolynomial::monomial(1);
    const IntPolynomial components[] = {x, x};
    CHECK(di_union(components) == IntPolynomial::monomial(2));
    CHECK_THROWS_AS(di_join(IntPolynomial::constant(3), f), std::domain_error);
}

TEST_CASE("structured capacity bound") {
    // 2^31 has 30 proper divisors, right at the quotient bound
    CHECK_NOTHROW(di_structured(std::int64_t{1} << 31));
    // 1440 = 2^5*3^2*5 has tau - 2 = 34
    CHECK_THROWS_AS(di_structured(1440), capacity_error);
    CHECK_THROWS_AS(independence_structured(1440), capacity_error);
}

TEST_CASE("composition laws validated against oracles on random graph pairs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> order_dist(1, 12);
    std::bernoulli_distribution edge_dist(0.4);
    auto random_graph = [&]() {
        CompactGraph g(order_dist(rng));
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                if (edge_dist(rng)) g.add_edge(a, b);
        return g;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const CompactGraph g1 = random_graph(), g2 = random_graph();
        const IntPolynomial i1 = to_polynomial(independent_sets_by_size(g1));
        const IntPolynomial i2 = to_polynomial(independent_sets_by_size(g2));
        CHECK(independence_union(i1, i2) ==
              to_polynomial(independent_sets_by_size(disjoint_union(g1, g2))));
        CHECK(independence_join(i1, i2) ==
              to_polynomial(independent_sets_by_size(join(g1, g2))));
    }
}
