#include <doctest.h>

#include <cmath>
#include <random>

#include "comax/errors.hpp"
#include "comax/polynomial.hpp"

using namespace comax;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree = 50) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-1'000'000, 1'000'000);
    IntPolynomial p;
    const int degree = deg_dist(rng);
    for (int e = 0; e <= degree; ++e) p.set_coefficient(e, coeff_dist(rng));
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const IntPolynomial x = IntPolynomial::monomial(1);
    CHECK(add(x, scale(x, -1)).is_zero());

    const IntPolynomial one_plus_x = add(IntPolynomial::constant(1), x);
    IntPolynomial sq = multiply(one_plus_x, one_plus_x);
    CHECK(sq.coefficient(0) == 1);
    CHECK(sq.coefficient(1) == 2);
    CHECK(sq.coefficient(2) == 1);
    CHECK(sq.degree() == 2);
}

TEST_CASE("factored independent domination polynomial expands correctly") {
    // x * (pq - p - q + 1 + x^(p-1) + x^(q-1)) at p=3, q=5
    IntPolynomial h = IntPolynomial::constant(8);
    h.set_coefficient(2, 1);
    h.set_coefficient(4, 1);
    const IntPolynomial product = multiply(IntPolynomial::monomial(1), h);

    IntPolynomial expected;
    expected.set_coefficient(1, 8);
    expected.set_coefficient(3, 1);
    expected.set_coefficient(5, 1);
    CHECK(product == expected);
}

TEST_CASE("binomial powers") {
    CHECK(binomial_power(0) == IntPolynomial::constant(1));

    const IntPolynomial b16 = binomial_power(16);
    CHECK(b16.coefficient(0) == 1);
    CHECK(b16.coefficient(1) == 16);
    CHECK(b16.coefficient(2) == 120);
    CHECK(b16.coefficient(3) == 560);
    CHECK(b16.coefficient(4) == 1820);

    // recompute row 7 by the additive Pascal recurrence
    std::vector<BigInt> row{1};
    for (int i = 0; i < 7; ++i) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    const IntPolynomial b7 = binomial_power(7);
    for (std::size_t j = 0; j < row.size(); ++j) CHECK(b7.coefficient(static_cast<std::int64_t>(j)) == row[j]);

    CHECK_THROWS_AS(binomial_power(1'000'001), capacity_error);
    CHECK_THROWS_AS(binomial_power(-1), std::domain_error);
}

TEST_CASE("binomial power multiplicativity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(0, 200);
    for (int trial = 0; trial < 25; ++trial) {
        const int a = dist(rng), b = dist(rng);
        CHECK(multiply(binomial_power(a), binomial_power(b)) == binomial_power(a + b));
    }
}

TEST_CASE("evaluation") {
    CHECK(evaluate(IntPolynomial::monomial(1, 5), {1.0L, 0.0L}).real() == 5.0L);

    IntPolynomial di;  // 8x + x^3 + x^5
    di.set_coefficient(1, 8);
    di.set_coefficient(3, 1);
    di.set_coefficient(5, 1);
    CHECK(std::abs(evaluate(di, {0.0L, 0.0L})) == 0.0L);

    IntPolynomial sq;  // (1+x)^2 at -1
    sq.set_coefficient(0, 1);
    sq.set_coefficient(1, 2);
    sq.set_coefficient(2, 1);
    CHECK(std::abs(evaluate(sq, {-1.0L, 0.0L})) == 0.0L);
}

TEST_CASE("dense coefficients include interior zeros") {
    IntPolynomial p;  // 6x + x^3
    p.set_coefficient(1, 6);
    p.set_coefficient(3, 1);
    CHECK(dense_coefficients(p) == std::vector<BigInt>{0, 6, 0, 1});

    IntPolynomial q;  // 1 + px
    q.set_coefficient(0, 1);
    q.set_coefficient(1, 7);
    CHECK(dense_coefficients(q) == std::vector<BigInt>{1, 7});

    IntPolynomial d36;  // 12x + x^12 + x^18
    d36.set_coefficient(1, 12);
    d36.set_coefficient(12, 1);
    d36.set_coefficient(18, 1);
    const auto dense = dense_coefficients(d36);
    CHECK(dense.size() == 19);
    CHECK(std::count_if(dense.begin(), dense.end(), [](const BigInt& c) { return c != 0; }) == 3);

    CHECK_THROWS_AS(dense_coefficients(IntPolynomial{}), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const IntPolynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(add(p, q) == add(q, p));
        CHECK(multiply(p, q) == multiply(q, p));
        CHECK(add(add(p, q), r) == add(p, add(q, r)));
        CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
        CHECK(multiply(p, add(q, r)) == add(multiply(p, q), multiply(p, r)));
    }
}

TEST_CASE("evaluation is multiplicative within tolerance") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> re_dist(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const IntPolynomial p = random_poly(rng, 20), q = random_poly(rng, 20);
        double re = re_dist(rng), im = re_dist(rng);
        const double norm = std::hypot(re, im);
        if (norm > 2.0) {
            re = re * 2.0 / norm;
            im = im * 2.0 / norm;
        }
        const std::complex<long double> z{re, im};
        const auto lhs = evaluate(multiply(p, q), z);
        const auto rhs = evaluate(p, z) * evaluate(q, z);
        const long double scale = std::max<long double>(1.0L, std::abs(rhs));
        CHECK(std::abs(lhs - rhs) / scale < 1e-10L);
    }
}

TEST_CASE("to_string formatting") {
    IntPolynomial p;
    p.set_coefficient(1, 8);
    p.set_coefficient(6, 1);
    p.set_coefficient(8, 1);
    CHECK(to_string(p) == "8x + x^6 + x^8");
    CHECK(to_string(IntPolynomial{}) == "0");
    IntPolynomial q;
    q.set_coefficient(0, 1);
    q.set_coefficient(1, -2);
    CHECK(to_string(q) == "1 - 2x");
}
