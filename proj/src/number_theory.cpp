#include "comax/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace comax {

bool Factorization::is_squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::int64_t Factorization::squarefull_part() const {
    std::int64_t result = 1;
    for (const auto& [p, e] : factors)
        for (int i = 1; i < e; ++i) result *= p;
    return result;
}

Factorization factorize(std::int64_t n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2, got " + std::to_string(n));
    Factorization fac{n, {}};
    std::int64_t m = n;
    auto strip = [&](std::int64_t p) {
        if (m % p != 0) return;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        fac.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    // remaining candidates are 6k +- 1
    for (std::int64_t p = 5; p <= m / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) fac.factors.push_back({m, 1});
    return fac;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t p = 5; p <= n / p; p += 6)
        if (n % p == 0 || n % (p + 2) == 0) return false;
    return true;
}

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::domain_error("totient: n must be >= 1");
    if (n == 1) return 1;
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n).factors) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

std::int64_t tau(std::int64_t n) {
    if (n < 1) throw std::domain_error("tau: n must be >= 1");
    if (n == 1) return 1;
    std::int64_t count = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        (void)p;
        count *= e + 1;
    }
    return count;
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
    if (n < 2) throw std::domain_error("proper_divisors: n must be >= 2");
    std::vector<std::int64_t> divisors{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t base = divisors.size();
        std::int64_t power = 1;
        for (int i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    // drop 1 and n
    return {divisors.begin() + 1, divisors.end() - 1};
}

std::int64_t class_cardinality(std::int64_t n, std::int64_t d) {
    if (n < 2) throw std::domain_error("class_cardinality: n must be >= 2");
    if (d < 1 || n % d != 0)
        throw std::domain_error("class_cardinality: d = " + std::to_string(d) +
                                " does not divide n = " + std::to_string(n));
    if (d == 1 || d == n)
        throw std::domain_error("class_cardinality: d must be a proper divisor");
    return totient(n / d);
}

}  // namespace comax
