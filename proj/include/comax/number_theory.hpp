#ifndef COMAX_NUMBER_THEORY_HPP
#define COMAX_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

namespace comax {

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition of n, primes strictly increasing.
struct Factorization {
    std::int64_t n = 0;
    std::vector<PrimePower> factors;

    int distinct_primes() const { return static_cast<int>(factors.size()); }
    bool is_prime() const { return factors.size() == 1 && factors[0].exponent == 1; }
    bool is_squarefree() const;

    /// Product of p_i^(e_i - 1); the order of the forced isolated block of
    /// the comaximal graph's non-unit part.
    std::int64_t squarefull_part() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic trial-division factorization, 2 <= n <= 2^63-1.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/// Euler's totient, n >= 1, exact.
std::int64_t totient(std::int64_t n);

/// Number of positive divisors, n >= 1.
std::int64_t tau(std::int64_t n);

/// All divisors d of n with d not in {1, n}, strictly increasing.
/// Length is tau(n) - 2; empty for primes is not permitted here (n >= 2 and
/// the prime case simply yields an empty list).
std::vector<std::int64_t> proper_divisors(std::int64_t n);

/// |A_d| = phi(n/d) for a proper divisor d of n.
std::int64_t class_cardinality(std::int64_t n, std::int64_t d);

}  // namespace comax

#endif
