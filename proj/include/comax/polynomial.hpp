#ifndef COMAX_POLYNOMIAL_HPP
#define COMAX_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "comax/bigint.hpp"

namespace comax {

/// Sparse univariate polynomial with exact integer coefficients.
/// Invariant: no stored coefficient is zero.  Values are immutable in spirit;
/// every operation returns a fresh polynomial.
class IntPolynomial {
public:
    using Terms = std::map<std::int64_t, BigInt>;

    /// Degree sentinel for the zero polynomial.
    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    IntPolynomial() = default;

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(std::int64_t exponent, BigInt coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }

    /// Smallest exponent present; the exact multiplicity of the zero root.
    /// Domain error on the zero polynomial.
    std::int64_t min_exponent() const;

    /// Coefficient of x^exponent (zero if absent).
    BigInt coefficient(std::int64_t exponent) const;

    /// Inserts or erases a term, preserving the no-zero-coefficients invariant.
    void set_coefficient(std::int64_t exponent, BigInt value);

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    Terms terms_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, const BigInt& c);

/// p * x^k (k >= 0).
IntPolynomial shift(const IntPolynomial& p, std::int64_t k);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return subtract(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return multiply(p, q); }

/// (1 + x)^k with exact binomial coefficients, k <= 10^6.
IntPolynomial binomial_power(std::int64_t k);

/// Densification bound: analysis works on full coefficient vectors, so refuse
/// degrees that cannot sensibly be expanded in memory.
constexpr std::int64_t kDenseLimit = std::int64_t{1} << 22;

/// Coefficients a_0..a_deg including interior zeros.  Domain error on the
/// zero polynomial; capacity error past kDenseLimit.
std::vector<BigInt> dense_coefficients(const IntPolynomial& p);

/// Horner evaluation over the densified sequence in extended precision.
std::complex<long double> evaluate(const IntPolynomial& p, std::complex<long double> z);

/// Human-readable form, ascending exponents ("8x + x^6 + x^8").
std::string to_string(const IntPolynomial& p);

}  // namespace comax

#endif
