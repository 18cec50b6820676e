#include "comax/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "comax/errors.hpp"

namespace comax {

IntPolynomial IntPolynomial::constant(BigInt c) { return monomial(0, std::move(c)); }

IntPolynomial IntPolynomial::monomial(std::int64_t exponent, BigInt coefficient) {
    if (exponent < 0) throw std::domain_error("IntPolynomial: negative exponent");
    IntPolynomial p;
    if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
    return p;
}

std::int64_t IntPolynomial::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent: zero polynomial");
    return terms_.begin()->first;
}

BigInt IntPolynomial::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::set_coefficient(std::int64_t exponent, BigInt value) {
    if (exponent < 0) throw std::domain_error("IntPolynomial: negative exponent");
    if (value == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(value);
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial result = p;
    for (const auto& [e, c] : q.terms()) result.set_coefficient(e, result.coefficient(e) + c);
    return result;
}

IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial result = p;
    for (const auto& [e, c] : q.terms()) result.set_coefficient(e, result.coefficient(e) - c);
    return result;
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial result;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms())
            result.set_coefficient(ep + eq, result.coefficient(ep + eq) + cp * cq);
    return result;
}

IntPolynomial scale(const IntPolynomial& p, const BigInt& c) {
    IntPolynomial result;
    if (c == 0) return result;
    for (const auto& [e, coeff] : p.terms()) result.set_coefficient(e, coeff * c);
    return result;
}

IntPolynomial shift(const IntPolynomial& p, std::int64_t k) {
    if (k < 0) throw std::domain_error("shift: k must be non-negative");
    IntPolynomial result;
    for (const auto& [e, c] : p.terms()) result.set_coefficient(e + k, c);
    return result;
}

IntPolynomial binomial_power(std::int64_t k) {
    if (k < 0) throw std::domain_error("binomial_power: k must be non-negative");
    if (k > 1'000'000) throw capacity_error("binomial_power: k exceeds 10^6");
    IntPolynomial p;
    BigInt c = 1;
    for (std::int64_t i = 0; i <= k / 2; ++i) {
        p.set_coefficient(i, c);
        p.set_coefficient(k - i, c);
        // C(k, i+1) = C(k, i) * (k - i) / (i + 1), division exact
        c *= k - i;
        c /= i + 1;
    }
    return p;
}

std::vector<BigInt> dense_coefficients(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("dense_coefficients: zero polynomial");
    const std::int64_t deg = p.degree();
    if (deg > kDenseLimit)
        throw capacity_error("dense_coefficients: degree " + std::to_string(deg) +
                             " exceeds dense expansion limit");
    std::vector<BigInt> dense(static_cast<std::size_t>(deg) + 1);
    for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e)] = c;
    return dense;
}

std::complex<long double> evaluate(const IntPolynomial& p, std::complex<long double> z) {
    if (p.is_zero()) return {0.0L, 0.0L};
    const auto dense = dense_coefficients(p);
    std::complex<long double> acc{0.0L, 0.0L};
    for (auto it = dense.rbegin(); it != dense.rend(); ++it)
        acc = acc * z + std::complex<long double>(it->convert_to<long double>(), 0.0L);
    return acc;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0 || mag != 1) out << mag.str();
        if (e >= 1) out << "x";
        if (e >= 2) out << "^" << e;
    }
    return out.str();
}

}  // namespace comax
