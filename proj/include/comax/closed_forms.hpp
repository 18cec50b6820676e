#ifndef COMAX_CLOSED_FORMS_HPP
#define COMAX_CLOSED_FORMS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comax/number_theory.hpp"
#include "comax/polynomial.hpp"

namespace comax {

/// Dispatch key for every closed form: the multiset of exponents of the
/// factorization, never coefficient magnitudes.
enum class FactorShape {
    prime,                 // p
    prime_power,           // p^m, m >= 2
    two_primes,            // pq
    two_primes_general,    // p^a q^b, a+b >= 3
    three_primes,          // pqr
    three_primes_general,  // p^a q^b r^c, a+b+c >= 4
    generic,               // four or more distinct primes
};

FactorShape classify(const Factorization& fac);
std::string shape_name(FactorShape shape);

struct FormulaResult {
    IntPolynomial polynomial;
    FactorShape shape;
    std::string provenance;
    std::vector<std::string> discrepancy_notes;
};

/// Closed-form independent domination polynomial for up to three distinct
/// primes.  For the general three-prime shape the non-unit exponents come
/// from the underlying set cardinalities (the displayed variant of that
/// formula disagrees with them; see di_closed_form_printed).
FormulaResult di_closed_form(std::int64_t n);

/// Literal displayed formulas, kept as an executable record.  Differs from
/// di_closed_form only on the general three-prime shape, where it shifts the
/// non-unit exponents instead of scaling them; a discrepancy note flags this.
FormulaResult di_closed_form_printed(std::int64_t n);

/// Independent domination polynomial of the comaximal graph for any n with
/// tau(n) - 2 <= 30, computed over the divisor quotient graph: unit
/// singletons, the forced isolated block, and one term per maximal
/// independent set of the quotient core weighted by its blown-up size.
IntPolynomial di_structured(std::int64_t n);

/// Closed-form independence polynomial for n in {p, p^m, pq, p^a q^b}.
/// The two-prime general shape uses the exponents of the structural
/// derivation; the printed variant's exponents exceed the graph order.
FormulaResult independence_closed_form(std::int64_t n);
FormulaResult independence_closed_form_printed(std::int64_t n);

/// Independence polynomial of the comaximal graph for any n with
/// tau(n) - 2 <= 30, via the blow-up identity: independent sets of the
/// quotient contribute products of ((1+x)^cell - 1).
IntPolynomial independence_structured(std::int64_t n);

/// Composition laws for independence polynomials (constant term must be 1):
/// disjoint union multiplies, join adds and drops one shared empty set.
IntPolynomial independence_union(const IntPolynomial& p1, const IntPolynomial& p2);
IntPolynomial independence_join(const IntPolynomial& p1, const IntPolynomial& p2);

/// Composition laws for independent domination polynomials (constant term
/// must be zero: independent dominating sets are nonempty).
IntPolynomial di_union(std::span<const IntPolynomial> components);
IntPolynomial di_join(const IntPolynomial& p1, const IntPolynomial& p2);

}  // namespace comax

#endif
