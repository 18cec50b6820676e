#include "comax/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "comax/enumeration.hpp"
#include "comax/errors.hpp"
#include "comax/graph.hpp"

namespace comax {

namespace {

constexpr int kQuotientLimit = 30;

const char* kThreePrimeNote =
    "general three-prime formula: the displayed variant multiplies the non-unit tail by x^S "
    "(S = product of p_i^(e_i - 1)), shifting each exponent by S; the underlying set "
    "cardinalities scale the exponents by S instead, and the two disagree whenever S > 1";

const char* kTwoPrimeIndependenceNote =
    "general two-prime independence formula: the displayed binomial exponents square the "
    "p^(a-1)q^(b-1) block size and can exceed the graph order; the structural derivation "
    "gives exponents p^(a-1)q^b, p^a q^(b-1) and p^(a-1)q^(b-1)";

IntPolynomial monomial_x(const BigInt& coeff) { return IntPolynomial::monomial(1, coeff); }

std::int64_t pow_i64(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

FactorShape classify(const Factorization& fac) {
    const int r = fac.distinct_primes();
    const bool squarefree = fac.is_squarefree();
    switch (r) {
        case 1: return squarefree ? FactorShape::prime : FactorShape::prime_power;
        case 2: return squarefree ? FactorShape::two_primes : FactorShape::two_primes_general;
        case 3: return squarefree ? FactorShape::three_primes : FactorShape::three_primes_general;
        default: return FactorShape::generic;
    }
}

std::string shape_name(FactorShape shape) {
    switch (shape) {
        case FactorShape::prime: return "prime";
        case FactorShape::prime_power: return "prime_power";
        case FactorShape::two_primes: return "pq";
        case FactorShape::two_primes_general: return "p^aq^b";
        case FactorShape::three_primes: return "pqr";
        case FactorShape::three_primes_general: return "p^aq^br^c";
        case FactorShape::generic: return "generic";
    }
    return "generic";
}

namespace {

FormulaResult di_closed_impl(std::int64_t n, bool printed) {
    const Factorization fac = factorize(n);
    const FactorShape shape = classify(fac);
    const std::int64_t phi = totient(n);

    FormulaResult result;
    result.shape = shape;

    switch (shape) {
        case FactorShape::prime: {
            result.polynomial = monomial_x(n);
            result.provenance = "clique on the whole ring";
            break;
        }
        case FactorShape::prime_power: {
            const auto [p, m] = fac.factors[0];
            result.polynomial = add(monomial_x(phi), IntPolynomial::monomial(pow_i64(p, m - 1)));
            result.provenance = "prime power: unit singletons plus the non-unit block";
            break;
        }
        case FactorShape::two_primes: {
            const std::int64_t p = fac.factors[0].prime, q = fac.factors[1].prime;
            result.polynomial = add(add(monomial_x(phi), IntPolynomial::monomial(p)),
                                    IntPolynomial::monomial(q));
            result.provenance = "squarefree two primes";
            break;
        }
        case FactorShape::two_primes_general: {
            const auto [p, a] = fac.factors[0];
            const auto [q, b] = fac.factors[1];
            result.polynomial = add(add(monomial_x(phi),
                                        IntPolynomial::monomial(pow_i64(p, a) * pow_i64(q, b - 1))),
                                    IntPolynomial::monomial(pow_i64(p, a - 1) * pow_i64(q, b)));
            result.provenance = "general two primes";
            break;
        }
        case FactorShape::three_primes:
        case FactorShape::three_primes_general: {
            const std::int64_t p = fac.factors[0].prime, q = fac.factors[1].prime,
                               r = fac.factors[2].prime;
            const std::int64_t s = fac.squarefull_part();
            IntPolynomial poly = monomial_x(phi);
            const std::int64_t tails[4] = {p + q + r - 2, p * q, p * r, q * r};
            for (auto t : tails) {
                // displayed variant shifts by s, the set cardinalities scale by s
                const std::int64_t e = printed && shape == FactorShape::three_primes_general
                                           ? s + t
                                           : s * t;
                poly = add(poly, IntPolynomial::monomial(e));
            }
            result.polynomial = poly;
            if (shape == FactorShape::three_primes) {
                result.provenance = "squarefree three primes";
            } else {
                result.provenance = printed ? "general three primes (displayed variant)"
                                            : "general three primes (set cardinalities)";
                result.discrepancy_notes.push_back(kThreePrimeNote);
            }
            break;
        }
        case FactorShape::generic:
            throw unsupported_shape_error(
                "di_closed_form: more than three distinct primes; use di_structured");
    }
    return result;
}

}  // namespace

FormulaResult di_closed_form(std::int64_t n) { return di_closed_impl(n, false); }
FormulaResult di_closed_form_printed(std::int64_t n) { return di_closed_impl(n, true); }

namespace {

FormulaResult independence_closed_impl(std::int64_t n, bool printed) {
    const Factorization fac = factorize(n);
    const FactorShape shape = classify(fac);
    const std::int64_t phi = totient(n);

    FormulaResult result;
    result.shape = shape;

    switch (shape) {
        case FactorShape::prime: {
            result.polynomial = add(IntPolynomial::constant(1), monomial_x(n));
            result.provenance = "clique on the whole ring";
            break;
        }
        case FactorShape::prime_power: {
            const auto [p, m] = fac.factors[0];
            result.polynomial = add(monomial_x(phi), binomial_power(pow_i64(p, m - 1)));
            result.provenance = "prime power";
            break;
        }
        case FactorShape::two_primes: {
            const std::int64_t p = fac.factors[0].prime, q = fac.factors[1].prime;
            result.polynomial = subtract(
                add(add(monomial_x(phi - 1), binomial_power(p)), binomial_power(q)),
                IntPolynomial::constant(1));
            result.provenance = "squarefree two primes";
            break;
        }
        case FactorShape::two_primes_general: {
            const auto [p, a] = fac.factors[0];
            const auto [q, b] = fac.factors[1];
            if (printed) {
                const std::int64_t s2 =
                    pow_i64(p, 2 * (a - 1)) * pow_i64(q, 2 * (b - 1));
                result.polynomial =
                    subtract(add(add(monomial_x(phi), binomial_power(s2 * (q - 1))),
                                 binomial_power(s2 * (p - 1))),
                             binomial_power(pow_i64(p, a - 1) * pow_i64(q, b - 1)));
                result.provenance = "general two primes (displayed variant)";
            } else {
                result.polynomial =
                    subtract(add(add(monomial_x(phi),
                                     binomial_power(pow_i64(p, a - 1) * pow_i64(q, b))),
                                 binomial_power(pow_i64(p, a) * pow_i64(q, b - 1))),
                             binomial_power(pow_i64(p, a - 1) * pow_i64(q, b - 1)));
                result.provenance = "general two primes (structural derivation)";
            }
            result.discrepancy_notes.push_back(kTwoPrimeIndependenceNote);
            break;
        }
        default:
            throw unsupported_shape_error(
                "independence_closed_form: supported shapes are p, p^m, pq, p^a q^b; "
                "use independence_structured");
    }
    return result;
}

}  // namespace

FormulaResult independence_closed_form(std::int64_t n) { return independence_closed_impl(n, false); }
FormulaResult independence_closed_form_printed(std::int64_t n) {
    return independence_closed_impl(n, true);
}

namespace {

struct Quotient {
    CompactGraph graph;               // divisor graph
    std::vector<std::int64_t> sizes;  // blown-up cell sizes phi(n/d)
    std::vector<int> core;            // non-isolated quotient vertices
    std::int64_t isolated_cells = 0;  // blown-up vertices living in isolated cells
};

Quotient build_quotient(std::int64_t n) {
    if (n < 2) throw std::domain_error("structured computation: n must be >= 2");
    if (tau(n) - 2 > kQuotientLimit)
        throw capacity_error("structured computation: divisor quotient larger than " +
                             std::to_string(kQuotientLimit) + " vertices");
    Quotient q;
    q.graph = divisor_graph(n);
    q.sizes.reserve(static_cast<std::size_t>(q.graph.order()));
    for (int v = 0; v < q.graph.order(); ++v)
        q.sizes.push_back(totient(n / q.graph.labels[static_cast<std::size_t>(v)]));
    for (int v = 0; v < q.graph.order(); ++v) {
        if (q.graph.degree(v) == 0)
            q.isolated_cells += q.sizes[static_cast<std::size_t>(v)];
        else
            q.core.push_back(v);
    }
    return q;
}

}  // namespace

IntPolynomial di_structured(std::int64_t n) {
    const Factorization fac = factorize(n);
    const Quotient q = build_quotient(n);

    // forced block: the zero vertex plus every blown-up cell whose divisor is
    // isolated in the quotient; cross-check the count against the closed form
    const std::int64_t forced = 1 + q.isolated_cells;
    if (forced != fac.squarefull_part())
        throw inconsistency_error("di_structured: isolated block of " + std::to_string(forced) +
                                  " vertices does not match the factorization value " +
                                  std::to_string(fac.squarefull_part()));

    IntPolynomial zero_block;
    if (q.core.empty()) {
        zero_block = IntPolynomial::monomial(forced);
    } else {
        const CompactGraph core = induced_subgraph(q.graph, q.core);
        IntPolynomial core_poly;
        for_each_maximal_independent_set(
            core,
            [&](std::span<const int> s) {
                std::int64_t weight = 0;
                for (int v : s) weight += q.sizes[static_cast<std::size_t>(q.core[static_cast<std::size_t>(v)])];
                core_poly = add(core_poly, IntPolynomial::monomial(weight));
            },
            kQuotientLimit);
        zero_block = multiply(IntPolynomial::monomial(forced), core_poly);
    }

    return di_join(monomial_x(totient(n)), zero_block);
}

namespace {

/// Weighted independent-set sum over a quotient graph: every independent set
/// S contributes the product of ((1+x)^size_i - 1) over i in S.  Deletion /
/// contraction on a highest-degree pivot, edgeless residuals collapse to a
/// single binomial.
class BlowUpIndependence {
public:
    BlowUpIndependence(const CompactGraph& g, std::span<const std::int64_t> sizes)
        : graph_(g), sizes_(sizes.begin(), sizes.end()) {
        factors_.reserve(sizes_.size());
        for (auto s : sizes_)
            factors_.push_back(subtract(binomial_power(s), IntPolynomial::constant(1)));
    }

    IntPolynomial run() {
        std::uint64_t all = 0;
        for (int v = 0; v < graph_.order(); ++v) all |= std::uint64_t{1} << v;
        return sum(all);
    }

private:
    int degree_in(int v, std::uint64_t mask) const {
        int d = 0;
        graph_.for_each_neighbor(v, [&](int w) {
            if (mask >> w & 1) ++d;
        });
        return d;
    }

    IntPolynomial sum(std::uint64_t mask) {
        if (mask == 0) return IntPolynomial::constant(1);
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

        IntPolynomial result;
        std::int64_t edgeless_total = 0;
        int pivot = -1, best = -1;
        for (int v = 0; v < graph_.order(); ++v) {
            if (!(mask >> v & 1)) continue;
            const int d = degree_in(v, mask);
            edgeless_total += sizes_[static_cast<std::size_t>(v)];
            if (d > best) {
                best = d;
                pivot = v;
            }
        }

        if (best == 0) {
            // no edges survive: the cells merge into one independent block
            result = binomial_power(edgeless_total);
        } else {
            std::uint64_t without = mask & ~(std::uint64_t{1} << pivot);
            std::uint64_t closed = without;
            graph_.for_each_neighbor(pivot, [&](int w) { closed &= ~(std::uint64_t{1} << w); });
            result = add(sum(without),
                         multiply(factors_[static_cast<std::size_t>(pivot)], sum(closed)));
        }

        memo_.emplace(mask, result);
        return result;
    }

    const CompactGraph& graph_;
    std::vector<std::int64_t> sizes_;
    std::vector<IntPolynomial> factors_;
    std::unordered_map<std::uint64_t, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial independence_structured(std::int64_t n) {
    const Quotient q = build_quotient(n);

    BlowUpIndependence engine(q.graph, q.sizes);
    const IntPolynomial g2 = engine.run();

    // attach the zero vertex, then join the unit clique on top
    const IntPolynomial nonunits = multiply(binomial_power(1), g2);
    return independence_join(add(IntPolynomial::constant(1), monomial_x(totient(n))), nonunits);
}

IntPolynomial independence_union(const IntPolynomial& p1, const IntPolynomial& p2) {
    if (p1.coefficient(0) != 1 || p2.coefficient(0) != 1)
        throw std::domain_error("independence composition: constant term must be 1");
    return multiply(p1, p2);
}

IntPolynomial independence_join(const IntPolynomial& p1, const IntPolynomial& p2) {
    if (p1.coefficient(0) != 1 || p2.coefficient(0) != 1)
        throw std::domain_error("independence composition: constant term must be 1");
    return subtract(add(p1, p2), IntPolynomial::constant(1));
}

IntPolynomial di_union(std::span<const IntPolynomial> components) {
    IntPolynomial result = IntPolynomial::constant(1);
    for (const auto& p : components) {
        if (p.coefficient(0) != 0)
            throw std::domain_error("di composition: constant term must be zero");
        result = multiply(result, p);
    }
    return result;
}

IntPolynomial di_join(const IntPolynomial& p1, const IntPolynomial& p2) {
    if (p1.coefficient(0) != 0 || p2.coefficient(0) != 0)
        throw std::domain_error("di composition: constant term must be zero");
    return add(p1, p2);
}

}  // namespace comax
