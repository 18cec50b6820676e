#ifndef COMAX_ANALYSIS_HPP
#define COMAX_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comax/bigint.hpp"
#include "comax/config.hpp"
#include "comax/polynomial.hpp"

namespace comax {

struct UnimodalVerdict {
    bool unimodal = false;
    std::optional<std::int64_t> mode;  ///< smallest valid mode when unimodal
};

/// Tests the definition directly on the dense coefficient sequence:
/// non-strict rise to some mode t, non-strict fall afterwards.
UnimodalVerdict is_unimodal(const IntPolynomial& p);

/// Number of direction changes in the dense coefficient sequence, zero
/// differences dropped.
std::int64_t oscillation(const IntPolynomial& p);

struct LogConcavityVerdict {
    bool log_concave = true;
    std::vector<std::int64_t> violations;  ///< indices i with a_i^2 < a_{i-1} a_{i+1}
};

LogConcavityVerdict is_log_concave(const IntPolynomial& p);

/// Newton's inequalities a_i^2 >= a_{i-1} a_{i+1} (1 + 1/i)(1 + 1/(n-i)),
/// exact rational comparison; requires non-negative dense coefficients.
bool newton_check(const IntPolynomial& p);

/// Zero bounds for strictly positive coefficient sequences: every zero z has
/// inner <= |z| <= outer where the bounds are the min/max of consecutive
/// coefficient ratios a_i / a_{i+1}.
struct Annulus {
    BigRational inner;
    BigRational outer;
};

Annulus enestrom_kakeya(const IntPolynomial& p);

struct Root {
    double re = 0;
    double im = 0;
    double residual = 0;  ///< |p(z)| / sum_i |a_i| |z|^i, extended precision
};

/// All deg(p) zeros: the zero root is deflated exactly at its sparse
/// multiplicity, the rest located by simultaneous (Aberth-Ehrlich) iteration
/// from perturbed-circle starts, double precision with extended-precision
/// polishing.  Output sorted lexicographically by (re, im).
std::vector<Root> find_roots(const IntPolynomial& p, double tol = RunConfig{}.root_tol,
                             int max_iterations = RunConfig{}.max_iterations);

/// Number of real zeros counted two independent ways: a numeric imaginary-
/// part threshold on find_roots output, and exact sign changes on a dense
/// rational grid.  Disagreement raises inconsistency_error.
std::int64_t real_root_count(const IntPolynomial& p, const RunConfig& cfg = {});

struct AnalysisReport {
    bool unimodal = false;
    std::optional<std::int64_t> mode_index;
    std::int64_t oscillation = 0;
    bool log_concave = true;
    std::vector<std::int64_t> log_concave_violations;
    bool newton_holds = true;
    std::optional<Annulus> annulus;
    std::string annulus_omitted_reason;
    std::vector<Root> roots;
    std::int64_t real_root_count = 0;
};

/// Full report for a counting polynomial (non-negative coefficients).
AnalysisReport analyze(const IntPolynomial& p, const RunConfig& cfg = {});

}  // namespace comax

#endif
