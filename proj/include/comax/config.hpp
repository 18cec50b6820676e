#ifndef COMAX_CONFIG_HPP
#define COMAX_CONFIG_HPP

#include <stdexcept>

namespace comax {

/// Tunable limits shared by the library and the CLI.  Flags win over the
/// COMAX_* environment variables; both win over these defaults.
struct RunConfig {
    int oracle_limit_mis = 150;   ///< max graph order for maximal-independent-set enumeration
    int oracle_limit_ind = 100;   ///< max graph order for independent-set counting
    int vertex_capacity = 5000;   ///< max order of any constructed graph
    double root_tol = 1e-10;      ///< relative residual target for located zeros
    int max_iterations = 1000;    ///< root-finder iteration budget
    double tol_imag = 1e-8;       ///< |im| <= tol_imag*(1+|z|) counts as a real zero

    // Root refinement runs a double-precision simultaneous iteration followed
    // by extended-precision (long double) Newton polishing; residuals are
    // evaluated against the exact integer coefficients in extended precision.
    static constexpr const char* root_precision = "double+long-double-refinement";

    void validate() const {
        if (oracle_limit_mis <= 0 || oracle_limit_ind <= 0 || vertex_capacity <= 0 ||
            max_iterations <= 0)
            throw std::domain_error("RunConfig: limits must be positive");
        if (!(root_tol > 0.0 && root_tol < 1e-2))
            throw std::domain_error("RunConfig: root_tol must lie in (0, 1e-2)");
    }
};

}  // namespace comax

#endif
