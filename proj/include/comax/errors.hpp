#ifndef COMAX_ERRORS_HPP
#define COMAX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace comax {

/// Input exceeds a configured size limit (vertex capacity, oracle limit,
/// quotient bound, dense-expansion bound).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested closed form does not exist for this factorization shape;
/// callers should fall back to the structured route.
class unsupported_shape_error : public std::runtime_error {
public:
    explicit unsupported_shape_error(const std::string& what) : std::runtime_error(what) {}
};

/// The iterative root finder failed to reach the residual tolerance.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, std::vector<int> unconverged)
        : std::runtime_error(what), unconverged_indices(std::move(unconverged)) {}

    std::vector<int> unconverged_indices;
};

/// Two independent computations of the same quantity disagree.  Never
/// resolved silently; the caller decides what to do with the wreckage.
class inconsistency_error : public std::runtime_error {
public:
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace comax

#endif
