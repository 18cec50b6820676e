#ifndef COMAX_BIGINT_HPP
#define COMAX_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace comax {

// Exact integer/rational arithmetic backend.  Coefficient identities in this
// project are tested by exact equality, so nothing here may round.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace comax

#endif
