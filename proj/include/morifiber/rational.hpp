#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace morifiber {

// All intersection-theoretic computations run over exact arithmetic:
// arbitrary-precision integers and reduced fractions. No floating point,
// no tolerances.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense symmetric integer matrix, row-major.
using Mat = std::vector<std::vector<long long>>;

}  // namespace morifiber
