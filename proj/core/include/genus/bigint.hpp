#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace genus {

// Exact arbitrary-precision integers and rationals used throughout the
// analysis layer. Counts and polynomial coefficients are always exact.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace genus
