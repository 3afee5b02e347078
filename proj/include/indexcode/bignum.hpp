#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace indexcode {

// Counting bounds overflow 64 bits quickly (binomials times powers of two),
// and the cover guarantees are exact rationals, so we use arbitrary
// precision throughout the bound machinery.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace indexcode
