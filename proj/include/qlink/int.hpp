#pragma once

// Exact integer arithmetic used throughout. All invariant values, series
// coefficients and lattice computations are over Z with no overflow semantics.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qlink {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace qlink
