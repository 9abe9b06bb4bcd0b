#ifndef CONGRUE_INTEGERS_HPP
#define CONGRUE_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace congrue {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// gcd with the convention gcd(0, n) = n, always non-negative.
inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

// Least non-negative residue of a modulo m, m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace congrue

#endif
