#ifndef CONGRUE_LATTICE_GEN_HPP
#define CONGRUE_LATTICE_GEN_HPP

#include "congrue/ultra.hpp"

namespace congrue {

/// Chain 0 < 1 < ... < n-1.
FiniteSemilattice chain(int n);

/// Powerset of k atoms, elements coded as bitmasks, ordered by inclusion.
FiniteSemilattice boolean_algebra(int k);

/// Divisors of m ordered by divisibility; join = lcm, meet = gcd,
/// least element 1.
FiniteSemilattice divisor_lattice(unsigned m);

/// All lattices of exactly the given size, up to isomorphism, with element
/// 0 the bottom and size-1 the top. Generated once by brute force over
/// linear-extension-compatible orders and cached. Guard: size <= 6.
const std::vector<FiniteSemilattice>& enumerate_lattices(int size);

}  // namespace congrue

#endif
