#ifndef CONGRUE_CRT_HPP
#define CONGRUE_CRT_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "congrue/cgg.hpp"

namespace congrue {

/// One constraint x = residue (mod modulus). Modulus 0 encodes the
/// equality constraint x = residue; for modulus r > 0 the residue is
/// normalized into [0, r).
struct Congruence {
  Int residue;
  Int modulus;

  Congruence(Int residue_, Int modulus_);

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct CrtSystem {
  std::vector<Congruence> constraints;
};

/// Outcome of solving a CrtSystem: either the full solution class (modulus
/// = lcm of the constraint moduli, 0 when a single value is pinned), or
/// the first pair of indices violating pairwise compatibility
/// a_i = a_j (mod gcd(r_i, r_j)).
struct SolveResult {
  std::optional<Congruence> solution;
  std::pair<std::size_t, std::size_t> conflict{0, 0};

  bool solvable() const { return solution.has_value(); }
};

SolveResult solve(const CrtSystem& s);

/// Finite set of integer point/value pairs; may or may not be congruence
/// preserving — that is a checked property, not an invariant.
struct PartialMap {
  std::map<Int, Int> entries;

  bool contains(const Int& x) const { return entries.count(x) != 0; }
};

/// True iff (x-y) | f(x)-f(y) for all pairs of entries.
bool check_partial(const PartialMap& pm);

/// Kaarli one-point extension: the value v making pm | {z -> v} preserve
/// congruences again. Each domain point forces x = pm(b) (mod |b-z|); the
/// system is pairwise compatible whenever pm preserves congruences, so it
/// is solvable over the integers, and v is the least non-negative
/// representative of the solution class.
///
/// Throws NotPreserving when pm fails check_partial, and
/// InternalUnsolvable if the forced system has no solution (unreachable
/// when the precondition holds).
Int kaarli_extend(const PartialMap& pm, const Int& z);

/// Extends pm to all of A_N by iterating kaarli_extend over the missing
/// tower points in b_n order. dom(pm) must be contained in A_N.
PartialMap extend_to_tower(const PartialMap& pm, unsigned N);

/// Full pipeline: pick the least N with dom(pm) inside A_N, extend over
/// the tower and run the greedy decomposition. The result agrees with pm
/// on its domain and is certified; a failed certificate is surfaced as
/// CertificateViolation.
PnSeries extend_to_polynomial(const PartialMap& pm);

}  // namespace congrue

#endif
