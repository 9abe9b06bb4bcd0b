#ifndef CONGRUE_ULTRA_HPP
#define CONGRUE_ULTRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congrue/eqvlat.hpp"

namespace congrue {

/// Finite join-semilattice with least element 0, as dense tables: an
/// order matrix and a join table. A finite join-semilattice with a least
/// element always has all meets too, so the meet table is computed when
/// the  order admits it and is carried along for the full-lattice
/// operations.
struct FiniteSemilattice {
  int size = 0;
  std::vector<std::uint8_t> leq;  // size*size, leq[x*size+y] = (x <= y)
  std::vector<int> join_tab;      // size*size
  std::vector<int> meet_tab;      // size*size; empty if meets do not exist

  bool le(int x, int y) const { return leq[x * size + y] != 0; }
  int join(int x, int y) const { return join_tab[x * size + y]; }
  bool has_meet() const { return !meet_tab.empty(); }
  int meet(int x, int y) const { return meet_tab[x * size + y]; }
  int top() const;

  /// Validates the order matrix (partial order, 0 least, all joins
  /// exist) and fills in the operation tables. Throws ParseError.
  static FiniteSemilattice from_order(int size,
                                      const std::vector<std::uint8_t>& leq);

  friend bool operator==(const FiniteSemilattice&,
                         const FiniteSemilattice&) = default;
};

/// Distributivity of the underlying lattice: x ^ (y v z) = (x^y) v (x^z).
bool is_distributive_lattice(const FiniteSemilattice& V);

/// Least z with x <= y v z, when the set D(x,y) of such z has a minimum.
std::optional<int> residual(const FiniteSemilattice& V, int x, int y);

/// All residuals exist; on finite lattices this is distributivity.
bool is_residuated(const FiniteSemilattice& V);

/// Finite set E with a distance table into a FiniteSemilattice. The
/// ultrametric axioms are a checked property (verify_axioms), not a
/// construction invariant, so pre-ultrametric tables are representable.
struct UltraSpace {
  FiniteSemilattice V;
  int points = 0;
  std::vector<int> d;  // points*points, element indices of V

  int dist(int x, int y) const { return d[x * points + y]; }
  /// Separation axiom: d(x,y) = 0 only on the diagonal.
  bool separated() const;
};

/// The least metrisation d_V(x,y) = (x\y) v (y\x). Requires V residuated.
UltraSpace dv_space(const FiniteSemilattice& V);

/// The largest metrisation with d(0,x) = x: d(x,y) = x v y off the
/// diagonal.
UltraSpace dvee_space(const FiniteSemilattice& V);

struct AxiomReport {
  std::vector<std::string> violations;
  bool separated = false;

  bool ok() const { return violations.empty(); }
};

/// Checks d(x,x)=0, symmetry and the join triangle inequality; lists
/// every violated instance. Separation is reported, not counted as a
/// violation.
AxiomReport verify_axioms(const UltraSpace& S);

/// Closed ball B(a,r) = {x : d(a,x) <= r} as a point bitmask.
std::uint64_t ball(const UltraSpace& S, int a, int r);

/// d(a,a') <= r v r' implies B(a,r) and B(a',r') intersect.
bool is_convex(const UltraSpace& S);

/// Convex and every pairwise-intersecting family of balls has a common
/// point.
bool is_hyperconvex(const UltraSpace& S);

/// All self-maps with d(f(x),f(y)) <= d(x,y), by enumeration.
/// Guard: points <= kMaxCarrier.
std::vector<std::vector<int>> contractions(const UltraSpace& S);

/// Eq_d: the relations {(x,y) : d(x,y) <= r}, one per r in V.
SubLattice eq_d(const UltraSpace& S);

/// Cong_d: partitions preserved by every contraction.
SubLattice cong_d(const UltraSpace& S);

/// Least member of Cong_d containing (x,y). Computed two ways —
/// intersection of the containing congruences, and closure of {(x,y)}
/// under all contractions — which must agree.
Partition delta_least_cong(const UltraSpace& S, int x, int y);

/// Indexed family of equivalence relations on a common point set.
struct EqSystem {
  int points = 0;
  std::vector<Partition> relations;
};

/// The pre-ultrametric space over the powerset of the index set:
/// d(x,y) = {i : (x,y) not in rho_i}, elements coded as bitmasks.
/// Guard: at most 5 relations.
UltraSpace system_space(const EqSystem& M);

/// Inverse reading of a space over a powerset-coded semilattice:
/// rho_i = {(x,y) : i not in d(x,y)}.
EqSystem space_system(const UltraSpace& S);

/// Coordinates x -> (d(x,e))_e of the canonical embedding into V^E, with
/// the componentwise-join d_V distance on the power. Asserts the
/// embedding is isometric; a failure is surfaced as NotIsometric.
std::vector<std::vector<int>> isometric_embed(const UltraSpace& S);

/// Order isomorphism of two finite orders given as leq matrices.
bool order_isomorphic(int n, const std::vector<std::uint8_t>& leq_a,
                      const std::vector<std::uint8_t>& leq_b);

/// The representation theorem check: Cong_d of dv_space(V), ordered by
/// refinement, is isomorphic to V and arithmetical. Requires V
/// distributive with |V| <= kMaxCarrier.
bool representation_check(const FiniteSemilattice& V);

}  // namespace congrue

#endif
