#ifndef CONGRUE_EQVLAT_HPP
#define CONGRUE_EQVLAT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "congrue/errors.hpp"

namespace congrue {

// Carriers are index sets {0..n-1}. Enumeration-heavy operations carry a
// hard guard: desk-scale honesty over silent truncation.
inline constexpr int kMaxCarrier = 7;

/// Equivalence relation on {0..n-1} as a canonical block-id array: block
/// ids appear in first-occurrence order, so equality is array equality.
struct Partition {
  int n = 0;
  std::vector<int> block;

  Partition() = default;
  Partition(int n_, std::vector<int> assignment);

  /// Delta: all singletons.
  static Partition bottom(int n);
  /// Nabla: one block.
  static Partition top(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& bs);

  bool same_block(int x, int y) const { return block[x] == block[y]; }
  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;
  /// Minimum element of each block, in block-id order.
  std::vector<int> representatives() const;
  /// Refinement order: every block of *this is inside a block of q.
  bool finer_than(const Partition& q) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Binary relation on {0..n-1}, n <= 64, as bit rows. Relational
/// composition of equivalences lands here; it is a partition only when it
/// happens to be reflexive-symmetric-transitive.
struct Relation {
  int n = 0;
  std::vector<std::uint64_t> rows;

  Relation() = default;
  explicit Relation(int n_) : n(n_), rows(n_, 0) {}
  static Relation from_partition(const Partition& p);

  bool contains(int x, int y) const { return (rows[x] >> y) & 1; }
  void add(int x, int y) { rows[x] |= std::uint64_t(1) << y; }
  bool is_equivalence() const;
  /// Requires is_equivalence().
  Partition to_partition() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Common refinement.
Partition meet(const Partition& p, const Partition& q);
/// Transitive closure of the union.
Partition join(const Partition& p, const Partition& q);
/// p o q = {(x,y) : x q z and z p y for some z}.
Relation compose(const Partition& p, const Partition& q);
bool commutes(const Partition& p, const Partition& q);

/// Meet/join-closed set of partitions on a common carrier, canonically
/// ordered and deduplicated.
struct SubLattice {
  int n = 0;
  std::vector<Partition> elems;

  bool contains(const Partition& p) const;
  friend bool operator==(const SubLattice&, const SubLattice&) = default;
};

/// Least meet/join-closed superset of the generators; with_bounds also
/// adjoins Delta and Nabla.
SubLattice lattice_closure(int n, const std::vector<Partition>& gens,
                           bool with_bounds = true);

bool is_distributive(const SubLattice& L);

/// Distributive and all pairs commute under composition.
bool is_arithmetical(const SubLattice& L);

/// Chinese remainder condition: every pairwise-compatible system
/// x = a_i (theta_i) with distinct theta_i from L has a common solution.
bool crc_holds(const SubLattice& L);

/// Finite set of self-maps on a common carrier.
struct UnaryAlgebra {
  int n = 0;
  std::vector<std::vector<int>> ops;
};

/// All n^n partitions of the carrier, by restricted-growth strings in
/// lexicographic order. Guard: n <= kMaxCarrier.
std::vector<Partition> all_partitions(int n);

/// Unary maps preserving every member of L, by exhaustive enumeration of
/// the n^n self-maps. Guard: n <= kMaxCarrier.
std::vector<std::vector<int>> pol1(const SubLattice& L);

/// Partitions preserved by every operation of the algebra.
SubLattice cong(const UnaryAlgebra& alg);

/// Density: Cong(A, Pol1(L)) is all of Eqv(A).
bool is_dense(const SubLattice& L);

/// First (in canonical enumeration order) triple of partitions with
/// pairwise meet Delta and join Nabla whose M3 closure is dense.
std::optional<SubLattice> find_m3_dense(int n);

/// Congruence lattice of (Z_m, +): one partition per divisor d of m,
/// blocks the residue classes mod d. Guard: 1 <= m <= 60.
SubLattice congruences_of_zm(unsigned m);

}  // namespace congrue

#endif
