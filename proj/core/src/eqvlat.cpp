#include "congrue/eqvlat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace congrue {

namespace {

// Renumber block ids into first-occurrence order.
std::vector<int> canonicalize(int n, const std::vector<int>& raw) {
  std::vector<int> relabel(n, -1);
  std::vector<int> out(n);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int id = raw[i];
    if (relabel[id] < 0) relabel[id] = next++;
    out[i] = relabel[id];
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

void check_carrier(int n) {
  if (n > kMaxCarrier) {
    throw CarrierTooLarge("carrier size " + std::to_string(n) +
                          " exceeds enumeration guard " +
                          std::to_string(kMaxCarrier));
  }
}

}  // namespace

Partition::Partition(int n_, std::vector<int> assignment)
    : n(n_), block(canonicalize(n_, assignment)) {}

Partition Partition::bottom(int n) {
  std::vector<int> b(n);
  std::iota(b.begin(), b.end(), 0);
  Partition p;
  p.n = n;
  p.block = std::move(b);
  return p;
}

Partition Partition::top(int n) {
  Partition p;
  p.n = n;
  p.block.assign(n, 0);
  return p;
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& bs) {
  std::vector<int> raw(n, -1);
  int id = 0;
  for (const auto& b : bs) {
    for (int x : b) {
      if (x < 0 || x >= n || raw[x] != -1) {
        throw ParseError("blocks must partition the carrier 0.." +
                         std::to_string(n - 1));
      }
      raw[x] = id;
    }
    ++id;
  }
  for (int i = 0; i < n; ++i) {
    if (raw[i] == -1) {
      throw ParseError("element " + std::to_string(i) + " missing from blocks");
    }
  }
  return Partition(n, raw);
}

int Partition::num_blocks() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (int i = 0; i < n; ++i) out[block[i]].push_back(i);
  return out;
}

std::vector<int> Partition::representatives() const {
  std::vector<int> reps(num_blocks(), -1);
  for (int i = n - 1; i >= 0; --i) reps[block[i]] = i;
  return reps;
}

bool Partition::finer_than(const Partition& q) const {
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (same_block(x, y) && !q.same_block(x, y)) return false;
    }
  }
  return true;
}

Relation Relation::from_partition(const Partition& p) {
  Relation r(p.n);
  std::vector<std::uint64_t> block_mask(p.num_blocks(), 0);
  for (int i = 0; i < p.n; ++i) {
    block_mask[p.block[i]] |= std::uint64_t(1) << i;
  }
  for (int i = 0; i < p.n; ++i) r.rows[i] = block_mask[p.block[i]];
  return r;
}

bool Relation::is_equivalence() const {
  for (int x = 0; x < n; ++x) {
    if (!contains(x, x)) return false;
    for (int y = 0; y < n; ++y) {
      if (contains(x, y)) {
        if (!contains(y, x)) return false;
        if ((rows[y] & ~rows[x]) != 0) return false;  // transitivity
      }
    }
  }
  return true;
}

Partition Relation::to_partition() const {
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (contains(x, y)) uf.unite(x, y);
    }
  }
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
  return Partition(n, raw);
}

Partition meet(const Partition& p, const Partition& q) {
  const int n = p.n;
  std::vector<int> out(n);
  int next = 0;
  std::vector<int> table(static_cast<std::size_t>(p.num_blocks()) *
                             q.num_blocks(),
                         -1);
  for (int i = 0; i < n; ++i) {
    int key = p.block[i] * q.num_blocks() + q.block[i];
    if (table[key] < 0) table[key] = next++;
    out[i] = table[key];
  }
  return Partition(n, out);
}

Partition join(const Partition& p, const Partition& q) {
  const int n = p.n;
  UnionFind uf(n);
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (p.same_block(i, j) || q.same_block(i, j)) uf.unite(i, j);
    }
  }
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
  return Partition(n, raw);
}

Relation compose(const Partition& p, const Partition& q) {
  Relation rp = Relation::from_partition(p);
  Relation rq = Relation::from_partition(q);
  Relation out(p.n);
  for (int x = 0; x < p.n; ++x) {
    std::uint64_t zs = rq.rows[x];
    while (zs) {
      int z = std::countr_zero(zs);
      zs &= zs - 1;
      out.rows[x] |= rp.rows[z];
    }
  }
  return out;
}

bool commutes(const Partition& p, const Partition& q) {
  return compose(p, q) == compose(q, p);
}

bool SubLattice::contains(const Partition& p) const {
  return std::binary_search(elems.begin(), elems.end(), p);
}

SubLattice lattice_closure(int n, const std::vector<Partition>& gens,
                           bool with_bounds) {
  std::set<Partition> elems(gens.begin(), gens.end());
  if (with_bounds) {
    elems.insert(Partition::bottom(n));
    elems.insert(Partition::top(n));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Partition> cur(elems.begin(), elems.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= elems.insert(meet(cur[i], cur[j])).second;
        grew |= elems.insert(join(cur[i], cur[j])).second;
      }
    }
  }
  SubLattice L;
  L.n = n;
  L.elems.assign(elems.begin(), elems.end());
  return L;
}

bool is_distributive(const SubLattice& L) {
  for (const auto& x : L.elems) {
    for (const auto& y : L.elems) {
      for (const auto& z : L.elems) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

bool is_arithmetical(const SubLattice& L) {
  if (!is_distributive(L)) return false;
  for (std::size_t i = 0; i < L.elems.size(); ++i) {
    for (std::size_t j = i + 1; j < L.elems.size(); ++j) {
      if (!commutes(L.elems[i], L.elems[j])) return false;
    }
  }
  return true;
}

namespace {

struct CrcContext {
  int n = 0;
  // Per constraint relation: block masks and a representative per block.
  std::vector<std::vector<std::uint64_t>> masks;
  std::vector<std::vector<int>> reps;
  // joins[i][j]: join of relations i and j, for the compatibility test.
  std::vector<std::vector<Partition>> joins;
  const std::vector<Partition>* thetas = nullptr;

  // chosen representative per already-constrained relation index
  std::vector<std::pair<std::size_t, int>> chosen;

  bool compatible_with_chosen(std::size_t idx, int rep) const {
    for (const auto& [pidx, prep] : chosen) {
      if (!joins[pidx][idx].same_block(prep, rep)) return false;
    }
    return true;
  }

  // Returns false when a pairwise-compatible unsolvable system exists.
  bool dfs(std::size_t from, std::uint64_t live) {
    for (std::size_t i = from; i < thetas->size(); ++i) {
      for (std::size_t b = 0; b < masks[i].size(); ++b) {
        std::uint64_t next = live & masks[i][b];
        // A constraint that does not shrink the solution set is redundant
        // in any minimal counterexample, so it can be skipped.
        if (next == live) continue;
        if (!compatible_with_chosen(i, reps[i][b])) continue;
        if (next == 0) return false;
        chosen.emplace_back(i, reps[i][b]);
        bool ok = dfs(i + 1, next);
        chosen.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  }
};

}  // namespace

bool crc_holds(const SubLattice& L) {
  const Partition nabla = Partition::top(L.n);
  CrcContext ctx;
  ctx.n = L.n;
  std::vector<Partition> thetas;
  for (const auto& p : L.elems) {
    if (p != nabla) thetas.push_back(p);
  }
  ctx.thetas = &thetas;
  for (const auto& p : thetas) {
    std::vector<std::uint64_t> masks(p.num_blocks(), 0);
    for (int i = 0; i < p.n; ++i) {
      masks[p.block[i]] |= std::uint64_t(1) << i;
    }
    ctx.masks.push_back(std::move(masks));
    ctx.reps.push_back(p.representatives());
  }
  ctx.joins.resize(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      ctx.joins[i].push_back(join(thetas[i], thetas[j]));
    }
  }
  std::uint64_t all = L.n == 64 ? ~std::uint64_t(0)
                                : (std::uint64_t(1) << L.n) - 1;
  return ctx.dfs(0, all);
}

std::vector<Partition> all_partitions(int n) {
  check_carrier(n);
  std::vector<Partition> out;
  std::vector<int> a(n, 0);
  // Restricted growth strings in lexicographic order.
  while (true) {
    Partition p;
    p.n = n;
    p.block = a;
    out.push_back(std::move(p));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
      if (a[i] < cap) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
      a[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

namespace {

bool map_preserves(const std::vector<int>& f, const Partition& p) {
  for (int x = 0; x < p.n; ++x) {
    for (int y = x + 1; y < p.n; ++y) {
      if (p.same_block(x, y) && !p.same_block(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> pol1(const SubLattice& L) {
  const int n = L.n;
  check_carrier(n);
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& p : L.elems) {
      if (!map_preserves(f, p)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(f);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (f[i] + 1 < n) {
        ++f[i];
        std::fill(f.begin() + i + 1, f.end(), 0);
        break;
      }
      f[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

SubLattice cong(const UnaryAlgebra& alg) {
  SubLattice out;
  out.n = alg.n;
  for (const auto& p : all_partitions(alg.n)) {
    bool ok = true;
    for (const auto& f : alg.ops) {
      if (!map_preserves(f, p)) {
        ok = false;
        break;
      }
    }
    if (ok) out.elems.push_back(p);
  }
  return out;
}

bool is_dense(const SubLattice& L) {
  UnaryAlgebra alg{L.n, pol1(L)};
  return cong(alg).elems.size() == all_partitions(L.n).size();
}

std::optional<SubLattice> find_m3_dense(int n) {
  if (n > 6) {
    throw CarrierTooLarge("find_m3_dense guard is carrier <= 6");
  }
  const Partition delta = Partition::bottom(n);
  const Partition nabla = Partition::top(n);
  std::vector<Partition> mids;
  for (const auto& p : all_partitions(n)) {
    if (p != delta && p != nabla) mids.push_back(p);
  }
  for (std::size_t i = 0; i < mids.size(); ++i) {
    for (std::size_t j = i + 1; j < mids.size(); ++j) {
      if (meet(mids[i], mids[j]) != delta) continue;
      if (join(mids[i], mids[j]) != nabla) continue;
      for (std::size_t k = j + 1; k < mids.size(); ++k) {
        if (meet(mids[i], mids[k]) != delta) continue;
        if (join(mids[i], mids[k]) != nabla) continue;
        if (meet(mids[j], mids[k]) != delta) continue;
        if (join(mids[j], mids[k]) != nabla) continue;
        SubLattice L = lattice_closure(n, {mids[i], mids[j], mids[k]}, true);
        if (L.elems.size() != 5) continue;
        if (is_dense(L)) return L;
      }
    }
  }
  return std::nullopt;
}

SubLattice congruences_of_zm(unsigned m) {
  if (m < 1 || m > 60) {
    throw OutOfRange("congruences_of_zm supports 1 <= m <= 60");
  }
  const int n = static_cast<int>(m);
  std::set<Partition> elems;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = i % static_cast<int>(d);
    elems.insert(Partition(n, raw));
  }
  SubLattice L;
  L.n = n;
  L.elems.assign(elems.begin(), elems.end());
  return L;
}

}  // namespace congrue
