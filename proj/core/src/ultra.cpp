#include "congrue/ultra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace congrue {

namespace {

void check_points(int n) {
  if (n > kMaxCarrier) {
    throw CarrierTooLarge("point count " + std::to_string(n) +
                          " exceeds enumeration guard " +
                          std::to_string(kMaxCarrier));
  }
}

}  // namespace

int FiniteSemilattice::top() const {
  int t = 0;
  for (int x = 1; x < size; ++x) t = join(t, x);
  return t;
}

FiniteSemilattice FiniteSemilattice::from_order(
    int size, const std::vector<std::uint8_t>& leq) {
  if (size <= 0 || leq.size() != static_cast<std::size_t>(size) * size) {
    throw ParseError("order matrix must be size x size, size >= 1");
  }
  FiniteSemilattice V;
  V.size = size;
  V.leq = leq;
  for (int x = 0; x < size; ++x) {
    if (!V.le(x, x)) throw ParseError("order is not reflexive");
    if (!V.le(0, x)) throw ParseError("element 0 must be the least element");
    for (int y = 0; y < size; ++y) {
      if (x != y && V.le(x, y) && V.le(y, x)) {
        throw ParseError("order is not antisymmetric");
      }
      for (int z = 0; z < size; ++z) {
        if (V.le(x, y) && V.le(y, z) && !V.le(x, z)) {
          throw ParseError("order is not transitive");
        }
      }
    }
  }
  V.join_tab.assign(static_cast<std::size_t>(size) * size, -1);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      int best = -1;
      for (int u = 0; u < size; ++u) {
        if (!V.le(x, u) || !V.le(y, u)) continue;
        if (best < 0 || V.le(u, best)) best = u;
      }
      if (best < 0) throw ParseError("pair without an upper bound");
      // best is an upper bound minimal by scanning; verify leastness
      for (int u = 0; u < size; ++u) {
        if (V.le(x, u) && V.le(y, u) && !V.le(best, u)) {
          throw ParseError("pair without a least upper bound");
        }
      }
      V.join_tab[x * size + y] = best;
    }
  }
  V.meet_tab.assign(static_cast<std::size_t>(size) * size, -1);
  for (int x = 0; x < size && V.has_meet(); ++x) {
    for (int y = 0; y < size; ++y) {
      int best = -1;
      for (int u = 0; u < size; ++u) {
        if (!V.le(u, x) || !V.le(u, y)) continue;
        if (best < 0 || V.le(best, u)) best = u;
      }
      bool greatest = true;
      for (int u = 0; u < size; ++u) {
        if (V.le(u, x) && V.le(u, y) && !V.le(u, best)) greatest = false;
      }
      if (!greatest) {
        V.meet_tab.clear();
        break;
      }
      V.meet_tab[x * size + y] = best;
    }
  }
  return V;
}

bool is_distributive_lattice(const FiniteSemilattice& V) {
  if (!V.has_meet()) return false;
  for (int x = 0; x < V.size; ++x) {
    for (int y = 0; y < V.size; ++y) {
      for (int z = 0; z < V.size; ++z) {
        if (V.meet(x, V.join(y, z)) !=
            V.join(V.meet(x, y), V.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> residual(const FiniteSemilattice& V, int x, int y) {
  // D(x,y) = {z : x <= y v z}; the residual is its least element.
  std::vector<int> d;
  for (int z = 0; z < V.size; ++z) {
    if (V.le(x, V.join(y, z))) d.push_back(z);
  }
  for (int z : d) {
    bool least = true;
    for (int w : d) {
      if (!V.le(z, w)) {
        least = false;
        break;
      }
    }
    if (least) return z;
  }
  return std::nullopt;
}

bool is_residuated(const FiniteSemilattice& V) {
  for (int x = 0; x < V.size; ++x) {
    for (int y = 0; y < V.size; ++y) {
      if (!residual(V, x, y)) return false;
    }
  }
  return true;
}

bool UltraSpace::separated() const {
  for (int x = 0; x < points; ++x) {
    for (int y = 0; y < points; ++y) {
      if (x != y && dist(x, y) == 0) return false;
    }
  }
  return true;
}

UltraSpace dv_space(const FiniteSemilattice& V) {
  if (!is_residuated(V)) {
    throw NotResiduated("d_V requires a residuated semilattice");
  }
  UltraSpace S;
  S.V = V;
  S.points = V.size;
  S.d.assign(static_cast<std::size_t>(V.size) * V.size, 0);
  for (int x = 0; x < V.size; ++x) {
    for (int y = 0; y < V.size; ++y) {
      S.d[x * V.size + y] = V.join(*residual(V, x, y), *residual(V, y, x));
    }
  }
  return S;
}

UltraSpace dvee_space(const FiniteSemilattice& V) {
  UltraSpace S;
  S.V = V;
  S.points = V.size;
  S.d.assign(static_cast<std::size_t>(V.size) * V.size, 0);
  for (int x = 0; x < V.size; ++x) {
    for (int y = 0; y < V.size; ++y) {
      S.d[x * V.size + y] = x == y ? 0 : V.join(x, y);
    }
  }
  return S;
}

AxiomReport verify_axioms(const UltraSpace& S) {
  AxiomReport rep;
  const int n = S.points;
  for (int x = 0; x < n; ++x) {
    if (S.dist(x, x) != 0) {
      rep.violations.push_back("d(" + std::to_string(x) + "," +
                               std::to_string(x) + ") != 0");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (S.dist(x, y) != S.dist(y, x)) {
        rep.violations.push_back("symmetry violated at (" + std::to_string(x) +
                                 "," + std::to_string(y) + ")");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!S.V.le(S.dist(x, y), S.V.join(S.dist(x, z), S.dist(z, y)))) {
          rep.violations.push_back(
              "triangle violated at (" + std::to_string(x) + "," +
              std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  rep.separated = S.separated();
  return rep;
}

std::uint64_t ball(const UltraSpace& S, int a, int r) {
  std::uint64_t mask = 0;
  for (int x = 0; x < S.points; ++x) {
    if (S.V.le(S.dist(a, x), r)) mask |= std::uint64_t(1) << x;
  }
  return mask;
}

bool is_convex(const UltraSpace& S) {
  for (int a = 0; a < S.points; ++a) {
    for (int b = 0; b < S.points; ++b) {
      for (int r = 0; r < S.V.size; ++r) {
        for (int s = 0; s < S.V.size; ++s) {
          if (S.V.le(S.dist(a, b), S.V.join(r, s)) &&
              (ball(S, a, r) & ball(S, b, s)) == 0) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

// True iff no pairwise-intersecting family of the given (distinct) ball
// masks has empty intersection. In a minimal violating family every ball
// strictly shrinks the running intersection, so the search may require a
// strict shrink at each step.
bool helly_2(const std::vector<std::uint64_t>& balls, std::size_t from,
             std::vector<std::uint64_t>& chosen, std::uint64_t inter) {
  for (std::size_t i = from; i < balls.size(); ++i) {
    std::uint64_t next = inter & balls[i];
    if (next == inter) continue;
    bool pairwise = true;
    for (std::uint64_t c : chosen) {
      if ((c & balls[i]) == 0) {
        pairwise = false;
        break;
      }
    }
    if (!pairwise) continue;
    if (next == 0) return false;
    chosen.push_back(balls[i]);
    bool ok = helly_2(balls, i + 1, chosen, next);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_hyperconvex(const UltraSpace& S) {
  if (!is_convex(S)) return false;
  std::set<std::uint64_t> distinct;
  for (int a = 0; a < S.points; ++a) {
    for (int r = 0; r < S.V.size; ++r) distinct.insert(ball(S, a, r));
  }
  std::vector<std::uint64_t> balls(distinct.begin(), distinct.end());
  std::vector<std::uint64_t> chosen;
  std::uint64_t all = (std::uint64_t(1) << S.points) - 1;
  return helly_2(balls, 0, chosen, all);
}

std::vector<std::vector<int>> contractions(const UltraSpace& S) {
  const int n = S.points;
  check_points(n);
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (!S.V.le(S.dist(f[x], f[y]), S.dist(x, y))) {
          ok = false;
          break;
        }
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

SubLattice eq_d(const UltraSpace& S) {
  std::set<Partition> elems;
  for (int r = 0; r < S.V.size; ++r) {
    Relation rel(S.points);
    for (int x = 0; x < S.points; ++x) {
      for (int y = 0; y < S.points; ++y) {
        if (S.V.le(S.dist(x, y), r)) rel.add(x, y);
      }
    }
    if (!rel.is_equivalence()) {
      throw Error("eq_d level is not an equivalence: space is not ultrametric");
    }
    elems.insert(rel.to_partition());
  }
  SubLattice L;
  L.n = S.points;
  L.elems.assign(elems.begin(), elems.end());
  return L;
}

SubLattice cong_d(const UltraSpace& S) {
  return cong(UnaryAlgebra{S.points, contractions(S)});
}

Partition delta_least_cong(const UltraSpace& S, int x, int y) {
  // Route one: meet of all members of Cong_d containing the pair.
  SubLattice C = cong_d(S);
  Partition by_meet = Partition::top(S.points);
  for (const auto& p : C.elems) {
    if (p.same_block(x, y)) by_meet = meet(by_meet, p);
  }
  // Route two: close {(x,y)} under the contractions and equivalence
  // closure.
  auto maps = contractions(S);
  Partition p = Partition::bottom(S.points);
  {
    std::vector<int> raw = p.block;
    raw[y] = raw[x];
    p = Partition(S.points, raw);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& f : maps) {
      for (int a = 0; a < S.points; ++a) {
        for (int b = a + 1; b < S.points; ++b) {
          if (p.same_block(a, b) && !p.same_block(f[a], f[b])) {
            std::vector<int> raw = p.block;
            int keep = raw[f[a]];
            int drop = raw[f[b]];
            for (int& v : raw) {
              if (v == drop) v = keep;
            }
            p = Partition(S.points, raw);
            grew = true;
          }
        }
      }
    }
  }
  if (p != by_meet) {
    throw Error("delta_least_cong: closure and meet routes disagree");
  }
  return p;
}

UltraSpace system_space(const EqSystem& M) {
  const int k = static_cast<int>(M.relations.size());
  if (k > 5) throw IndexTooLarge("system_space guard is at most 5 relations");
  const int m = 1 << k;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      leq[a * m + b] = (a & ~b) == 0 ? 1 : 0;
    }
  }
  UltraSpace S;
  S.V = FiniteSemilattice::from_order(m, leq);
  S.points = M.points;
  S.d.assign(static_cast<std::size_t>(M.points) * M.points, 0);
  for (int x = 0; x < M.points; ++x) {
    for (int y = 0; y < M.points; ++y) {
      int mask = 0;
      for (int i = 0; i < k; ++i) {
        if (!M.relations[i].same_block(x, y)) mask |= 1 << i;
      }
      S.d[x * M.points + y] = mask;
    }
  }
  return S;
}

EqSystem space_system(const UltraSpace& S) {
  const int m = S.V.size;
  int k = 0;
  while ((1 << k) < m) ++k;
  if ((1 << k) != m) {
    throw Error("space_system requires a powerset-coded semilattice");
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (S.V.le(a, b) != ((a & ~b) == 0)) {
        throw Error("space_system requires a powerset-coded semilattice");
      }
    }
  }
  EqSystem M;
  M.points = S.points;
  for (int i = 0; i < k; ++i) {
    Relation rel(S.points);
    for (int x = 0; x < S.points; ++x) {
      for (int y = 0; y < S.points; ++y) {
        if ((S.dist(x, y) & (1 << i)) == 0) rel.add(x, y);
      }
    }
    if (!rel.is_equivalence()) {
      throw Error("space level is not an equivalence relation");
    }
    M.relations.push_back(rel.to_partition());
  }
  return M;
}

std::vector<std::vector<int>> isometric_embed(const UltraSpace& S) {
  if (!is_residuated(S.V)) {
    throw NotResiduated("isometric_embed requires a residuated value lattice");
  }
  const int n = S.points;
  const int m = S.V.size;
  std::vector<int> dv(static_cast<std::size_t>(m) * m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      dv[u * m + v] = S.V.join(*residual(S.V, u, v), *residual(S.V, v, u));
    }
  }
  std::vector<std::vector<int>> coords(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int e = 0; e < n; ++e) coords[x][e] = S.dist(x, e);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int induced = 0;
      for (int e = 0; e < n; ++e) {
        induced = S.V.join(induced, dv[coords[x][e] * m + coords[y][e]]);
      }
      if (induced != S.dist(x, y)) {
        throw NotIsometric("canonical embedding is not isometric at (" +
                           std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  return coords;
}

bool order_isomorphic(int n, const std::vector<std::uint8_t>& leq_a,
                      const std::vector<std::uint8_t>& leq_b) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n; ++y) {
        if (leq_a[x * n + y] != leq_b[perm[x] * n + perm[y]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool representation_check(const FiniteSemilattice& V) {
  if (V.size > kMaxCarrier) {
    throw CarrierTooLarge("representation_check guard is size <= " +
                          std::to_string(kMaxCarrier));
  }
  if (!is_distributive_lattice(V)) {
    throw NotDistributive("representation_check requires a distributive lattice");
  }
  UltraSpace S = dv_space(V);
  SubLattice C = cong_d(S);
  if (static_cast<int>(C.elems.size()) != V.size) return false;
  const int n = V.size;
  std::vector<std::uint8_t> leq_c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq_c[i * n + j] = C.elems[i].finer_than(C.elems[j]) ? 1 : 0;
    }
  }
  if (!order_isomorphic(n, V.leq, leq_c)) return false;
  return is_arithmetical(C);
}

}  // namespace congrue
