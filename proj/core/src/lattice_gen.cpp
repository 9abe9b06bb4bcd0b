#include "congrue/lattice_gen.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace congrue {

FiniteSemilattice chain(int n) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) leq[x * n + y] = 1;
  }
  return FiniteSemilattice::from_order(n, leq);
}

FiniteSemilattice boolean_algebra(int k) {
  const int m = 1 << k;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      leq[a * m + b] = (a & ~b) == 0 ? 1 : 0;
    }
  }
  return FiniteSemilattice::from_order(m, leq);
}

FiniteSemilattice divisor_lattice(unsigned m) {
  std::vector<unsigned> divs;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d == 0) divs.push_back(d);
  }
  const int n = static_cast<int>(divs.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = divs[j] % divs[i] == 0 ? 1 : 0;
    }
  }
  return FiniteSemilattice::from_order(n, leq);
}

namespace {

// Canonical key of an order matrix: minimum bit encoding over all
// relabelings.
std::vector<std::uint8_t> canonical_key(int n,
                                        const std::vector<std::uint8_t>& leq) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> enc(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        enc[perm[x] * n + perm[y]] = leq[x * n + y];
      }
    }
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteSemilattice> generate(int n) {
  std::vector<FiniteSemilattice> out;
  if (n == 1) {
    out.push_back(FiniteSemilattice::from_order(1, {1}));
    return out;
  }
  // Strict pairs i < j in some linear extension; every isomorphism class
  // shows up under at least one labeling.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << pairs.size());
       ++bits) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((bits >> p) & 1) leq[pairs[p].first * n + pairs[p].second] = 1;
    }
    // bottom 0 and top n-1
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = leq[0 * n + i] && leq[i * n + (n - 1)];
    }
    if (!ok) continue;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (!leq[x * n + y]) continue;
        for (int z = 0; z < n; ++z) {
          if (leq[y * n + z] && !leq[x * n + z]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    // all pairs must have a lub and a glb
    auto bound_exists = [&](bool upper) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          std::vector<int> bds;
          for (int u = 0; u < n; ++u) {
            bool in = upper ? (leq[x * n + u] && leq[y * n + u])
                            : (leq[u * n + x] && leq[u * n + y]);
            if (in) bds.push_back(u);
          }
          bool found = false;
          for (int u : bds) {
            bool extreme = true;
            for (int w : bds) {
              bool cmp = upper ? leq[u * n + w] : leq[w * n + u];
              if (!cmp) {
                extreme = false;
                break;
              }
            }
            if (extreme) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
      return true;
    };
    if (!bound_exists(true) || !bound_exists(false)) continue;
    if (seen.insert(canonical_key(n, leq)).second) {
      out.push_back(FiniteSemilattice::from_order(n, leq));
    }
  }
  return out;
}

}  // namespace

const std::vector<FiniteSemilattice>& enumerate_lattices(int size) {
  if (size < 1 || size > 6) {
    throw CarrierTooLarge("enumerate_lattices guard is 1 <= size <= 6");
  }
  static std::mutex mu;
  static std::map<int, std::vector<FiniteSemilattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(size);
  if (it == cache.end()) {
    it = cache.emplace(size, generate(size)).first;
  }
  return it->second;
}

}  // namespace congrue
