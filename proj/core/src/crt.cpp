#include "congrue/crt.hpp"

namespace congrue {

namespace {

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct Egcd {
  Int g, x, y;
};

Egcd egcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int nx = x0 - q * x1;
    Int ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

bool compatible(const Congruence& a, const Congruence& b) {
  Int g = gcd(a.modulus, b.modulus);
  if (g == 0) return a.residue == b.residue;  // two equality constraints
  return (a.residue - b.residue) % g == 0;
}

// Intersection of two compatible solution classes.
Congruence combine(const Congruence& a, const Congruence& b) {
  if (a.modulus == 0) return a;
  if (b.modulus == 0) return b;
  Egcd e = egcd(a.modulus, b.modulus);
  Int diff = b.residue - a.residue;
  Int m = a.modulus / e.g * b.modulus;
  Int x = a.residue + a.modulus * (e.x * (diff / e.g));
  return Congruence(mod_floor(x, m), m);
}

}  // namespace

Congruence::Congruence(Int residue_, Int modulus_)
    : residue(std::move(residue_)), modulus(std::move(modulus_)) {
  if (modulus < 0) modulus = -modulus;
  if (modulus > 0) residue = mod_floor(residue, modulus);
}

SolveResult solve(const CrtSystem& s) {
  const auto& cs = s.constraints;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!compatible(cs[i], cs[j])) {
        SolveResult r;
        r.conflict = {i, j};
        return r;
      }
    }
  }
  Congruence acc(0, 1);
  for (const auto& c : cs) acc = combine(acc, c);
  return SolveResult{acc, {0, 0}};
}

bool check_partial(const PartialMap& pm) {
  for (auto i = pm.entries.begin(); i != pm.entries.end(); ++i) {
    for (auto j = std::next(i); j != pm.entries.end(); ++j) {
      if ((j->second - i->second) % (j->first - i->first) != 0) return false;
    }
  }
  return true;
}

Int kaarli_extend(const PartialMap& pm, const Int& z) {
  if (!check_partial(pm)) {
    throw NotPreserving("partial map does not preserve congruences");
  }
  if (pm.contains(z)) {
    throw Error("extension point already in the domain");
  }
  // One forcing constraint per domain point: x = pm(b) (mod |b - z|).
  // Pairwise compatibility follows from preservation, so the system is
  // solvable, and any solution extends the map preservingly.
  CrtSystem sys;
  for (const auto& [b, bv] : pm.entries) {
    Int d = b - z;
    if (d < 0) d = -d;
    sys.constraints.emplace_back(bv, d);
  }
  SolveResult r = solve(sys);
  if (!r.solvable()) {
    throw InternalUnsolvable("forced system unsolvable for a preserving map");
  }
  return r.solution->residue;
}

PartialMap extend_to_tower(const PartialMap& pm, unsigned N) {
  if (!check_partial(pm)) {
    throw NotPreserving("partial map does not preserve congruences");
  }
  const Interval a = tower_interval(N);
  for (const auto& [x, v] : pm.entries) {
    if (!a.contains(x)) {
      throw DomainExceedsTower("domain point outside A_N");
    }
  }
  PartialMap out = pm;
  for (unsigned n = 0; n < N; ++n) {
    const Int b = tower_point(n);
    if (!out.contains(b)) {
      out.entries.emplace(b, kaarli_extend(out, b));
    }
  }
  return out;
}

PnSeries extend_to_polynomial(const PartialMap& pm) {
  if (!check_partial(pm)) {
    throw NotPreserving("partial map does not preserve congruences");
  }
  // Least tower index containing a point p: 2p+1 for p >= 0, 2|p| for p < 0.
  unsigned N = 0;
  for (const auto& [x, v] : pm.entries) {
    Int n = x >= 0 ? Int(2 * x + 1) : Int(-2 * x);
    N = std::max(N, n.convert_to<unsigned>());
  }
  PartialMap total = extend_to_tower(pm, N);
  PnSeries s = decompose(
      [&total](const Int& x) { return total.entries.at(x); }, N);
  if (!s.certified) {
    throw CertificateViolation("decomposition of extension is not certified");
  }
  return s;
}

}  // namespace congrue
