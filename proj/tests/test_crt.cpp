#include <doctest.h>

#include <random>

#include "congrue/crt.hpp"

using congrue::Congruence;
using congrue::CrtSystem;
using congrue::Int;
using congrue::PartialMap;

namespace {

// Brute-force solver over [0, lcm): the reference for solve().
struct BruteResult {
  bool solvable = false;
  Int residue = 0;
  Int modulus = 0;
};

BruteResult brute_solve(const CrtSystem& s) {
  Int l = 1;
  for (const auto& c : s.constraints) {
    REQUIRE(c.modulus > 0);  // brute force only for positive moduli
    l = congrue::lcm(l, c.modulus);
  }
  std::vector<Int> sols;
  for (Int x = 0; x < l; ++x) {
    bool ok = true;
    for (const auto& c : s.constraints) {
      if (congrue::mod_floor(x, c.modulus) != c.residue) {
        ok = false;
        break;
      }
    }
    if (ok) sols.push_back(x);
  }
  if (sols.empty()) return {};
  // CRT: the solution set is a single class mod its stride
  Int stride = sols.size() == 1 ? l : sols[1] - sols[0];
  return {true, sols[0], stride};
}

PartialMap make_map(std::initializer_list<std::pair<int, int>> entries) {
  PartialMap pm;
  for (auto [k, v] : entries) pm.entries.emplace(k, v);
  return pm;
}

}  // namespace

TEST_CASE("congruence normalization") {
  Congruence c(-1, 5);
  CHECK(c.residue == 4);
  Congruence eq(-7, 0);
  CHECK(eq.residue == -7);
  CHECK(eq.modulus == 0);
  Congruence neg(3, -4);
  CHECK(neg.modulus == 4);
  CHECK(neg.residue == 3);
}

TEST_CASE("solve examples") {
  {
    auto r = congrue::solve({{Congruence(2, 3), Congruence(3, 5)}});
    REQUIRE(r.solvable());
    CHECK(r.solution->residue == 8);
    CHECK(r.solution->modulus == 15);
  }
  {
    auto r = congrue::solve({{Congruence(0, 4), Congruence(1, 6)}});
    CHECK_FALSE(r.solvable());
    CHECK(r.conflict == std::pair<std::size_t, std::size_t>{0, 1});
  }
  {
    auto r = congrue::solve({});
    REQUIRE(r.solvable());
    CHECK(r.solution->residue == 0);
    CHECK(r.solution->modulus == 1);
  }
}

TEST_CASE("solve with equality constraints") {
  auto r = congrue::solve({{Congruence(7, 0), Congruence(1, 3)}});
  REQUIRE(r.solvable());
  CHECK(r.solution->modulus == 0);
  CHECK(r.solution->residue == 7);

  auto bad = congrue::solve({{Congruence(7, 0), Congruence(2, 3)}});
  CHECK_FALSE(bad.solvable());

  auto two = congrue::solve({{Congruence(7, 0), Congruence(7, 0)}});
  REQUIRE(two.solvable());
  CHECK(two.solution->residue == 7);

  auto clash = congrue::solve({{Congruence(7, 0), Congruence(8, 0)}});
  CHECK_FALSE(clash.solvable());
}

TEST_CASE("solve agrees with brute force") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> nc(0, 4);
  std::uniform_int_distribution<int> mod(1, 30);
  std::uniform_int_distribution<int> res(-40, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    CrtSystem s;
    int n = nc(rng);
    for (int i = 0; i < n; ++i) s.constraints.emplace_back(res(rng), mod(rng));
    auto fast = congrue::solve(s);
    auto slow = brute_solve(s);
    REQUIRE(fast.solvable() == slow.solvable);
    if (slow.solvable) {
      CHECK(fast.solution->residue == slow.residue);
      CHECK(fast.solution->modulus == slow.modulus);
    }
  }
}

TEST_CASE("check_partial") {
  CHECK(congrue::check_partial(make_map({{0, 1}, {3, 10}})));
  CHECK_FALSE(congrue::check_partial(make_map({{0, 0}, {2, 3}})));
  CHECK(congrue::check_partial(make_map({{5, 17}})));
  CHECK(congrue::check_partial(PartialMap{}));
}

TEST_CASE("kaarli_extend examples") {
  CHECK(congrue::kaarli_extend(make_map({{0, 1}, {3, 10}}), 1) == 0);
  CHECK(congrue::kaarli_extend(PartialMap{}, 5) == 0);
  {
    Int v = congrue::kaarli_extend(make_map({{0, 0}, {2, 6}}), 1);
    CHECK(v == 0);
  }
  CHECK_THROWS_AS(congrue::kaarli_extend(make_map({{0, 0}, {2, 3}}), 1),
                  congrue::NotPreserving);
}

TEST_CASE("kaarli_extend with repeated values") {
  // A repeated range value must still force the divisibilities pointwise.
  PartialMap pm = make_map({{4, 3}, {6, 3}});
  REQUIRE(congrue::check_partial(pm));
  Int v = congrue::kaarli_extend(pm, 0);
  PartialMap ext = pm;
  ext.entries.emplace(0, v);
  CHECK(congrue::check_partial(ext));
}

TEST_CASE("kaarli invariance") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> pt(-9, 9);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    // Build a preserving map by restricting a certified polynomial.
    std::vector<Int> c;
    for (int k = 0; k < 4; ++k) {
      c.push_back(congrue::lcm_upto(k) * coeff(rng));
    }
    congrue::NewtonPoly p(c);
    PartialMap pm;
    for (int i = 0; i < 4; ++i) {
      Int x = pt(rng);
      pm.entries.emplace(x, congrue::eval(p, x));
    }
    REQUIRE(congrue::check_partial(pm));
    Int z = pt(rng);
    if (pm.contains(z)) continue;
    Int v = congrue::kaarli_extend(pm, z);
    for (int r = 1; r <= 12; ++r) {
      for (const auto& [b, bv] : pm.entries) {
        if ((b - z) % r == 0) {
          CHECK((bv - v) % r == 0);
        }
      }
    }
  }
}

TEST_CASE("extend_to_tower") {
  {
    PartialMap out = congrue::extend_to_tower(make_map({{0, 0}}), 3);
    CHECK(out.entries.size() == 3);
    CHECK(out.contains(-1));
    CHECK(out.contains(1));
    CHECK(congrue::check_partial(out));
  }
  {
    PartialMap pm = make_map({{-1, 3}, {0, 6}, {1, 9}});
    CHECK(congrue::extend_to_tower(pm, 3).entries == pm.entries);
  }
  CHECK_THROWS_AS(congrue::extend_to_tower(make_map({{0, 0}, {2, 3}}), 7),
                  congrue::NotPreserving);
  CHECK_THROWS_AS(congrue::extend_to_tower(make_map({{9, 0}}), 2),
                  congrue::DomainExceedsTower);
}

TEST_CASE("extend_to_polynomial") {
  {
    congrue::PnSeries s = congrue::extend_to_polynomial(make_map({{0, 0}, {1, 1}}));
    CHECK(s.certified);
    CHECK(congrue::series_eval(s, 0) == 0);
    CHECK(congrue::series_eval(s, 1) == 1);
  }
  {
    congrue::PnSeries s = congrue::extend_to_polynomial(PartialMap{});
    CHECK(s.coeffs.empty());
  }
  {
    // restriction of x^2 (x-1)^2 / 2 to {-2..2}
    PartialMap pm;
    for (int x = -2; x <= 2; ++x) {
      Int xi = x;
      pm.entries.emplace(xi, xi * xi * (xi - 1) * (xi - 1) / 2);
    }
    congrue::PnSeries s = congrue::extend_to_polynomial(pm);
    CHECK(s.certified);
    for (const auto& [x, v] : pm.entries) {
      CHECK(congrue::series_eval(s, x) == v);
    }
  }
  CHECK_THROWS_AS(congrue::extend_to_polynomial(make_map({{0, 0}, {2, 3}})),
                  congrue::NotPreserving);
}
