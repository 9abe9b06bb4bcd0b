#include <doctest.h>

#include <random>

#include "congrue/newton.hpp"

using congrue::Int;
using congrue::MonomialPoly;
using congrue::NewtonPoly;
using congrue::Rat;

namespace {

// Independent product-loop oracle: C(x,k) via exact rational accumulation.
Int binom_oracle(const Int& x, unsigned k) {
  Rat acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= Rat(x - Int(i), Int(i) + 1);
  }
  REQUIRE(denominator(acc) == 1);
  return numerator(acc);
}

}  // namespace

TEST_CASE("binom basics") {
  CHECK(congrue::binom(5, 2) == 10);
  for (int n = -7; n <= 7; ++n) CHECK(congrue::binom(n, 0) == 1);
  CHECK(congrue::binom(-1, 3) == binom_oracle(-1, 3));
  CHECK(congrue::binom(-1, 3) == -1);
  CHECK(congrue::binom(100, 50) == binom_oracle(100, 50));
}

TEST_CASE("binom matches oracle on a grid") {
  for (int x = -20; x <= 20; ++x) {
    for (unsigned k = 0; k <= 10; ++k) {
      CHECK(congrue::binom(x, k) == binom_oracle(x, k));
    }
  }
}

TEST_CASE("Pascal identity") {
  for (int x = -30; x <= 30; ++x) {
    for (unsigned k = 1; k <= 12; ++k) {
      CHECK(congrue::binom(x, k) ==
            congrue::binom(x - 1, k) + congrue::binom(x - 1, k - 1));
    }
  }
}

TEST_CASE("eval") {
  NewtonPoly p({1, 1, 1});
  CHECK(congrue::eval(p, 2) == 4);
  CHECK(congrue::eval(NewtonPoly{}, 12345) == 0);
  for (unsigned n = 0; n <= 8; ++n) {
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 7;
    CHECK(congrue::eval(NewtonPoly(c), Int(n)) == 7);
  }
  // eval agrees with the term-by-term oracle
  NewtonPoly q({3, -2, 0, 5, -11});
  for (int x = -10; x <= 10; ++x) {
    Int expect = 0;
    for (unsigned k = 0; k < q.coeffs.size(); ++k) {
      expect += q.coeffs[k] * binom_oracle(x, k);
    }
    CHECK(congrue::eval(q, x) == expect);
  }
}

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(NewtonPoly({1, 2, 0, 0}) == NewtonPoly({1, 2}));
  CHECK(NewtonPoly({0, 0}) == NewtonPoly{});
  CHECK(NewtonPoly({0, 0}).degree() == -1);
  CHECK(NewtonPoly({0, 1}).degree() == 1);
}

TEST_CASE("from_values") {
  CHECK(congrue::from_values({1, 2, 4}) == NewtonPoly({1, 1, 1}));
  CHECK(congrue::from_values({42}) == NewtonPoly({42}));
  CHECK(congrue::from_values({0, 0, 0, 1}) == NewtonPoly({0, 0, 0, 1}));
}

TEST_CASE("from_values round trip") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> val(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> values;
    int n = len(rng);
    for (int i = 0; i < n; ++i) values.emplace_back(val(rng));
    NewtonPoly p = congrue::from_values(values);
    for (int i = 0; i < n; ++i) {
      CHECK(congrue::eval(p, i) == values[i]);
    }
  }
}

TEST_CASE("from_monomial") {
  // x^2 = C(x,1) + 2 C(x,2)
  NewtonPoly sq = congrue::from_monomial(MonomialPoly({0, 0, 1}));
  CHECK(sq == NewtonPoly({0, 1, 2}));
  for (int x = -5; x <= 5; ++x) {
    CHECK(congrue::eval(sq, x) == Int(x) * x);
  }

  // x^2 (x-1)^2 / 2 = (x^4 - 2x^3 + x^2) / 2
  MonomialPoly g({0, 0, Rat(1, 2), Rat(-1), Rat(1, 2)});
  NewtonPoly gn = congrue::from_monomial(g);
  for (const auto& c : gn.coeffs) {
    (void)c;  // integer by type; existence of the conversion is the check
  }
  for (int x = -8; x <= 8; ++x) {
    Rat expect = g.eval(x);
    CHECK(denominator(expect) == 1);
    CHECK(congrue::eval(gn, x) == numerator(expect));
  }

  CHECK_THROWS_AS(congrue::from_monomial(MonomialPoly({0, Rat(1, 2)})),
                  congrue::NotIntegerValued);
  CHECK_THROWS_AS(congrue::from_monomial(MonomialPoly({0, 0, Rat(1, 3)})),
                  congrue::NotIntegerValued);
}

TEST_CASE("basis round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> val(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) c.emplace_back(val(rng));
    NewtonPoly p(c);
    MonomialPoly q = congrue::to_monomial(p);
    CHECK(congrue::from_monomial(q) == p);
  }
}

TEST_CASE("lcm_upto") {
  CHECK(congrue::lcm_upto(0) == 1);
  CHECK(congrue::lcm_upto(1) == 1);
  // fold oracle
  Int acc = 1;
  for (unsigned m = 1; m <= 6; ++m) acc = congrue::lcm(acc, Int(m));
  CHECK(congrue::lcm_upto(6) == acc);
  CHECK(congrue::lcm_upto(6) == 60);
  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(congrue::lcm_upto(n) % congrue::lcm_upto(n - 1) == 0);
    for (unsigned m = 1; m <= n; ++m) {
      CHECK(congrue::lcm_upto(n) % Int(m) == 0);
    }
  }
}
