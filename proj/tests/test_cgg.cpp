#include <doctest.h>

#include <random>
#include <set>

#include "congrue/cgg.hpp"

using congrue::Int;
using congrue::NewtonPoly;
using congrue::PnSeries;

namespace {

Int poly_x2x1sq_half(const Int& x) {
  return x * x * (x - 1) * (x - 1) / 2;
}

}  // namespace

TEST_CASE("interval tower") {
  CHECK(congrue::tower_point(0) == 0);
  CHECK(congrue::tower_point(1) == -1);
  CHECK(congrue::tower_point(2) == 1);
  CHECK(congrue::tower_point(3) == -2);
  CHECK(congrue::tower_interval(0).empty());
  CHECK(congrue::tower_interval(4) == congrue::Interval{-2, 1});
  CHECK(congrue::tower_interval(5) == congrue::Interval{-2, 2});

  // {b_n} = A_{n+1} \ A_n, and the b_n exhaust a symmetric window
  std::set<Int> seen;
  for (unsigned n = 0; n < 21; ++n) {
    Int b = congrue::tower_point(n);
    auto an = congrue::tower_interval(n);
    auto an1 = congrue::tower_interval(n + 1);
    CHECK(!an.contains(b));
    CHECK(an1.contains(b));
    CHECK(seen.insert(b).second);  // injective
  }
  for (Int x = -10; x <= 10; ++x) CHECK(seen.count(x) == 1);
}

TEST_CASE("pn_eval") {
  for (int x = -9; x <= 9; ++x) CHECK(congrue::pn_eval(0, x) == 1);
  CHECK(congrue::pn_eval(3, -2) == -1);
  CHECK(congrue::pn_eval(2, -1) == 0);
  CHECK(congrue::pn_eval(2, 0) == 0);
  for (unsigned n = 0; n < 20; ++n) {
    // P_n vanishes on A_n and P_n(b_n) = (-1)^n
    auto an = congrue::tower_interval(n);
    for (Int x = an.lo; x <= an.hi; ++x) CHECK(congrue::pn_eval(n, x) == 0);
    CHECK(congrue::pn_eval(n, congrue::tower_point(n)) ==
          (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("decompose recovers greedy coefficients") {
  // f(b_0)=a_0, f(b_1)=a_0-a_1, f(b_2)=a_0+a_1+a_2
  const Int a0 = 7, a1 = -3, a2 = 5;
  auto f = [&](const Int& x) -> Int {
    if (x == 0) return a0;
    if (x == -1) return a0 - a1;
    if (x == 1) return a0 + a1 + a2;
    FAIL("oracle queried outside A_3");
    return 0;
  };
  PnSeries s = congrue::decompose(f, 3);
  CHECK(s.coeffs == std::vector<Int>{a0, a1, a2});
}

TEST_CASE("decompose of zero and of the example polynomial") {
  PnSeries z = congrue::decompose([](const Int&) { return Int(0); }, 8);
  CHECK(z.coeffs.empty());
  CHECK(z.certified);

  PnSeries g = congrue::decompose(poly_x2x1sq_half, 6);
  CHECK(g.certified);
  auto a6 = congrue::tower_interval(6);
  for (Int x = a6.lo; x <= a6.hi; ++x) {
    CHECK(congrue::series_eval(g, x) == poly_x2x1sq_half(x));
  }
}

TEST_CASE("series_eval") {
  CHECK(congrue::series_eval(PnSeries{}, 99) == 0);
  PnSeries one({1});
  for (int x = -5; x <= 5; ++x) CHECK(congrue::series_eval(one, x) == 1);
}

TEST_CASE("decompose is inverse to series_eval on coefficients") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> val(-30, 30);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) c.emplace_back(val(rng));
    PnSeries s(c);
    PnSeries back = congrue::decompose(
        [&s](const Int& x) { return congrue::series_eval(s, x); },
        static_cast<unsigned>(s.coeffs.size()));
    CHECK(back == s);
  }
}

TEST_CASE("certify_newton") {
  CHECK(congrue::certify_newton(NewtonPoly({0, 1, 2})));
  CHECK_FALSE(congrue::certify_newton(NewtonPoly({0, 0, 1})));
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(congrue::certify_newton(congrue::fn_poly(n)));
  }
}

TEST_CASE("certify_series") {
  CHECK(congrue::certify_series(PnSeries{}));
  CHECK(congrue::certify_series(PnSeries({0, 0, 2})));
  CHECK_FALSE(congrue::certify_series(PnSeries({0, 0, 0, 2})));
  CHECK_FALSE(PnSeries({0, 0, 0, 2}).certified);
}

TEST_CASE("fn_poly") {
  CHECK(congrue::fn_poly(0) == NewtonPoly({1}));
  CHECK(congrue::fn_poly(1) == NewtonPoly({0, 1}));
  for (int x = -10; x <= 10; ++x) {
    CHECK(congrue::eval(congrue::fn_poly(1), x) == x);
    CHECK(congrue::eval(congrue::fn_poly(2), x) == Int(x) * (x - 1));
  }
}

TEST_CASE("window_oracle") {
  CHECK(congrue::window_oracle([](const Int& x) { return x; }, -20, 20));
  CHECK_FALSE(congrue::window_oracle(
      [](const Int& x) { return congrue::binom(x, 2); }, 0, 4));
  CHECK(congrue::window_oracle(poly_x2x1sq_half, -10, 10));
}

TEST_CASE("claims fnk and fn at small scale") {
  for (unsigned n = 1; n <= 5; ++n) {
    NewtonPoly fn = congrue::fn_poly(n);
    for (int k = -20; k <= 20; ++k) {
      if (k == 0) continue;
      CHECK(congrue::eval(fn, k) % Int(k) == 0);
    }
    for (int x = -15; x <= 15; ++x) {
      for (int k = 1; k <= 10; ++k) {
        CHECK((congrue::eval(fn, x + k) - congrue::eval(fn, x)) % Int(k) == 0);
      }
    }
  }
}

TEST_CASE("vandermonde_delta") {
  auto [l1, r1] = congrue::vandermonde_delta(2, 2, 2);
  CHECK(l1 == 5);
  CHECK(r1 == 5);
  for (int x = -6; x <= 6; ++x) {
    for (unsigned n = 0; n <= 6; ++n) {
      auto [l, r] = congrue::vandermonde_delta(x, 0, n);
      CHECK(l == 0);
      CHECK(r == 0);
    }
  }
  auto [l2, r2] = congrue::vandermonde_delta(-3, 4, 3);
  CHECK(l2 == r2);
  for (int x = -8; x <= 8; ++x) {
    for (int k = -8; k <= 8; ++k) {
      for (unsigned n = 0; n <= 6; ++n) {
        auto [lhs, rhs] = congrue::vandermonde_delta(x, k, n);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("certificate equals oracle on sampled polynomials") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> val(-12, 12);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) c.emplace_back(val(rng));
    NewtonPoly p(c);
    bool cert = congrue::certify_newton(p);
    bool oracle = congrue::window_oracle(
        [&p](const Int& x) { return congrue::eval(p, x); }, -30, 30);
    CHECK(cert == oracle);
  }
}

TEST_CASE("degree-n corollary: the small window suffices") {
  // For a polynomial of degree n, divisibility over pairs in {0..n} alone
  // decides the full certificate.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> val(-6, 6);
  std::uniform_int_distribution<int> len(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) c.emplace_back(val(rng));
    NewtonPoly p(c);
    int deg = std::max(p.degree(), 0);
    bool small_window = congrue::window_oracle(
        [&p](const Int& x) { return congrue::eval(p, x); }, 0, deg);
    CHECK(small_window == congrue::certify_newton(p));
  }
}
