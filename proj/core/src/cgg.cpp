#include "congrue/cgg.hpp"

namespace congrue {

namespace {

bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return a % d == 0;
}

bool lcm_divisibility(const std::vector<Int>& coeffs) {
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!divides(lcm_upto(static_cast<unsigned>(n)), coeffs[n])) return false;
  }
  return true;
}

}  // namespace

PnSeries::PnSeries(std::vector<Int> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  certified = lcm_divisibility(coeffs);
}

Int pn_eval(unsigned n, const Int& x) {
  const unsigned k = n / 2;
  return binom(x + k, n % 2 == 0 ? 2 * k : 2 * k + 1);
}

Int tower_point(unsigned n) {
  const unsigned k = n / 2;
  if (n % 2 == 0) return Int(k);
  return -Int(k) - 1;
}

Interval tower_interval(unsigned n) {
  if (n == 0) return Interval{0, -1};
  const unsigned k = n / 2;
  if (n % 2 == 0) return Interval{-Int(k), Int(k) - 1};
  return Interval{-Int(k), Int(k)};
}

PnSeries decompose(const ValueOracle& f, unsigned N) {
  std::vector<Int> coeffs;
  coeffs.reserve(N);
  for (unsigned n = 0; n < N; ++n) {
    const Int b = tower_point(n);
    Int rest = 0;
    for (unsigned i = 0; i < n; ++i) {
      rest += coeffs[i] * pn_eval(i, b);
    }
    // P_n(b_n) = (-1)^n, so the division is exact.
    Int a = f(b) - rest;
    if (n % 2 == 1) a = -a;
    coeffs.push_back(std::move(a));
  }
  return PnSeries(std::move(coeffs));
}

Int series_eval(const PnSeries& s, const Int& x) {
  Int acc = 0;
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    acc += s.coeffs[n] * pn_eval(static_cast<unsigned>(n), x);
  }
  return acc;
}

bool certify_newton(const NewtonPoly& p) { return lcm_divisibility(p.coeffs); }

bool certify_series(const PnSeries& s) { return lcm_divisibility(s.coeffs); }

NewtonPoly fn_poly(unsigned n) {
  std::vector<Int> coeffs(n + 1, Int(0));
  coeffs[n] = lcm_upto(n);
  return NewtonPoly(std::move(coeffs));
}

bool window_oracle(const ValueOracle& f, const Int& lo, const Int& hi) {
  std::vector<Int> vals;
  for (Int x = lo; x <= hi; ++x) vals.push_back(f(x));
  const std::size_t n = vals.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((vals[j] - vals[i]) % Int(j - i) != 0) return false;
    }
  }
  return true;
}

std::pair<Int, Int> vandermonde_delta(const Int& x, const Int& k, unsigned n) {
  Int lhs = binom(x + k, n) - binom(x, n);
  Int rhs = 0;
  for (unsigned i = 1; i <= n; ++i) {
    rhs += binom(x, n - i) * binom(k, i);
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace congrue
