#include "congrue/newton.hpp"

#include <mutex>

namespace congrue {

namespace {

void strip_trailing_zeros(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

NewtonPoly::NewtonPoly(std::vector<Int> c) : coeffs(std::move(c)) {
  strip_trailing_zeros(coeffs);
}

MonomialPoly::MonomialPoly(std::vector<Rat> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat MonomialPoly::eval(const Int& x) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * Rat(x) + *it;
  }
  return acc;
}

Int binom(const Int& x, unsigned k) {
  Int num = 1;
  for (unsigned i = 0; i < k; ++i) num *= x - i;
  Int fact = 1;
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  // k consecutive integers always contain a multiple of each i <= k.
  return num / fact;
}

Int eval(const NewtonPoly& p, const Int& x) {
  Int acc = 0;
  // Incremental falling factorial: term = C(x,k) built from C(x,k-1).
  Int term = 1;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (k > 0) {
      term *= x - Int(k - 1);
      term /= Int(k);
    }
    acc += p.coeffs[k] * term;
  }
  return acc;
}

NewtonPoly from_values(const std::vector<Int>& values) {
  std::vector<Int> diffs = values;
  std::vector<Int> coeffs;
  coeffs.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    coeffs.push_back(diffs[0]);
    for (std::size_t i = 0; i + k + 1 < values.size(); ++i) {
      diffs[i] = diffs[i + 1] - diffs[i];
    }
  }
  return NewtonPoly(std::move(coeffs));
}

NewtonPoly from_monomial(const MonomialPoly& q) {
  const int deg = q.degree();
  std::vector<Int> values;
  values.reserve(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    Rat v = q.eval(i);
    if (denominator(v) != 1) {
      throw NotIntegerValued("polynomial takes a non-integer value at x=" +
                             std::to_string(i));
    }
    values.push_back(numerator(v));
  }
  if (values.empty()) return NewtonPoly{};
  // A degree-d polynomial integral on {0..d} has integer binomial-basis
  // coefficients and is determined by those d+1 values.
  return from_values(values);
}

MonomialPoly to_monomial(const NewtonPoly& p) {
  std::vector<Rat> acc(p.coeffs.empty() ? 0 : p.coeffs.size(), Rat(0));
  // basis[i] holds the monomial coefficients of C(X,k) while iterating k.
  std::vector<Rat> basis{Rat(1)};
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (k > 0) {
      // C(X,k) = C(X,k-1) * (X - (k-1)) / k
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * Rat(k - 1);
      }
      for (auto& c : next) c /= Rat(k);
      basis = std::move(next);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      acc[i] += Rat(p.coeffs[k]) * basis[i];
    }
  }
  return MonomialPoly(std::move(acc));
}

Int lcm_upto(unsigned n) {
  static std::mutex mu;
  static std::vector<Int> cache{Int(1)};  // cache[m] = lcm{1..m}
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    cache.push_back(lcm(cache.back(), Int(cache.size())));
  }
  return cache[n];
}

}  // namespace congrue
