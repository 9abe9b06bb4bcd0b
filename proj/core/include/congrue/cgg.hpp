#ifndef CONGRUE_CGG_HPP
#define CONGRUE_CGG_HPP

#include <functional>
#include <utility>
#include <vector>

#include "congrue/newton.hpp"

namespace congrue {

/// Finite coefficient vector (a_0,...,a_{N-1}) in the interleaved P_n
/// basis, P_{2k} = C(X+k,2k) and P_{2k+1} = C(X+k,2k+1). The certified
/// flag records whether lcm{1..n} divides a_n for every index, which by
/// the CGG classification is exactly congruence preservation.
struct PnSeries {
  std::vector<Int> coeffs;
  bool certified = true;

  PnSeries() = default;
  explicit PnSeries(std::vector<Int> c);

  friend bool operator==(const PnSeries& a, const PnSeries& b) {
    return a.coeffs == b.coeffs;
  }
};

/// Closed integer interval; empty() for A_0.
struct Interval {
  Int lo;
  Int hi;  // inclusive; empty iff lo > hi

  bool empty() const { return lo > hi; }
  bool contains(const Int& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using ValueOracle = std::function<Int(const Int&)>;

/// P_n(x): C(x+k,2k) for n=2k, C(x+k,2k+1) for n=2k+1.
Int pn_eval(unsigned n, const Int& x);

/// b_n, the enumeration 0, -1, 1, -2, 2, ... of the integers;
/// {b_n} = A_{n+1} \ A_n.
Int tower_point(unsigned n);

/// A_n: A_0 = empty, A_{2k} = {-k..k-1}, A_{2k+1} = {-k..k}.
Interval tower_interval(unsigned n);

/// Greedy coefficient extraction on the interval tower:
/// a_n * P_n(b_n) = f(b_n) - sum_{i<n} a_i * P_i(b_n), with
/// P_n(b_n) = (-1)^n. The result reproduces f on all of A_N.
PnSeries decompose(const ValueOracle& f, unsigned N);

/// Partial sum  sum_n coeffs[n] * P_n(x).
Int series_eval(const PnSeries& s, const Int& x);

/// True iff lcm{1..k} divides coeffs[k] for every k: the binomial-basis
/// certificate for preserving all congruences.
bool certify_newton(const NewtonPoly& p);

/// True iff lcm{1..n} divides coeffs[n] for every n.
bool certify_series(const PnSeries& s);

/// f_n = lcm{1..n} * C(X,n), the generating congruence-preserving
/// polynomials.
NewtonPoly fn_poly(unsigned n);

/// Brute-force reference: true iff (x-y) | f(x)-f(y) for every pair in
/// [lo,hi]. All certificates are tested against this oracle.
bool window_oracle(const ValueOracle& f, const Int& lo, const Int& hi);

/// Both sides of the Vandermonde-difference identity
/// C(x+k,n) - C(x,n) = sum_{i=1..n} C(x,n-i) * C(k,i),
/// computed independently.
std::pair<Int, Int> vandermonde_delta(const Int& x, const Int& k, unsigned n);

}  // namespace congrue

#endif
