#ifndef CONGRUE_NEWTON_HPP
#define CONGRUE_NEWTON_HPP

#include <vector>

#include "congrue/errors.hpp"
#include "congrue/integers.hpp"

namespace congrue {

/// Integer-valued polynomial stored by its coefficients in the binomial
/// basis {C(X,k)}: p(x) = sum_k coeffs[k] * C(x,k).
///
/// The representation is canonical: trailing zero coefficients are
/// stripped, so polynomial equality is sequence equality and the zero
/// polynomial has an empty coefficient vector.
struct NewtonPoly {
  std::vector<Int> coeffs;

  NewtonPoly() = default;
  explicit NewtonPoly(std::vector<Int> c);

  bool is_zero() const { return coeffs.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const NewtonPoly&, const NewtonPoly&) = default;
};

/// Polynomial with exact rational coefficients in the monomial basis:
/// q(x) = sum_i coeffs[i] * x^i. Input form for basis conversion.
struct MonomialPoly {
  std::vector<Rat> coeffs;

  MonomialPoly() = default;
  explicit MonomialPoly(std::vector<Rat> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Int& x) const;

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;
};

/// Generalized binomial coefficient C(x,k) = x(x-1)...(x-k+1) / k! for any
/// integer x and k >= 0. The division by k! is exact.
Int binom(const Int& x, unsigned k);

/// Exact evaluation sum_k coeffs[k] * C(x,k).
Int eval(const NewtonPoly& p, const Int& x);

/// Interpolation on {0,...,n}: the unique polynomial of degree <= n with
/// p(i) = values[i]. Coefficients are the iterated forward differences
/// lambda_k = Delta^k f(0).
NewtonPoly from_values(const std::vector<Int>& values);

/// Change of basis from monomial to binomial coefficients, going through
/// evaluation at {0,...,deg} and forward differences. Throws
/// NotIntegerValued when q does not map the integers into the integers.
NewtonPoly from_monomial(const MonomialPoly& q);

/// Expansion of the binomial basis back to monomials, with exact rational
/// coefficients.
MonomialPoly to_monomial(const NewtonPoly& p);

/// lcm{1,...,n}, with lcm_upto(0) = 1. Memoized; safe for concurrent use.
Int lcm_upto(unsigned n);

}  // namespace congrue

#endif
