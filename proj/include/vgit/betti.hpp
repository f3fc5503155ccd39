#pragma once

#include "vgit/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vgit {

// Polynomial in one variable t with exact integer coefficients;
// coefficients[k] is the coefficient of t^k, trailing zeros trimmed.
struct PoincarePolynomial {
  std::vector<Int> coefficients;
  bool operator==(const PoincarePolynomial&) const = default;
};

PoincarePolynomial make_poly(std::vector<Int> coefficients);
std::string to_string(const PoincarePolynomial& p);
Int coefficient(const PoincarePolynomial& p, std::size_t power);
std::size_t poly_degree(const PoincarePolynomial& p);  // 0 for the zero poly
Int coefficient_sum(const PoincarePolynomial& p);      // evaluation at t = 1

PoincarePolynomial poly_add(const PoincarePolynomial& a,
                            const PoincarePolynomial& b);
PoincarePolynomial poly_mul(const PoincarePolynomial& a,
                            const PoincarePolynomial& b);
// Exact quotient a / b; throws std::domain_error when the division leaves a
// remainder.
PoincarePolynomial poly_div_exact(const PoincarePolynomial& a,
                                  const PoincarePolynomial& b);

// Total space of a blow-up along a center with fibre P^k:
// total + center * (t^2 + t^4 + ... + t^{2k}).
PoincarePolynomial blowup_poincare(const PoincarePolynomial& total,
                                   const PoincarePolynomial& center,
                                   std::size_t fiber_dim);

// Signed change of the quotient's Poincare polynomial when t crosses the
// wall (n, m): binomial(n,m) * (t^{2m} - t^{2(n-m-1)}) / (1 - t^2), an exact
// division.  Negative coefficients signal a loss.
PoincarePolynomial crossing_delta(std::size_t n, std::size_t m);

// Sum of all crossing deltas for odd n > 2: the P^1-bundle total space over
// the quotient of the n-fold product at small t.  Even n is rejected.
PoincarePolynomial poincare_master(std::size_t n);

// Closed form for the quotient of ordered n-tuples (odd n > 2):
// sum_m binomial(n,m) (t^{2m} - t^{2(n-m-1)}) / (1 - t^4).
// Cross-checked internally against poincare_master(n) / (1 + t^2).
PoincarePolynomial poincare_ordered(std::size_t n);

// Same sum with every binomial coefficient replaced by 1: the quotient of
// unordered n-tuples (odd n > 2).
PoincarePolynomial poincare_symmetric(std::size_t n);

}  // namespace vgit
