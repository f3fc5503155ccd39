#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vgit/betti.hpp"

#include <chrono>
#include <stdexcept>

using namespace vgit;

namespace {

PoincarePolynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Int> out;
  for (long long c : coeffs) out.emplace_back(c);
  return make_poly(std::move(out));
}

bool palindromic(const PoincarePolynomial& p) {
  const auto& c = p.coefficients;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != c[c.size() - 1 - k]) return false;
  return true;
}

bool nonnegative(const PoincarePolynomial& p) {
  for (const Int& c : p.coefficients)
    if (c < 0) return false;
  return true;
}

bool leq_coefficientwise(const PoincarePolynomial& a,
                         const PoincarePolynomial& b) {
  for (std::size_t k = 0; k < a.coefficients.size(); ++k)
    if (a.coefficients[k] > coefficient(b, k)) return false;
  return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(poly_add(poly({1, 2}), poly({0, -2, 3})) == poly({1, 0, 3}));
  CHECK(poly_mul(poly({1, 1}), poly({1, -1})) == poly({1, 0, -1}));
  CHECK(poly_mul(poly({}), poly({1, 1})) == poly({}));
  CHECK(poly_div_exact(poly({1, 0, -1}), poly({1, -1})) == poly({1, 1}));
  CHECK(poly_div_exact(poly({}), poly({1, -1})) == poly({}));
  CHECK_THROWS_AS(poly_div_exact(poly({1, 1, 1}), poly({1, 1})),
                  std::domain_error);
  CHECK_THROWS_AS(poly_div_exact(poly({1}), poly({})), std::domain_error);
  CHECK_THROWS_AS(poly_div_exact(poly({1, 3}), poly({1, 2})),
                  std::domain_error);
  CHECK(make_poly({Int(1), Int(0), Int(0)}) == poly({1}));
  CHECK(coefficient(poly({1, 2, 3}), 1) == 2);
  CHECK(coefficient(poly({1, 2, 3}), 9) == 0);
  CHECK(poly_degree(poly({1, 0, 5})) == 2);
  CHECK(coefficient_sum(poly({1, 0, 5})) == 6);
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(poly({})) == "0");
  CHECK(to_string(poly({1})) == "1");
  CHECK(to_string(poly({1, 0, 5, 0, 1})) == "1 + 5t^2 + t^4");
  CHECK(to_string(poly({0, 1})) == "t");
  CHECK(to_string(poly({-1, 0, 1})) == "-1 + t^2");
  CHECK(to_string(poly({0, 0, 3, 0, -2})) == "3t^2 - 2t^4");
}

TEST_CASE("blow-up formula") {
  // Plane blown up at a point: one new class in degree 2.
  CHECK(blowup_poincare(poly({1, 0, 1, 0, 1}), poly({1}), 1) ==
        poly({1, 0, 2, 0, 1}));
  // Fibre dimension zero adds nothing.
  CHECK(blowup_poincare(poly({1, 0, 1}), poly({1}), 0) == poly({1, 0, 1}));
  // Empty center adds nothing.
  CHECK(blowup_poincare(poly({1}), poly({}), 3) == poly({1}));
  // Positive-dimensional center with two-dimensional fibres.
  CHECK(blowup_poincare(poly({1, 0, 1, 0, 1, 0, 1}), poly({1, 0, 1}), 2) ==
        poly({1, 0, 2, 0, 3, 0, 2}));
}

TEST_CASE("wall-crossing deltas") {
  CHECK(crossing_delta(5, 0) == poly({1, 0, 1, 0, 1, 0, 1}));
  CHECK(crossing_delta(5, 1) == poly({0, 0, 5, 0, 5}));
  CHECK(crossing_delta(5, 2) == poly({}));
  CHECK(crossing_delta(3, 1) == poly({}));
  CHECK(crossing_delta(3, 0) == poly({1, 0, 1}));
  // Even n: the middle wall removes a divisor class (signed delta).
  CHECK(crossing_delta(4, 2) == poly({0, 0, -6}));
  CHECK_THROWS_AS(crossing_delta(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(crossing_delta(2, 0), std::invalid_argument);
}

TEST_CASE("frozen small quotients") {
  CHECK(poincare_master(3) == poly({1, 0, 1}));
  CHECK(poincare_master(5) == poly({1, 0, 6, 0, 6, 0, 1}));
  CHECK(poincare_ordered(3) == poly({1}));
  CHECK(poincare_ordered(5) == poly({1, 0, 5, 0, 1}));
  CHECK(poincare_symmetric(3) == poly({1}));
  CHECK(poincare_symmetric(5) == poly({1, 0, 1, 0, 1}));
  // Euler characteristic of the bundle total space doubles the base.
  CHECK(coefficient_sum(poincare_master(5)) == 14);
  CHECK(coefficient_sum(poincare_ordered(5)) == 7);
}

TEST_CASE("even n is rejected") {
  CHECK_THROWS_AS(poincare_master(4), std::invalid_argument);
  CHECK_THROWS_AS(poincare_ordered(6), std::invalid_argument);
  CHECK_THROWS_AS(poincare_symmetric(8), std::invalid_argument);
  CHECK_THROWS_AS(poincare_master(2), std::invalid_argument);
}

TEST_CASE("structure of the ordered quotient series") {
  for (std::size_t n : {5, 7, 9, 11}) {
    PoincarePolynomial ordered = poincare_ordered(n);
    CHECK(palindromic(ordered));
    CHECK(nonnegative(ordered));
    CHECK(poly_degree(ordered) == 2 * (n - 3));
    CHECK(coefficient(ordered, 0) == 1);

    PoincarePolynomial master = poincare_master(n);
    CHECK(poly_mul(ordered, poly({1, 0, 1})) == master);

    PoincarePolynomial symmetric = poincare_symmetric(n);
    CHECK(palindromic(symmetric));
    CHECK(nonnegative(symmetric));
    CHECK(leq_coefficientwise(symmetric, ordered));
  }
}

TEST_CASE("eleven points evaluate quickly") {
  auto start = std::chrono::steady_clock::now();
  PoincarePolynomial p = poincare_ordered(11);
  auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
            .count() < 1000);
  CHECK(poly_degree(p) == 16);
  CHECK(coefficient(p, 0) == 1);
  CHECK(nonnegative(p));
}
