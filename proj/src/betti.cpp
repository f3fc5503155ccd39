#include "vgit/betti.hpp"

#include <stdexcept>

namespace vgit {
namespace {

void trim(std::vector<Int>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

// t^power with the given coefficient.
PoincarePolynomial monomial(const Int& coeff, std::size_t power) {
  std::vector<Int> coeffs(power + 1, Int(0));
  coeffs[power] = coeff;
  return make_poly(std::move(coeffs));
}

PoincarePolynomial poly_sub(const PoincarePolynomial& a,
                            const PoincarePolynomial& b) {
  std::vector<Int> coeffs = a.coefficients;
  if (coeffs.size() < b.coefficients.size())
    coeffs.resize(b.coefficients.size(), Int(0));
  for (std::size_t k = 0; k < b.coefficients.size(); ++k)
    coeffs[k] -= b.coefficients[k];
  return make_poly(std::move(coeffs));
}

// 1 - t^2 and 1 - t^4.
PoincarePolynomial one_minus_t(std::size_t power) {
  std::vector<Int> coeffs(power + 1, Int(0));
  coeffs[0] = 1;
  coeffs[power] = -1;
  return make_poly(std::move(coeffs));
}

// binomial(n,m) (t^{2m} - t^{2(n-m-1)}), the numerator shared by the delta
// and both closed forms, with an optional override of the coefficient.
PoincarePolynomial wall_numerator(std::size_t n, std::size_t m,
                                  const Int& coeff) {
  return poly_sub(monomial(coeff, 2 * m), monomial(coeff, 2 * (n - m - 1)));
}

void require_odd(std::size_t n) {
  if (n < 3) throw std::invalid_argument("need n > 2");
  if (n % 2 == 0)
    throw std::invalid_argument("only defined for odd n");
}

}  // namespace

PoincarePolynomial make_poly(std::vector<Int> coefficients) {
  trim(coefficients);
  return PoincarePolynomial{std::move(coefficients)};
}

std::string to_string(const PoincarePolynomial& p) {
  if (p.coefficients.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    const Int& c = p.coefficients[k];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1 || k == 0) out += to_string(a);
    if (k == 1) out += "t";
    if (k > 1) out += "t^" + std::to_string(k);
  }
  return out;
}

Int coefficient(const PoincarePolynomial& p, std::size_t power) {
  return power < p.coefficients.size() ? p.coefficients[power] : Int(0);
}

std::size_t poly_degree(const PoincarePolynomial& p) {
  return p.coefficients.empty() ? 0 : p.coefficients.size() - 1;
}

Int coefficient_sum(const PoincarePolynomial& p) {
  Int out = 0;
  for (const Int& c : p.coefficients) out += c;
  return out;
}

PoincarePolynomial poly_add(const PoincarePolynomial& a,
                            const PoincarePolynomial& b) {
  std::vector<Int> coeffs = a.coefficients;
  if (coeffs.size() < b.coefficients.size())
    coeffs.resize(b.coefficients.size(), Int(0));
  for (std::size_t k = 0; k < b.coefficients.size(); ++k)
    coeffs[k] += b.coefficients[k];
  return make_poly(std::move(coeffs));
}

PoincarePolynomial poly_mul(const PoincarePolynomial& a,
                            const PoincarePolynomial& b) {
  if (a.coefficients.empty() || b.coefficients.empty()) return {};
  std::vector<Int> coeffs(a.coefficients.size() + b.coefficients.size() - 1,
                          Int(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j)
      coeffs[i + j] += a.coefficients[i] * b.coefficients[j];
  return make_poly(std::move(coeffs));
}

PoincarePolynomial poly_div_exact(const PoincarePolynomial& a,
                                  const PoincarePolynomial& b) {
  if (b.coefficients.empty())
    throw std::domain_error("division by the zero polynomial");
  std::vector<Int> rem = a.coefficients;
  trim(rem);
  const std::vector<Int>& div = b.coefficients;
  if (rem.size() < div.size()) {
    if (rem.empty()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<Int> quot(rem.size() - div.size() + 1, Int(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int lead = rem[k + div.size() - 1];
    if (lead == 0) continue;
    if (lead % div.back() != 0)
      throw std::domain_error("polynomial division is not exact");
    Int q = lead / div.back();
    quot[k] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::domain_error("polynomial division is not exact");
  return make_poly(std::move(quot));
}

PoincarePolynomial blowup_poincare(const PoincarePolynomial& total,
                                   const PoincarePolynomial& center,
                                   std::size_t fiber_dim) {
  std::vector<Int> exceptional(2 * fiber_dim + 1, Int(0));
  for (std::size_t j = 1; j <= fiber_dim; ++j) exceptional[2 * j] = 1;
  return poly_add(total, poly_mul(center, make_poly(std::move(exceptional))));
}

PoincarePolynomial crossing_delta(std::size_t n, std::size_t m) {
  if (n < 3) throw std::invalid_argument("need n > 2");
  if (2 * m > n) throw std::invalid_argument("need m <= n/2");
  return poly_div_exact(wall_numerator(n, m, binomial(n, m)),
                        one_minus_t(2));
}

PoincarePolynomial poincare_master(std::size_t n) {
  require_odd(n);
  PoincarePolynomial out;
  for (std::size_t m = 0; 2 * m < n; ++m)
    out = poly_add(out, crossing_delta(n, m));
  return out;
}

PoincarePolynomial poincare_ordered(std::size_t n) {
  require_odd(n);
  PoincarePolynomial numerator;
  for (std::size_t m = 0; 2 * m < n; ++m)
    numerator = poly_add(numerator, wall_numerator(n, m, binomial(n, m)));
  PoincarePolynomial out = poly_div_exact(numerator, one_minus_t(4));
  // The telescoped sum is the same series multiplied by 1 + t^2; a mismatch
  // would mean the two evaluation routes disagree.
  PoincarePolynomial one_plus_t2 = make_poly({Int(1), Int(0), Int(1)});
  if (poly_div_exact(poincare_master(n), one_plus_t2) != out)
    throw std::logic_error("closed form disagrees with the telescoped sum");
  return out;
}

PoincarePolynomial poincare_symmetric(std::size_t n) {
  require_odd(n);
  PoincarePolynomial numerator;
  for (std::size_t m = 0; 2 * m < n; ++m)
    numerator = poly_add(numerator, wall_numerator(n, m, Int(1)));
  return poly_div_exact(numerator, one_minus_t(4));
}

}  // namespace vgit
