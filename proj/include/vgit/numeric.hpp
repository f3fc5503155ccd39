#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vgit {

// Exact arbitrary-precision integers and rationals. All arithmetic in the
// library is exact; floating point is never used.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical "p/q" rendering; integers render without the denominator.
inline std::string to_string(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= Int(n - i);
    out /= Int(i + 1);  // exact: out is a product of i+1 consecutive integers
  }
  return out;
}

}  // namespace vgit
