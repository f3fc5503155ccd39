#pragma once

#include "vgit/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vgit {

// A configuration of n+1 points on the line indexed 0..n, remembered only
// through which of them coincide: the clusters partition {0,...,n}, one
// cluster per occupied location.  Index 0 is the distinguished heavy point.
struct Configuration {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> clusters;
};

enum class Stability { stable, strictly_semistable, unstable };
std::string to_string(Stability s);

// Index 0 carries mass t, every other index carries mass 1.  A configuration
// is stable when every cluster's mass stays strictly below half the total
// mass t + n, strictly semistable when some cluster reaches exactly half
// without any exceeding it, and unstable otherwise.  t must lie in (0, n].
Stability is_semistable(const Configuration& c, const Rat& t);

// The critical values of t where the semistable set jumps: t = n - 2m for
// 0 <= m <= n/2 with n - 2m > 0, listed in descending order.
std::vector<Rat> walls_points(std::size_t n);

// Geometry of the locus swept out at the wall t0 = n - 2m.  The locus has
// component_count components; the action on the normal directions to each
// component has m weights -1 and n-m-1 weights +1, so the two one-sided
// quotients fibre over it in projective spaces of dimensions m-1 and n-m-2.
struct WallDataPoints {
  std::size_t m = 0;
  Rat t0;
  Int component_count;
  std::vector<Int> normal_weights;  // m entries -1, then n-m-1 entries +1
  std::vector<Int> fiber_minus;     // m ones: the P^{m-1} side (empty if m=0)
  std::vector<Int> fiber_plus;      // n-m-1 ones: the P^{n-m-2} side
  std::string stabilizer;           // one-parameter stabilizer type, "k*"
  bool boundary = false;            // m=0: the minus side is empty past t0
};
WallDataPoints wall_geometry(std::size_t n, std::size_t m);

// Membership in the locus swept at the wall (n, m): the configuration sits
// at exactly two locations, and the cluster containing index 0 has exactly
// m+1 members.  These are precisely the two-cluster configurations that are
// strictly semistable at t0 = n - 2m.
bool wall_zero_locus(std::size_t n, std::size_t m, const Configuration& c);

}  // namespace vgit
