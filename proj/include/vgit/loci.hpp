#pragma once

#include "vgit/lattice.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vgit {

// Loci of a diagonal one-parameter action on affine space: coordinate i
// scales by the w_i-th power of the parameter.  Every locus in this module
// is a coordinate subspace, recorded by the set of vanishing coordinates.
struct CoordinateLocus {
  std::set<std::size_t> zero_set;
  bool operator==(const CoordinateLocus&) const = default;
};

// plus:  points whose forward limit exists (negative-weight coords vanish);
// minus: points whose backward limit exists (positive-weight coords vanish);
// zero:  the fixed locus (every nonzero-weight coord vanishes).
struct FixedLoci {
  CoordinateLocus plus;
  CoordinateLocus minus;
  CoordinateLocus zero;
};
FixedLoci fixed_loci(const std::vector<Int>& weights);

// A set of the form X minus a union of coordinate subspaces.
struct ComplementRecord {
  std::vector<CoordinateLocus> removed;
  bool operator==(const ComplementRecord&) const = default;
};

// The (semi)stable loci for the three linearization signs:
//   ss_zero  = X,
//   s_zero   = X minus (plus-locus union minus-locus),
//   ss_plus  = X minus the minus-locus (semistable = stable there),
//   ss_minus = X minus the plus-locus.
struct SemistableLoci {
  ComplementRecord ss_zero;
  ComplementRecord s_zero;
  ComplementRecord ss_plus;
  ComplementRecord ss_minus;
};
SemistableLoci semistable_loci(const std::vector<Int>& weights);

// Support of the limit of a point with the given support under the forward
// (direction +1) or backward (direction -1) flow; throws std::invalid_argument
// "limit does not exist" when the point is outside the corresponding locus.
std::set<std::size_t> limit_point(const std::set<std::size_t>& support,
                                  const std::vector<Int>& weights,
                                  int direction);

// Wall-crossing summary for the diagonal action.  The two quotients contract
// onto the affine quotient; the report records the codimensions of the
// contraction centers, the normal weights on each side, the weighted
// projective fibre of each contraction, and whether the crossing is a flip
// (both codimensions at least 2).  quasi_free is the common |weight| when
// every normal weight on both sides has the same absolute value.
struct CrossingReport {
  bool degenerate = false;  // all weights zero: trivial action
  std::size_t codim_plus = 0;
  std::size_t codim_minus = 0;
  bool flip = false;
  std::vector<Int> weights_plus;   // the positive weights, ascending
  std::vector<Int> weights_minus;  // the negative weights, ascending
  std::vector<Int> fiber_plus;     // weighted projective fibre of the plus side
  std::vector<Int> fiber_minus;    // (lists of positive weights; empty = no fibre)
  std::optional<Int> quasi_free;
  std::string note;
};
CrossingReport classify_crossing(const std::vector<Int>& weights);

// Renders a weighted projective fibre.  The common gcd of the weights is
// divided out first (it does not change the variety), so equal weights give
// a straight "P^k"; otherwise "P(a,b,...)"; "empty" for no weights.
std::string fiber_to_string(const std::vector<Int>& fiber_weights);

}  // namespace vgit
