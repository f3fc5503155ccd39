#pragma once

#include "vgit/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vgit {

// A lattice point (exponent vector of a monomial) with exact entries.
using LatticeVector = std::vector<Int>;
using IntMatrix = std::vector<std::vector<Int>>;

// ---------------------------------------------------------------------------
// elementary vector operations
// ---------------------------------------------------------------------------

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);
LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_scale(const Int& c, const LatticeVector& a);
bool is_zero(const LatticeVector& a);
bool all_nonnegative(const LatticeVector& a);
// a <= b in every coordinate
bool dominates(const LatticeVector& b, const LatticeVector& a);
Int coord_sum(const LatticeVector& a);

// Total order used for every sorted vector list in the library: ascending
// coordinate sum, ties broken lexicographically with larger entries first.
bool grlex_less(const LatticeVector& a, const LatticeVector& b);
void sort_grlex(std::vector<LatticeVector>& v);

std::string format_vector(const LatticeVector& v);

// ---------------------------------------------------------------------------
// completeness grades for bounded searches
// ---------------------------------------------------------------------------

// certified          - the search closed on its own; the result is globally
//                      complete.
// complete_to_bound  - the procedure is bounded by design (e.g. a degree
//                      cutoff); everything within the bound was found.
// truncated          - an exhaustive search was cut off while candidates were
//                      still open; the result is only valid below the bound.
enum class Completeness { certified, complete_to_bound, truncated };

Completeness worst(Completeness a, Completeness b);
const char* to_string(Completeness c);

// ---------------------------------------------------------------------------
// homogeneous linear diophantine systems over the nonnegative integers
// ---------------------------------------------------------------------------

// Solutions x in N^num_vars of weights.x = 0 and row.x = 0 for every extra
// row. The solution set is a monoid inside N^num_vars; its unique minimal
// generating set is the object computed below.
struct DiophantineSystem {
  std::size_t num_vars = 0;
  std::vector<Int> weights;
  IntMatrix extra;
};

struct HilbertBasis {
  std::vector<LatticeVector> elements;  // grlex sorted, minimal, duplicate-free
  Completeness completeness = Completeness::certified;
};

// Completion over graded levels (level = coordinate sum). Candidates are grown
// one unit vector at a time, only in directions that reduce the residual value
// vector, and are pruned against solutions already found; this reaches every
// minimal solution. If the frontier empties at level <= bound the basis is
// globally complete (certified); if candidates remain open at the bound the
// result is flagged truncated and is complete for coordinate sum <= bound.
HilbertBasis hilbert_basis(const DiophantineSystem& sys, const Int& bound);

// ---------------------------------------------------------------------------
// monoid membership with an explicit witness
// ---------------------------------------------------------------------------

struct MembershipWitness {
  bool member = false;
  // multiplicities[i] = how many copies of gens[i]; sum(mult[i]*gens[i]) ==
  // target when member. Empty decomposition for the zero target.
  std::vector<Int> multiplicities;
};

// Exhaustive bounded search: every generator's multiplicity is capped by the
// target coordinates, so the search space is finite. Generators must be
// nonnegative and nonzero; a target with a negative coordinate is never a
// member.
MembershipWitness monoid_membership(const LatticeVector& target,
                                    const std::vector<LatticeVector>& gens);

// ---------------------------------------------------------------------------
// integer linear algebra (exact)
// ---------------------------------------------------------------------------

// Row-style Hermite normal form. Returns the nonzero rows: a canonical basis
// of the row lattice. Pivots positive, entries below a pivot zero, entries
// above a pivot reduced into [0, pivot).
IntMatrix hermite_row_basis(IntMatrix rows);

std::size_t lattice_rank(const std::vector<LatticeVector>& gens);

// Basis of the integer kernel {x : A.x = 0} (x as column vectors; each
// returned row is one kernel basis vector).
IntMatrix integer_kernel(const IntMatrix& a);

// Basis of the saturation (rational span intersected with the integer
// lattice) of the row span of gens.
IntMatrix saturation_basis(const std::vector<LatticeVector>& gens);

// Elementary divisors (Smith normal form diagonal, nontrivial entries only).
std::vector<Int> smith_divisors(IntMatrix a);

// Solve x.B = v for integer x given basis rows B; nullopt when v is not in
// the row lattice.
std::optional<std::vector<Int>> coordinates_in_basis(const IntMatrix& basis,
                                                     const LatticeVector& v);

// ---------------------------------------------------------------------------
// canonical form of a generator configuration
// ---------------------------------------------------------------------------

// Canonical coordinates for a finite generator set, unique for the orbit of
// the configuration under ambient lattice automorphisms and permutation of
// the input. Computed by rewriting the generators in a basis of the
// saturation of their span and taking the minimum, over all row orders, of
// the column-style Hermite normal form (the canonical representative of the
// right GL_r(Z) action). Candidates are ranked by: fewest negative entries,
// then smallest total |entry| mass, then lexicographic comparison of the
// sorted rows. The result is idempotent.
struct CanonicalForm {
  std::size_t rank = 0;
  std::vector<LatticeVector> images;          // grlex sorted, in Z^rank
  std::vector<LatticeVector> images_by_input; // aligned with the input order
  // Nontrivial elementary divisors of the span inside its saturation; empty
  // when the generators span the saturated lattice.
  std::vector<Int> span_divisors;
  // rank x ambient matrix with images_by_input[i] . basis == gens[i]: maps
  // canonical coordinates back to the ambient lattice.
  IntMatrix basis;
};

CanonicalForm canonical_form(const std::vector<LatticeVector>& gens);

}  // namespace vgit
