#pragma once

#include "vgit/lattice.hpp"

#include <string>
#include <vector>

namespace vgit {

// k[S] for a finitely generated submonoid S of N^m, graded by a linear
// functional with integer values on S.  Monomials are identified with their
// exponent vectors; every computation below works on those vectors only.
struct GradedRing {
  std::size_t ambient_rank = 0;
  std::vector<LatticeVector> generators;  // duplicate-free, nonzero, >= 0
  std::vector<Int> gen_weights;           // weight of each generator
  std::vector<Rat> weight_functional;     // functional realizing the weights
  std::vector<std::string> var_names;     // display names (may be empty)
  bool standard_basis = false;
};

// Free polynomial ring: S = N^r with the standard basis.
GradedRing make_polynomial_ring(const std::vector<Int>& weights,
                                std::vector<std::string> names = {});

// General monoid ring; throws std::invalid_argument naming the first
// generator whose weight is inconsistent with any linear functional.
GradedRing make_semigroup_ring(std::size_t ambient_rank,
                               std::vector<LatticeVector> generators,
                               std::vector<Int> gen_weights,
                               std::vector<std::string> names = {});

bool trivially_graded(const GradedRing& ring);

// Weight of a monomial via the stored functional (exact).
Int monomial_weight(const GradedRing& ring, const LatticeVector& exponent);

// Monomials of a fixed weight, enumerated over factorizations of length at
// most `bound` (number of generator factors).
struct MonomialSet {
  std::vector<LatticeVector> monomials;  // sorted, duplicate-free
  Completeness completeness = Completeness::complete_to_bound;
};
MonomialSet weight_monomials(const GradedRing& ring, const Int& weight,
                             const Int& bound);
// The subset of weight_monomials minimal under division by nonunit monomials
// of weight zero (module generators of the weight piece).
MonomialSet minimal_weight_monomials(const GradedRing& ring, const Int& weight,
                                     const Int& bound);

enum class QuotientKind { affine_zero, proj_plus, proj_minus, blowup };
std::string to_string(QuotientKind kind);

struct QuotientGenerator {
  LatticeVector exponent;  // in Z^m x Z, last coordinate = z_degree
  Int z_degree = 0;
};

struct QuotientPresentation {
  QuotientKind kind = QuotientKind::affine_zero;
  std::vector<QuotientGenerator> gens;  // sorted by (z_degree, grlex)
  Int linearization_d = 1;
  Completeness completeness = Completeness::certified;
  bool empty_to_bound = false;  // no generator of positive z-degree found
};

// Generators of the weight-zero submonoid (the affine quotient).
QuotientPresentation invariant_ring(const GradedRing& ring, const Int& bound);

// Generators of the section algebra whose z-degree-j piece is the
// weight-(sign*d*j) piece of the ring.  sign is +1 or -1.  For the trivially
// graded ring every character collapses to zero and the quotient is the ring
// itself, presented with one free z generator.
QuotientPresentation proj_quotient(const GradedRing& ring, int sign,
                                   const Int& d, const Int& bound);

// True when, for every |i| <= check_bound, each minimal monomial of weight
// d*i factors through monomials of weights {0, +d, -d} (factor lengths and
// enumeration limited by `bound`).
bool verify_d_generation(const GradedRing& ring, const Int& d,
                         const Int& check_bound, const Int& bound);

// Smallest d <= 12 passing verify_d_generation; throws std::runtime_error
// when the cap is exhausted.
Int find_d(const GradedRing& ring, const Int& check_bound, const Int& bound);

struct MonomialIdeal {
  std::vector<LatticeVector> gens;  // minimal under monomial division in S
  Completeness completeness = Completeness::complete_to_bound;
  bool support_matches_locus = false;  // bounded radical comparison result
};

// Minimal monomial generators of the ideal spanned by the weight-(-sign*d)
// piece; support_matches_locus records whether, for every ring generator of
// weight with sign -sign, some multiple lies in the ideal (so the ideal cuts
// out exactly the coordinate locus where those generators vanish).
MonomialIdeal ideal_I(const GradedRing& ring, int sign, const Int& d,
                      const Int& bound);

struct BigradedGenerator {
  LatticeVector exponent;  // in Z^m x Z, last coordinate = proj_degree
  Int proj_degree = 0;
};

struct BigradedAlgebra {
  std::vector<BigradedGenerator> gens;
  Int piece_plus = 1;   // degree-n piece is R_{piece_plus*n} * R_{-piece_minus*n}
  Int piece_minus = 1;
  Int linearization_d = 1;
  Completeness completeness = Completeness::complete_to_bound;
  bool empty_to_bound = false;
};

// Section algebra of pieces R_{an} * R_{-bn}.  Accepted (a,b) shapes are
// (1,1), (d+1,1) and (1,d+1); the (1,1) case is computed with pieces
// R_{dn} * R_{-dn}, the algebra of products of the two d-linearized sides.
BigradedAlgebra blowup_algebra(const GradedRing& ring, const Int& a,
                               const Int& b, const Int& d, const Int& bound);

// Two-route quotient comparison through the rank-one auxiliary torus: adjoin
// z+ and z- of weights -n_plus and -n_minus, take invariants of the circle
// subgroup selected by the sample t (z+ and z- carry auxiliary weights +1 and
// -1), quotient the residual action, and compare generators with the quotient
// of the original ring at the effective character the sample induces.
struct MasterSample {
  Rat t;
  Int effective_character = 0;  // weight step of the compared quotient algebra
  bool matches = false;
};
struct MasterReport {
  std::vector<MasterSample> samples;
  bool all_match = false;
  Completeness completeness = Completeness::certified;
};
MasterReport master_space_check(const GradedRing& ring, const Int& n_plus,
                                const Int& n_minus,
                                const std::vector<Rat>& samples,
                                const Int& bound);

// Counts of distinct monomials in the monoid spanned by `gens`, indexed by
// coordinate sum 0..bound — a growth fingerprint for comparing presentations.
std::vector<Int> semigroup_growth_counts(const std::vector<LatticeVector>& gens,
                                         const Int& bound);

// Growth fingerprint refined by z-degree: counts[j][s] = number of distinct
// monomials of z-degree j whose remaining coordinates sum to s (j, s <= bound).
std::vector<std::vector<Int>> bigraded_counts(
    const std::vector<QuotientGenerator>& gens, const Int& bound);

// Checks that every minimal monomial of weight -sign*d is a product of
// exactly d/w monomials of weight -sign*w (single-weight generation of the
// degree-d piece).  Requires w | d.
bool ideal_power_check(const GradedRing& ring, int sign, const Int& w,
                       const Int& d, const Int& bound);

// Bounded probe of the pairing R_i (x) R_{-j} -> R_i * R_{-j}: for each
// product monomial, all factorizations into (weight-i) + (weight--j) parts
// should be connected by moves of weight-zero monomials across the pair.
// Counts multidegrees where the factorizations fall into >1 equivalence
// class (failures of one-dimensionality of the fibre).
struct PairingProbe {
  Int multidegrees_checked = 0;
  Int failures = 0;
  Completeness completeness = Completeness::complete_to_bound;
};
PairingProbe tensor_pairing_probe(const GradedRing& ring, const Int& i,
                                  const Int& j, const Int& bound);

}  // namespace vgit
