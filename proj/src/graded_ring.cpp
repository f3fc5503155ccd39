#include "vgit/graded_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace vgit {

namespace {

constexpr int kFindDCap = 12;
constexpr int kPrunePowerCap = 12;
constexpr int kChartShiftCap = 12;
constexpr int kChartWindowFactors = 6;
constexpr int kSupportPowerCap = 12;

LatticeVector padded(const LatticeVector& v, std::size_t extra) {
  LatticeVector out = v;
  out.insert(out.end(), extra, Int(0));
  return out;
}

LatticeVector unit_vector(std::size_t len, std::size_t pos) {
  LatticeVector out(len, Int(0));
  out[pos] = 1;
  return out;
}

// Unique minimal generating set of the monoid spanned by `cands`: an element
// stays exactly when it is not a sum of other candidates.
std::vector<LatticeVector> monoid_minimalize(std::vector<LatticeVector> cands) {
  std::set<LatticeVector> uniq(cands.begin(), cands.end());
  uniq.erase(LatticeVector(cands.empty() ? 0 : cands.front().size(), Int(0)));
  std::vector<LatticeVector> all(uniq.begin(), uniq.end());
  std::vector<LatticeVector> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<LatticeVector> others;
    others.reserve(all.size() - 1);
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!monoid_membership(all[i], others).member) kept.push_back(all[i]);
  }
  sort_grlex(kept);
  return kept;
}

struct AlgebraGens {
  std::vector<LatticeVector> gens;
  Completeness hb = Completeness::certified;
};

// Minimal generators of the monoid of solution-images for a linear system on
// generator multiplicities.
AlgebraGens algebra_generators(const std::vector<LatticeVector>& var_exponents,
                               const IntMatrix& equations, const Int& bound) {
  DiophantineSystem sys;
  sys.num_vars = var_exponents.size();
  sys.weights = equations.front();
  sys.extra.assign(equations.begin() + 1, equations.end());
  HilbertBasis hb = hilbert_basis(sys, bound);
  const std::size_t dim = var_exponents.empty() ? 0 : var_exponents.front().size();
  std::set<LatticeVector> images;
  for (const auto& sol : hb.elements) {
    LatticeVector img(dim, Int(0));
    for (std::size_t i = 0; i < sol.size(); ++i)
      if (sol[i] != 0) img = vec_add(img, vec_scale(sol[i], var_exponents[i]));
    if (!is_zero(img)) images.insert(img);
  }
  AlgebraGens out;
  out.gens = monoid_minimalize({images.begin(), images.end()});
  out.hb = hb.completeness;
  return out;
}

// All monoid elements with at most `factors` generator factors.
std::set<LatticeVector> monoid_window(const std::vector<LatticeVector>& gens,
                                      int factors) {
  std::set<LatticeVector> out;
  if (gens.empty()) return out;
  LatticeVector zero(gens.front().size(), Int(0));
  out.insert(zero);
  std::vector<LatticeVector> level{zero};
  for (int step = 0; step < factors; ++step) {
    std::vector<LatticeVector> next;
    for (const auto& v : level)
      for (const auto& g : gens) {
        LatticeVector w = vec_add(v, g);
        if (out.insert(w).second) next.push_back(w);
      }
    level = std::move(next);
    if (level.empty()) break;
  }
  return out;
}

// The localization of the monoid algebra at a degree-positive generator h has
// degree-zero part {m - k h : m in the monoid, z(m) = k z(h)}.  The pruned
// set presents the same localizations when every such element (within a
// bounded window) is reachable from the pruned generators after adding back
// finitely many copies of h.
bool charts_equal(const std::vector<LatticeVector>& full,
                  const std::vector<LatticeVector>& rest) {
  auto window = monoid_window(full, kChartWindowFactors);
  for (const auto& h : rest) {
    const Int zh = h.back();
    if (zh <= 0) continue;
    for (const auto& m : window) {
      if (is_zero(m)) continue;
      const Int zm = m.back();
      if (zm <= 0 || zm % zh != 0) continue;
      const Int k = zm / zh;
      bool found = false;
      for (int j = 0; j <= kChartShiftCap && !found; ++j) {
        Int shift = Int(j) - k;
        LatticeVector cand = vec_add(m, vec_scale(shift, h));
        if (!all_nonnegative(cand)) continue;
        if (monoid_membership(cand, rest).member) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

// Drops generators of positive z-degree (last coordinate) some power of which
// already lies in the monoid of the others — these do not change the
// projective spectrum — and verifies the localization windows afterwards,
// restoring generators if the verification fails.
std::vector<LatticeVector> prune_proj_redundant(std::vector<LatticeVector> gens) {
  sort_grlex(gens);
  std::vector<LatticeVector> pruned;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx = gens.size(); idx-- > 0;) {
      if (gens[idx].back() <= 0) continue;
      std::vector<LatticeVector> others;
      others.reserve(gens.size() - 1);
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != idx) others.push_back(gens[j]);
      bool redundant = false;
      for (int k = 2; k <= kPrunePowerCap && !redundant; ++k)
        if (monoid_membership(vec_scale(Int(k), gens[idx]), others).member)
          redundant = true;
      if (redundant) {
        pruned.push_back(gens[idx]);
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
    }
  }
  while (!pruned.empty()) {
    std::vector<LatticeVector> full = gens;
    full.insert(full.end(), pruned.begin(), pruned.end());
    if (charts_equal(full, gens)) break;
    gens.push_back(pruned.back());
    pruned.pop_back();
    sort_grlex(gens);
  }
  return gens;
}

std::vector<QuotientGenerator> to_quotient_gens(
    std::vector<LatticeVector> exps) {
  std::stable_sort(exps.begin(), exps.end(),
                   [](const LatticeVector& a, const LatticeVector& b) {
                     if (a.back() != b.back()) return a.back() < b.back();
                     return grlex_less(a, b);
                   });
  std::vector<QuotientGenerator> out;
  out.reserve(exps.size());
  for (auto& e : exps) {
    QuotientGenerator g;
    g.z_degree = e.back();
    g.exponent = std::move(e);
    out.push_back(std::move(g));
  }
  return out;
}

Completeness bounded_flag(Completeness hb) {
  return hb == Completeness::certified ? Completeness::certified
                                       : Completeness::complete_to_bound;
}

void validate_sign(int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
}

QuotientPresentation proj_quotient_honest(const GradedRing& ring, int sign,
                                          const Int& d, const Int& bound) {
  std::vector<LatticeVector> vars;
  IntMatrix eq(1);
  for (std::size_t i = 0; i < ring.generators.size(); ++i) {
    vars.push_back(padded(ring.generators[i], 1));
    eq[0].push_back(ring.gen_weights[i]);
  }
  vars.push_back(unit_vector(ring.ambient_rank + 1, ring.ambient_rank));
  eq[0].push_back(-Int(sign) * d);

  AlgebraGens alg = algebra_generators(vars, eq, bound);
  std::vector<LatticeVector> gens = prune_proj_redundant(alg.gens);

  QuotientPresentation out;
  out.kind = sign > 0 ? QuotientKind::proj_plus : QuotientKind::proj_minus;
  out.linearization_d = d;
  out.gens = to_quotient_gens(std::move(gens));
  out.empty_to_bound = true;
  for (const auto& g : out.gens)
    if (g.z_degree > 0) out.empty_to_bound = false;
  bool generated = verify_d_generation(ring, d, Int(6), bound);
  out.completeness = (alg.hb == Completeness::certified && generated)
                         ? Completeness::certified
                         : Completeness::complete_to_bound;
  return out;
}

}  // namespace

std::string to_string(QuotientKind kind) {
  switch (kind) {
    case QuotientKind::affine_zero: return "affine_zero";
    case QuotientKind::proj_plus: return "proj_plus";
    case QuotientKind::proj_minus: return "proj_minus";
    case QuotientKind::blowup: return "blowup";
  }
  return "unknown";
}

GradedRing make_polynomial_ring(const std::vector<Int>& weights,
                                std::vector<std::string> names) {
  if (weights.empty())
    throw std::invalid_argument("make_polynomial_ring: need at least one variable");
  if (!names.empty() && names.size() != weights.size())
    throw std::invalid_argument("make_polynomial_ring: name count mismatch");
  GradedRing ring;
  ring.ambient_rank = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ring.generators.push_back(unit_vector(weights.size(), i));
    ring.gen_weights.push_back(weights[i]);
    ring.weight_functional.push_back(Rat(weights[i]));
  }
  ring.var_names = std::move(names);
  ring.standard_basis = true;
  return ring;
}

GradedRing make_semigroup_ring(std::size_t ambient_rank,
                               std::vector<LatticeVector> generators,
                               std::vector<Int> gen_weights,
                               std::vector<std::string> names) {
  if (ambient_rank == 0)
    throw std::invalid_argument("make_semigroup_ring: ambient rank must be positive");
  if (generators.empty())
    throw std::invalid_argument("make_semigroup_ring: need at least one generator");
  if (generators.size() != gen_weights.size())
    throw std::invalid_argument("make_semigroup_ring: weight count mismatch");
  if (!names.empty() && names.size() != generators.size())
    throw std::invalid_argument("make_semigroup_ring: name count mismatch");
  auto describe = [&](std::size_t i) {
    std::string s = "generator " + std::to_string(i);
    if (i < names.size() && !names[i].empty()) s += " (" + names[i] + ")";
    return s;
  };
  std::set<LatticeVector> seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_rank)
      throw std::invalid_argument("make_semigroup_ring: " + describe(i) +
                                  " has wrong length");
    if (is_zero(generators[i]))
      throw std::invalid_argument("make_semigroup_ring: " + describe(i) +
                                  " is the unit monomial");
    if (!all_nonnegative(generators[i]))
      throw std::invalid_argument("make_semigroup_ring: " + describe(i) +
                                  " has a negative entry");
    if (!seen.insert(generators[i]).second)
      throw std::invalid_argument("make_semigroup_ring: " + describe(i) +
                                  " repeats an earlier generator");
  }

  // Incremental reduced row echelon form of the system  functional . g = w.
  struct EchelonRow {
    std::vector<Rat> coeffs;
    Rat rhs;
    std::size_t pivot;
  };
  std::vector<EchelonRow> rows;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<Rat> r(ambient_rank);
    for (std::size_t c = 0; c < ambient_rank; ++c) r[c] = Rat(generators[i][c]);
    Rat rhs(gen_weights[i]);
    for (const auto& row : rows) {
      Rat factor = r[row.pivot];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < ambient_rank; ++c)
        r[c] -= factor * row.coeffs[c];
      rhs -= factor * row.rhs;
    }
    std::size_t p = ambient_rank;
    for (std::size_t c = 0; c < ambient_rank; ++c)
      if (r[c] != 0) { p = c; break; }
    if (p == ambient_rank) {
      if (rhs != 0) {
        Rat forced = Rat(gen_weights[i]) - rhs;
        throw std::invalid_argument(
            "make_semigroup_ring: " + describe(i) + " has weight " +
            to_string(Int(gen_weights[i])) +
            " but additivity over the earlier generators forces " +
            to_string(forced));
      }
      continue;
    }
    Rat lead = r[p];
    for (std::size_t c = 0; c < ambient_rank; ++c) r[c] /= lead;
    rhs /= lead;
    for (auto& row : rows) {
      Rat factor = row.coeffs[p];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < ambient_rank; ++c)
        row.coeffs[c] -= factor * r[c];
      row.rhs -= factor * rhs;
    }
    rows.push_back({std::move(r), std::move(rhs), p});
  }

  GradedRing ring;
  ring.ambient_rank = ambient_rank;
  ring.generators = std::move(generators);
  ring.gen_weights = std::move(gen_weights);
  ring.weight_functional.assign(ambient_rank, Rat(0));
  for (const auto& row : rows) ring.weight_functional[row.pivot] = row.rhs;
  ring.var_names = std::move(names);
  ring.standard_basis = true;
  for (std::size_t i = 0; i < ring.generators.size() && ring.standard_basis; ++i)
    if (ring.generators[i] != unit_vector(ambient_rank, i))
      ring.standard_basis = false;
  if (ring.generators.size() != ambient_rank) ring.standard_basis = false;
  return ring;
}

bool trivially_graded(const GradedRing& ring) {
  for (const auto& w : ring.gen_weights)
    if (w != 0) return false;
  return true;
}

Int monomial_weight(const GradedRing& ring, const LatticeVector& exponent) {
  if (exponent.size() != ring.ambient_rank)
    throw std::invalid_argument("monomial_weight: wrong exponent length");
  Rat acc(0);
  for (std::size_t i = 0; i < exponent.size(); ++i)
    acc += ring.weight_functional[i] * Rat(exponent[i]);
  if (rat_den(acc) != 1)
    throw std::invalid_argument("monomial_weight: exponent outside the graded lattice");
  return rat_num(acc);
}

MonomialSet weight_monomials(const GradedRing& ring, const Int& weight,
                             const Int& bound) {
  const std::size_t r = ring.generators.size();
  // Suffix bounds on achievable weight per remaining factor.
  std::vector<Int> suffix_max(r + 1, Int(0)), suffix_min(r + 1, Int(0));
  for (std::size_t i = r; i-- > 0;) {
    suffix_max[i] = std::max(suffix_max[i + 1],
                             ring.gen_weights[i] > 0 ? ring.gen_weights[i] : Int(0));
    suffix_min[i] = std::min(suffix_min[i + 1],
                             ring.gen_weights[i] < 0 ? ring.gen_weights[i] : Int(0));
  }
  std::set<LatticeVector> out;
  LatticeVector cur(ring.ambient_rank, Int(0));
  std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t idx,
                                                       Int remaining,
                                                       Int cur_weight) {
    Int gap = weight - cur_weight;
    if (gap > remaining * suffix_max[idx]) return;
    if (gap < remaining * suffix_min[idx]) return;
    if (idx == r) {
      if (cur_weight == weight && !is_zero(cur)) out.insert(cur);
      return;
    }
    for (Int c = 0; c <= remaining; ++c) {
      if (c > 0) cur = vec_add(cur, ring.generators[idx]);
      rec(idx + 1, remaining - c, cur_weight + c * ring.gen_weights[idx]);
    }
    for (Int c = remaining; c > 0; --c) cur = vec_sub(cur, ring.generators[idx]);
  };
  rec(0, bound, Int(0));
  MonomialSet set;
  set.monomials.assign(out.begin(), out.end());
  sort_grlex(set.monomials);
  set.completeness = Completeness::complete_to_bound;
  return set;
}

MonomialSet minimal_weight_monomials(const GradedRing& ring, const Int& weight,
                                     const Int& bound) {
  MonomialSet all = weight_monomials(ring, weight, bound);
  MonomialSet out;
  out.completeness = all.completeness;
  for (const auto& u : all.monomials) {
    bool reducible = false;
    for (const auto& v : all.monomials) {
      if (v == u) continue;
      LatticeVector diff = vec_sub(u, v);
      if (!all_nonnegative(diff) || is_zero(diff)) continue;
      if (monoid_membership(diff, ring.generators).member) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.monomials.push_back(u);
  }
  return out;
}

QuotientPresentation invariant_ring(const GradedRing& ring, const Int& bound) {
  std::vector<LatticeVector> vars;
  IntMatrix eq(1);
  for (std::size_t i = 0; i < ring.generators.size(); ++i) {
    vars.push_back(padded(ring.generators[i], 1));
    eq[0].push_back(ring.gen_weights[i]);
  }
  AlgebraGens alg = algebra_generators(vars, eq, bound);
  QuotientPresentation out;
  out.kind = QuotientKind::affine_zero;
  out.linearization_d = 1;
  out.gens = to_quotient_gens(std::move(alg.gens));
  out.completeness = alg.hb;
  out.empty_to_bound = false;
  return out;
}

QuotientPresentation proj_quotient(const GradedRing& ring, int sign,
                                   const Int& d, const Int& bound) {
  validate_sign(sign);
  if (d < 1) throw std::invalid_argument("proj_quotient: d must be positive");
  if (trivially_graded(ring)) {
    // Trivial grading: the only character compatible with the action is zero,
    // so the section algebra is the full ring with a free auxiliary variable
    // and the quotient is the affine variety itself.
    QuotientPresentation out = invariant_ring(ring, bound);
    out.kind = sign > 0 ? QuotientKind::proj_plus : QuotientKind::proj_minus;
    out.linearization_d = d;
    std::vector<LatticeVector> exps;
    for (auto& g : out.gens) exps.push_back(std::move(g.exponent));
    exps.push_back(unit_vector(ring.ambient_rank + 1, ring.ambient_rank));
    out.gens = to_quotient_gens(std::move(exps));
    out.completeness = bounded_flag(out.completeness);
    out.empty_to_bound = false;
    return out;
  }
  return proj_quotient_honest(ring, sign, d, bound);
}

bool verify_d_generation(const GradedRing& ring, const Int& d,
                         const Int& check_bound, const Int& bound) {
  if (d < 1) throw std::invalid_argument("verify_d_generation: d must be positive");
  if (check_bound < 2)
    throw std::invalid_argument("verify_d_generation: check bound must be >= 2");
  MonomialSet plus = minimal_weight_monomials(ring, d, bound);
  MonomialSet minus = minimal_weight_monomials(ring, -d, bound);
  std::vector<LatticeVector> pieces = plus.monomials;
  pieces.insert(pieces.end(), minus.monomials.begin(), minus.monomials.end());
  for (Int i = 2; i <= check_bound; ++i) {
    for (int s : {1, -1}) {
      MonomialSet level = minimal_weight_monomials(ring, Int(s) * d * i, bound);
      for (const auto& m : level.monomials)
        if (!monoid_membership(m, pieces).member) return false;
    }
  }
  return true;
}

Int find_d(const GradedRing& ring, const Int& check_bound, const Int& bound) {
  for (int d = 1; d <= kFindDCap; ++d)
    if (verify_d_generation(ring, Int(d), check_bound, bound)) return Int(d);
  throw std::runtime_error(
      "find_d: no linearization step up to 12 generates the graded pieces "
      "within the verification bound");
}

MonomialIdeal ideal_I(const GradedRing& ring, int sign, const Int& d,
                      const Int& bound) {
  validate_sign(sign);
  if (d < 1) throw std::invalid_argument("ideal_I: d must be positive");
  MonomialSet mins = minimal_weight_monomials(ring, -Int(sign) * d, bound);
  MonomialIdeal out;
  out.gens = mins.monomials;
  out.completeness = mins.completeness;
  // The ideal should cut out exactly the vanishing locus of the ring
  // generators whose weight has the opposite sign: check that a multiple of
  // each such generator lands in the ideal.
  out.support_matches_locus = true;
  for (std::size_t i = 0; i < ring.generators.size(); ++i) {
    Int w = ring.gen_weights[i] * Int(sign);
    if (w >= 0) continue;  // generator does not vanish on the locus
    bool reached = false;
    for (int k = 1; k <= kSupportPowerCap && !reached; ++k) {
      LatticeVector power = vec_scale(Int(k), ring.generators[i]);
      for (const auto& u : out.gens) {
        LatticeVector diff = vec_sub(power, u);
        if (!all_nonnegative(diff)) continue;
        if (is_zero(diff) || monoid_membership(diff, ring.generators).member) {
          reached = true;
          break;
        }
      }
    }
    if (!reached) out.support_matches_locus = false;
  }
  return out;
}

BigradedAlgebra blowup_algebra(const GradedRing& ring, const Int& a,
                               const Int& b, const Int& d, const Int& bound) {
  if (d < 1) throw std::invalid_argument("blowup_algebra: d must be positive");
  Int A, B;
  if (a == 1 && b == 1) {
    A = d;
    B = d;
  } else if (a == d + 1 && b == 1) {
    A = d + 1;
    B = 1;
  } else if (a == 1 && b == d + 1) {
    A = 1;
    B = d + 1;
  } else {
    throw std::invalid_argument(
        "blowup_algebra: piece multipliers must be (1,1), (d+1,1) or (1,d+1)");
  }
  const std::size_t m = ring.ambient_rank;
  std::vector<LatticeVector> vars;
  IntMatrix eq(2);
  for (std::size_t i = 0; i < ring.generators.size(); ++i) {
    vars.push_back(padded(ring.generators[i], 1));
    eq[0].push_back(ring.gen_weights[i]);
    eq[1].push_back(Int(0));
  }
  for (std::size_t i = 0; i < ring.generators.size(); ++i) {
    vars.push_back(padded(ring.generators[i], 1));
    eq[0].push_back(Int(0));
    eq[1].push_back(ring.gen_weights[i]);
  }
  vars.push_back(unit_vector(m + 1, m));
  eq[0].push_back(-A);
  eq[1].push_back(B);

  AlgebraGens alg = algebra_generators(vars, eq, bound);
  std::vector<LatticeVector> gens = prune_proj_redundant(alg.gens);

  BigradedAlgebra out;
  out.piece_plus = A;
  out.piece_minus = B;
  out.linearization_d = d;
  out.completeness = bounded_flag(alg.hb);
  std::vector<QuotientGenerator> sorted = to_quotient_gens(std::move(gens));
  out.empty_to_bound = true;
  for (auto& g : sorted) {
    if (g.z_degree > 0) out.empty_to_bound = false;
    BigradedGenerator bg;
    bg.proj_degree = g.z_degree;
    bg.exponent = std::move(g.exponent);
    out.gens.push_back(std::move(bg));
  }
  return out;
}

MasterReport master_space_check(const GradedRing& ring, const Int& n_plus,
                                const Int& n_minus,
                                const std::vector<Rat>& samples,
                                const Int& bound) {
  if (n_plus <= n_minus)
    throw std::invalid_argument("master_space_check: need n_plus > n_minus");
  const std::size_t m = ring.ambient_rank;
  MasterReport report;
  report.all_match = true;
  report.completeness = Completeness::certified;
  for (const Rat& t : samples) {
    if (t < Rat(n_minus) || t > Rat(n_plus))
      throw std::invalid_argument(
          "master_space_check: sample outside [n_minus, n_plus]");
    Int p = rat_num(t), q = rat_den(t);
    Int alpha = n_plus * q - p;   // auxiliary weight balance toward z+
    Int beta = p - n_minus * q;   // auxiliary weight balance toward z-
    Int g = boost::multiprecision::gcd(alpha, beta);
    Int a0 = beta / g, b0 = alpha / g;  // minimal invariant z+^a0 z-^b0
    Int nu = a0 * n_plus + b0 * n_minus;  // character of the compared quotient

    // Route one: invariants of the extended ring under both circle actions.
    std::vector<LatticeVector> vars;
    IntMatrix eq(2);
    for (std::size_t i = 0; i < ring.generators.size(); ++i) {
      vars.push_back(padded(ring.generators[i], 2));
      eq[0].push_back(ring.gen_weights[i]);
      eq[1].push_back(Int(0));
    }
    vars.push_back(unit_vector(m + 2, m));      // z+
    eq[0].push_back(-n_plus);
    eq[1].push_back(alpha);
    vars.push_back(unit_vector(m + 2, m + 1));  // z-
    eq[0].push_back(-n_minus);
    eq[1].push_back(-beta);
    AlgebraGens alg = algebra_generators(vars, eq, bound);

    // Normalize (z+, z-) exponents to multiples of the minimal invariant.
    Int step = a0 + b0;
    std::vector<LatticeVector> master;
    for (const auto& e : alg.gens) {
      LatticeVector v(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m));
      Int zsum = e[m] + e[m + 1];
      v.push_back(zsum / step);
      master.push_back(std::move(v));
    }
    master = prune_proj_redundant(monoid_minimalize(std::move(master)));
    sort_grlex(master);

    // Route two: the quotient of the original ring at the same character.
    std::vector<LatticeVector> direct;
    Completeness direct_flag;
    if (nu == 0) {
      QuotientPresentation inv = invariant_ring(ring, bound);
      direct_flag = bounded_flag(inv.completeness);
      for (const auto& gq : inv.gens) direct.push_back(gq.exponent);
      direct.push_back(unit_vector(m + 1, m));  // the free invariant z+^a0 z-^b0
    } else {
      int sign = nu > 0 ? 1 : -1;
      QuotientPresentation pq =
          proj_quotient_honest(ring, sign, boost::multiprecision::abs(nu), bound);
      direct_flag = pq.completeness;
      for (const auto& gq : pq.gens) direct.push_back(gq.exponent);
    }
    sort_grlex(direct);

    MasterSample sample;
    sample.t = t;
    sample.effective_character = nu;
    sample.matches = (master == direct);
    report.samples.push_back(sample);
    if (!sample.matches) report.all_match = false;
    report.completeness = worst(report.completeness,
                                worst(bounded_flag(alg.hb), direct_flag));
  }
  return report;
}

std::vector<Int> semigroup_growth_counts(const std::vector<LatticeVector>& gens,
                                         const Int& bound) {
  std::size_t cap = static_cast<std::size_t>(bound);
  std::vector<Int> counts(cap + 1, Int(0));
  if (gens.empty()) {
    counts[0] = 1;
    return counts;
  }
  std::set<LatticeVector> reached;
  LatticeVector zero(gens.front().size(), Int(0));
  reached.insert(zero);
  std::vector<LatticeVector> frontier{zero};
  while (!frontier.empty()) {
    std::vector<LatticeVector> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        LatticeVector w = vec_add(v, g);
        if (coord_sum(w) > bound) continue;
        if (reached.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  for (const auto& v : reached)
    counts[static_cast<std::size_t>(coord_sum(v))] += 1;
  return counts;
}

std::vector<std::vector<Int>> bigraded_counts(
    const std::vector<QuotientGenerator>& gens, const Int& bound) {
  std::size_t cap = static_cast<std::size_t>(bound);
  std::vector<std::vector<Int>> counts(cap + 1,
                                       std::vector<Int>(cap + 1, Int(0)));
  std::vector<LatticeVector> exps;
  for (const auto& g : gens) exps.push_back(g.exponent);
  if (exps.empty()) {
    counts[0][0] = 1;
    return counts;
  }
  auto degrees = [&](const LatticeVector& v) {
    Int z = v.back();
    Int s = coord_sum(v) - z;
    return std::pair<Int, Int>(z, s);
  };
  std::set<LatticeVector> reached;
  LatticeVector zero(exps.front().size(), Int(0));
  reached.insert(zero);
  std::vector<LatticeVector> frontier{zero};
  while (!frontier.empty()) {
    std::vector<LatticeVector> next;
    for (const auto& v : frontier)
      for (const auto& g : exps) {
        LatticeVector w = vec_add(v, g);
        auto [z, s] = degrees(w);
        if (z > bound || s > bound) continue;
        if (reached.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  for (const auto& v : reached) {
    auto [z, s] = degrees(v);
    counts[static_cast<std::size_t>(z)][static_cast<std::size_t>(s)] += 1;
  }
  return counts;
}

bool ideal_power_check(const GradedRing& ring, int sign, const Int& w,
                       const Int& d, const Int& bound) {
  validate_sign(sign);
  if (w < 1 || d < 1 || d % w != 0)
    throw std::invalid_argument("ideal_power_check: need 0 < w dividing d");
  Int count = d / w;
  MonomialSet pieces = minimal_weight_monomials(ring, -Int(sign) * w, bound);
  MonomialSet targets = minimal_weight_monomials(ring, -Int(sign) * d, bound);
  std::vector<LatticeVector> tagged;
  for (const auto& p : pieces.monomials) {
    LatticeVector v = padded(p, 1);
    v.back() = 1;
    tagged.push_back(std::move(v));
  }
  for (const auto& tmon : targets.monomials) {
    LatticeVector v = padded(tmon, 1);
    v.back() = count;
    if (!monoid_membership(v, tagged).member) return false;
  }
  return true;
}

PairingProbe tensor_pairing_probe(const GradedRing& ring, const Int& i,
                                  const Int& j, const Int& bound) {
  if (i < 1 || j < 1)
    throw std::invalid_argument("tensor_pairing_probe: degrees must be positive");
  MonomialSet left = weight_monomials(ring, i, bound);
  MonomialSet right = weight_monomials(ring, -j, bound);
  std::set<LatticeVector> left_set(left.monomials.begin(), left.monomials.end());
  std::set<LatticeVector> right_set(right.monomials.begin(),
                                    right.monomials.end());
  QuotientPresentation inv = invariant_ring(ring, bound);
  std::vector<LatticeVector> movers;
  for (const auto& g : inv.gens)
    movers.emplace_back(g.exponent.begin(), g.exponent.end() - 1);

  // Only multidegrees that fit inside the enumeration window are probed:
  // every factor and every move then stays inside the window, so a class
  // split is a real obstruction and not a boundary artifact.
  std::map<LatticeVector, std::vector<std::pair<LatticeVector, LatticeVector>>>
      by_degree;
  for (const auto& a : left.monomials)
    for (const auto& b : right.monomials) {
      LatticeVector u = vec_add(a, b);
      if (coord_sum(u) <= bound) by_degree[u].emplace_back(a, b);
    }

  PairingProbe probe;
  probe.completeness = Completeness::complete_to_bound;
  for (const auto& [u, pairs] : by_degree) {
    (void)u;
    std::map<std::pair<LatticeVector, LatticeVector>, std::size_t> index;
    for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = k;
    std::vector<std::size_t> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [a, b] = pairs[k];
      for (const auto& z : movers) {
        LatticeVector a_down = vec_sub(a, z);
        if (all_nonnegative(a_down) && left_set.count(a_down)) {
          LatticeVector b_up = vec_add(b, z);
          auto it = index.find({a_down, b_up});
          if (it != index.end()) unite(k, it->second);
        }
        LatticeVector b_down = vec_sub(b, z);
        if (all_nonnegative(b_down) && right_set.count(b_down)) {
          LatticeVector a_up = vec_add(a, z);
          auto it = index.find({a_up, b_down});
          if (it != index.end()) unite(k, it->second);
        }
      }
    }
    std::set<std::size_t> roots;
    for (std::size_t k = 0; k < pairs.size(); ++k) roots.insert(find(k));
    probe.multidegrees_checked += 1;
    if (roots.size() > 1) probe.failures += 1;
  }
  return probe;
}

}  // namespace vgit
