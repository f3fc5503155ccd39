#include "vgit/corpus.hpp"

#include "vgit/betti.hpp"
#include "vgit/loci.hpp"
#include "vgit/points.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace vgit {
namespace {

LatticeVector lv(std::initializer_list<long long> vals) {
  LatticeVector v;
  for (long long x : vals) v.emplace_back(x);
  return v;
}

std::vector<LatticeVector> lvs(
    std::initializer_list<std::initializer_list<long long>> vecs) {
  std::vector<LatticeVector> out;
  for (const auto& v : vecs) out.push_back(lv(v));
  return out;
}

std::vector<Int> ws(std::initializer_list<long long> vals) {
  std::vector<Int> v;
  for (long long x : vals) v.emplace_back(x);
  return v;
}

std::vector<LatticeVector> exponents(const QuotientPresentation& q) {
  std::vector<LatticeVector> out;
  for (const auto& g : q.gens) out.push_back(g.exponent);
  return out;
}

std::string render(const std::vector<LatticeVector>& vecs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (i) out += ", ";
    out += format_vector(vecs[i]);
  }
  return out + "}";
}

// Brute-force minimal solutions of a homogeneous system, for cross-checking
// the solver: enumerate every nonzero nonnegative vector of coordinate sum
// at most `bound` satisfying all equations, then drop the ones dominating
// another solution.
void enumerate_solutions(const DiophantineSystem& sys, long long bound,
                         LatticeVector& current, std::size_t pos,
                         long long used,
                         std::vector<LatticeVector>& found) {
  if (pos == sys.num_vars) {
    bool zero = true;
    for (const Int& x : current)
      if (x != 0) zero = false;
    if (zero) return;
    Int w = 0;
    for (std::size_t i = 0; i < sys.num_vars; ++i)
      w += sys.weights[i] * current[i];
    if (w != 0) return;
    for (const auto& row : sys.extra) {
      Int e = 0;
      for (std::size_t i = 0; i < sys.num_vars; ++i) e += row[i] * current[i];
      if (e != 0) return;
    }
    found.push_back(current);
    return;
  }
  for (long long v = 0; v <= bound - used; ++v) {
    current[pos] = v;
    enumerate_solutions(sys, bound, current, pos + 1, used + v, found);
  }
  current[pos] = 0;
}

std::vector<LatticeVector> brute_minimal(const DiophantineSystem& sys,
                                         long long bound) {
  std::vector<LatticeVector> all;
  LatticeVector current(sys.num_vars, Int(0));
  enumerate_solutions(sys, bound, current, 0, 0, all);
  std::vector<LatticeVector> minimal;
  for (const auto& x : all) {
    bool reducible = false;
    for (const auto& y : all)
      if (y != x && dominates(x, y)) reducible = true;
    if (!reducible) minimal.push_back(x);
  }
  sort_grlex(minimal);
  return minimal;
}

// Partition enumeration for the points-model scans.
void for_each_partition(
    std::size_t count,
    const std::function<void(const std::vector<std::vector<std::size_t>>&)>&
        visit) {
  std::vector<std::vector<std::size_t>> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (next == count) {
      visit(parts);
      return;
    }
    std::size_t existing = parts.size();
    for (std::size_t j = 0; j < existing; ++j) {
      parts[j].push_back(next);
      rec(next + 1);
      parts[j].pop_back();
    }
    parts.push_back({next});
    rec(next + 1);
    parts.pop_back();
  };
  rec(0);
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

class Runner {
 public:
  explicit Runner(const Int& bound) : bound_(bound) {}

  void add(const std::string& name, bool passed,
           const std::string& detail = "") {
    checks_.push_back({name, passed, passed ? "" : detail});
  }

  // Runs a check body that returns a failure message ("" = pass) and
  // converts any exception into a failure.
  void run(const std::string& name,
           const std::function<std::string()>& body) {
    try {
      std::string detail = body();
      add(name, detail.empty(), detail);
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  const Int& bound() const { return bound_; }
  std::vector<CorpusCheck> take() { return std::move(checks_); }

 private:
  Int bound_;
  std::vector<CorpusCheck> checks_;
};

const GradedRing& ring_named(const std::string& name) {
  for (const auto& entry : corpus())
    if (entry.name == name) return entry.ring;
  throw std::logic_error("no corpus ring named " + name);
}

std::string check_exponents(const QuotientPresentation& got,
                            const std::vector<LatticeVector>& want) {
  if (exponents(got) == want) return "";
  return "generators " + render(exponents(got)) + ", wanted " + render(want);
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    out.push_back({"weighted_blowup",
                   make_polynomial_ring(ws({-1, 1, 2}), {"w", "x", "y"})});
    out.push_back({"conifold", make_polynomial_ring(ws({1, 1, -1, -1}),
                                                    {"v", "w", "x", "y"})});
    out.push_back(
        {"quadric_cone",
         make_semigroup_ring(
             3, lvs({{0, 0, 2}, {1, 0, 2}, {2, 0, 2}, {0, 1, 1}, {1, 1, 1}}),
             ws({2, 0, -2, 1, -1}), {"a2", "ab", "b2", "c", "d"})});
    out.push_back(
        {"balanced_pair", make_polynomial_ring(ws({1, -1}), {"x", "y"})});
    out.push_back(
        {"all_plus", make_polynomial_ring(ws({1, 1, 1}), {"x", "y", "z"})});
    out.push_back({"trivial", make_polynomial_ring(ws({0}), {"x"})});
    return out;
  }();
  return entries;
}

std::vector<CorpusCheck> run_corpus(const Int& bound) {
  Runner r(bound);

  // Weighted blow-up action (-1, 1, 2): invariants, both quotients, the
  // blow-up algebra, and the linearization step search.
  r.run("invariants_weighted_blowup", [&] {
    auto inv = invariant_ring(ring_named("weighted_blowup"), bound);
    std::string bad =
        check_exponents(inv, lvs({{1, 1, 0, 0}, {2, 0, 1, 0}}));
    if (!bad.empty()) return bad;
    if (inv.completeness != Completeness::certified)
      return std::string("not certified");
    return std::string();
  });
  r.run("proj_weighted_blowup", [&] {
    const GradedRing& g = ring_named("weighted_blowup");
    auto plus = proj_quotient(g, +1, Int(1), bound);
    std::string bad = check_exponents(
        plus, lvs({{1, 1, 0, 0}, {2, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 2}}));
    if (!bad.empty()) return "plus: " + bad;
    std::vector<Int> zdeg;
    for (const auto& q : plus.gens) zdeg.push_back(q.z_degree);
    if (zdeg != ws({0, 0, 1, 2}))
      return std::string("plus: z-degrees are not (0,0,1,2)");
    auto minus = proj_quotient(g, -1, Int(1), bound);
    bad = check_exponents(minus,
                          lvs({{1, 1, 0, 0}, {2, 0, 1, 0}, {1, 0, 0, 1}}));
    if (!bad.empty()) return "minus: " + bad;
    return std::string();
  });
  r.run("blowup_weighted_blowup", [&] {
    auto alg =
        blowup_algebra(ring_named("weighted_blowup"), Int(1), Int(1), Int(2),
                       bound);
    std::vector<LatticeVector> deg0, deg1;
    for (const auto& g : alg.gens) {
      if (g.proj_degree == 0) deg0.push_back(g.exponent);
      if (g.proj_degree == 1) deg1.push_back(g.exponent);
    }
    if (deg0 != lvs({{1, 1, 0, 0}, {2, 0, 1, 0}}))
      return "degree-0 part " + render(deg0);
    if (deg1 != lvs({{2, 0, 1, 1}, {2, 2, 0, 1}}))
      return "degree-1 part " + render(deg1);
    if (deg0.size() + deg1.size() != alg.gens.size())
      return std::string("unexpected higher-degree generators");
    return std::string();
  });
  r.run("find_d_weighted_blowup", [&] {
    const GradedRing& g = ring_named("weighted_blowup");
    Int d = find_d(g, Int(6), bound);
    if (d != 2) return "find_d = " + to_string(d);
    if (!verify_d_generation(g, Int(2), Int(6), bound))
      return std::string("d = 2 does not generate");
    return std::string();
  });

  // Conifold action (1, 1, -1, -1).
  r.run("invariants_conifold", [&] {
    auto inv = invariant_ring(ring_named("conifold"), bound);
    std::string bad = check_exponents(inv, lvs({{1, 0, 1, 0, 0},
                                                {1, 0, 0, 1, 0},
                                                {0, 1, 1, 0, 0},
                                                {0, 1, 0, 1, 0}}));
    if (!bad.empty()) return bad;
    if (lattice_rank(exponents(inv)) != 3)
      return std::string("expected one relation among four generators");
    return std::string();
  });
  r.run("proj_conifold", [&] {
    const GradedRing& g = ring_named("conifold");
    auto inv = exponents(invariant_ring(g, bound));
    auto plus = proj_quotient(g, +1, Int(1), bound);
    auto minus = proj_quotient(g, -1, Int(1), bound);
    auto added = [&](const QuotientPresentation& q) {
      std::vector<LatticeVector> out;
      for (const auto& gen : q.gens)
        if (gen.z_degree > 0) out.push_back(gen.exponent);
      return out;
    };
    if (exponents(plus) !=
        [&] { auto v = inv; for (auto& e : added(plus)) v.push_back(e); return v; }())
      return std::string("plus side does not extend the invariants");
    if (added(plus) != lvs({{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}}))
      return "plus adds " + render(added(plus));
    if (added(minus) != lvs({{0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}}))
      return "minus adds " + render(added(minus));
    return std::string();
  });
  r.run("crossing_conifold", [&] {
    CrossingReport rep = classify_crossing(ws({1, 1, -1, -1}));
    if (!rep.flip) return std::string("not a flip");
    if (fiber_to_string(rep.fiber_plus) != "P^1" ||
        fiber_to_string(rep.fiber_minus) != "P^1")
      return std::string("fibres are not (P^1, P^1)");
    if (!rep.quasi_free || *rep.quasi_free != 1)
      return std::string("not quasi-free of weight 1");
    return std::string();
  });

  // Quadric-cone semigroup model.
  r.run("invariants_quadric_cone", [&] {
    auto inv = invariant_ring(ring_named("quadric_cone"), bound);
    std::string bad = check_exponents(inv, lvs({{1, 0, 2, 0}, {1, 2, 2, 0}}));
    if (!bad.empty()) return bad;
    if (lattice_rank(exponents(inv)) != 2)
      return std::string("invariants are not rank 2");
    // free: one monomial per representable coordinate sum below the bound
    std::vector<LatticeVector> stripped = lvs({{1, 0, 2}, {1, 2, 2}});
    auto counts = semigroup_growth_counts(stripped, Int(12));
    std::set<long long> representable = {0, 3, 5, 6, 8, 9, 10, 11, 12};
    for (long long s = 0; s <= 12; ++s)
      if (counts[static_cast<std::size_t>(s)] !=
          Int(representable.count(s) ? 1 : 0))
        return "growth count at " + std::to_string(s) + " is " +
               to_string(counts[static_cast<std::size_t>(s)]);
    return std::string();
  });
  r.run("products_quadric_cone", [&] {
    const GradedRing& q = ring_named("quadric_cone");
    auto plus_piece = minimal_weight_monomials(q, Int(2), bound);
    auto minus_piece = minimal_weight_monomials(q, Int(-2), bound);
    std::set<LatticeVector> products;
    for (const auto& a : plus_piece.monomials)
      for (const auto& b : minus_piece.monomials)
        products.insert(vec_add(a, b));
    std::vector<LatticeVector> got(products.begin(), products.end());
    sort_grlex(got);
    if (got != lvs({{2, 0, 4}, {2, 2, 4}, {2, 4, 4}}))
      return "products " + render(got);
    // each product is a two-factor word in the invariant generators
    std::vector<LatticeVector> uv = lvs({{1, 0, 2}, {1, 2, 2}});
    for (const auto& m : got) {
      auto witness = monoid_membership(m, uv);
      Int factors = 0;
      for (const Int& k : witness.multiplicities) factors += k;
      if (!witness.member || factors != 2)
        return "no two-factor witness for " + format_vector(m);
    }
    return std::string();
  });
  r.run("blowup_quadric_cone", [&] {
    auto alg = blowup_algebra(ring_named("quadric_cone"), Int(1), Int(1),
                              Int(2), bound);
    std::vector<LatticeVector> deg1;
    for (const auto& g : alg.gens)
      if (g.proj_degree == 1) deg1.push_back(g.exponent);
    if (deg1.size() != 3) return "degree-1 part " + render(deg1);
    if (deg1 != lvs({{2, 0, 4, 1}, {2, 2, 4, 1}, {2, 4, 4, 1}}))
      return "degree-1 part " + render(deg1);
    return std::string();
  });

  // Points model.
  r.run("walls_points_5", [&] {
    if (walls_points(5) != std::vector<Rat>{Rat(5), Rat(3), Rat(1)})
      return std::string("wrong wall list for n = 5");
    return std::string();
  });
  r.run("wall_geometry_5_1", [&] {
    WallDataPoints w = wall_geometry(5, 1);
    if (w.t0 != Rat(3)) return std::string("t0 != 3");
    if (w.component_count != 5) return std::string("component count != 5");
    if (w.normal_weights != ws({-1, 1, 1, 1}))
      return std::string("normal weights are not (-1,+1,+1,+1)");
    if (w.fiber_minus.size() != 1 || w.fiber_plus.size() != 3)
      return std::string("fibres are not (P^0, P^2)");
    return std::string();
  });
  r.run("points_scan_5", [&] {
    std::string failure;
    const std::size_t n = 5;
    for (std::size_t m = 0; 2 * m < n && failure.empty(); ++m) {
      Rat t0 = Rat(Int(n - 2 * m));
      for_each_partition(n + 1, [&](const auto& parts) {
        if (!failure.empty()) return;
        Configuration c;
        c.n = n;
        c.clusters = parts;
        bool strict =
            is_semistable(c, t0) == Stability::strictly_semistable;
        if (parts.size() == 2 && strict != wall_zero_locus(n, m, c))
          failure = "pattern mismatch at m = " + std::to_string(m);
      });
    }
    return failure;
  });
  r.run("points_chamber_constancy", [&] {
    for (std::size_t n = 4; n <= 7; ++n) {
      std::vector<Rat> walls = walls_points(n);
      std::vector<Rat> bounds = {Rat(0)};
      for (auto it = walls.rbegin(); it != walls.rend(); ++it)
        bounds.push_back(*it);
      for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        Rat lo = bounds[k] + Rat(1, 4);
        Rat hi = bounds[k + 1] - Rat(1, 4);
        std::string failure;
        for_each_partition(n + 1, [&](const auto& parts) {
          if (!failure.empty()) return;
          Configuration c;
          c.n = n;
          c.clusters = parts;
          if (is_semistable(c, lo) != is_semistable(c, hi))
            failure = "jump inside a chamber of n = " + std::to_string(n);
        });
        if (!failure.empty()) return failure;
      }
    }
    return std::string();
  });
  r.run("points_monotone_inclusion", [&] {
    for (std::size_t n = 4; n <= 7; ++n) {
      for (const Rat& t0 : walls_points(n)) {
        std::vector<Rat> nearby;
        if (t0 - 1 > 0) nearby.push_back(t0 - 1);
        if (t0 + 1 <= Rat(Int(n))) nearby.push_back(t0 + 1);
        std::string failure;
        for_each_partition(n + 1, [&](const auto& parts) {
          if (!failure.empty()) return;
          Configuration c;
          c.n = n;
          c.clusters = parts;
          for (const Rat& t : nearby)
            if (is_semistable(c, t) != Stability::unstable &&
                is_semistable(c, t0) == Stability::unstable)
              failure = "semistable set shrank at a wall of n = " +
                        std::to_string(n);
        });
        if (!failure.empty()) return failure;
      }
    }
    return std::string();
  });

  // Betti calculus.
  r.run("betti_frozen", [&] {
    if (poincare_ordered(3) != make_poly({Int(1)}))
      return std::string("ordered(3) != 1");
    if (poincare_ordered(5) !=
        make_poly({Int(1), Int(0), Int(5), Int(0), Int(1)}))
      return std::string("ordered(5) != 1 + 5t^2 + t^4");
    if (poincare_symmetric(5) !=
        make_poly({Int(1), Int(0), Int(1), Int(0), Int(1)}))
      return std::string("symmetric(5) != 1 + t^2 + t^4");
    if (poincare_master(5) !=
        make_poly({Int(1), Int(0), Int(6), Int(0), Int(6), Int(0), Int(1)}))
      return std::string("master(5) != 1 + 6t^2 + 6t^4 + t^6");
    return std::string();
  });
  r.run("betti_properties", [&] {
    for (std::size_t n : {7, 9, 11}) {
      PoincarePolynomial ordered = poincare_ordered(n);
      if (!palindromic(ordered) || !nonnegative(ordered))
        return "ordered(" + std::to_string(n) + ") fails duality";
      if (poly_degree(ordered) != 2 * (n - 3))
        return "ordered(" + std::to_string(n) + ") has the wrong degree";
      if (coefficient(ordered, 0) != 1)
        return "ordered(" + std::to_string(n) + ") constant term != 1";
      PoincarePolynomial bundle =
          poly_mul(ordered, make_poly({Int(1), Int(0), Int(1)}));
      if (bundle != poincare_master(n))
        return "master(" + std::to_string(n) + ") is not ordered * (1+t^2)";
    }
    return std::string();
  });

  // Locus identities over every corpus weight vector.
  r.run("loci_identities", [&] {
    for (const auto& entry : corpus()) {
      FixedLoci f = fixed_loci(entry.ring.gen_weights);
      std::set<std::size_t> both = f.plus.zero_set;
      both.insert(f.minus.zero_set.begin(), f.minus.zero_set.end());
      if (f.zero.zero_set != both)
        return entry.name + ": fixed-locus union identity fails";
      SemistableLoci s = semistable_loci(entry.ring.gen_weights);
      if (!s.ss_zero.removed.empty())
        return entry.name + ": zero linearization removed something";
      if (s.ss_plus.removed != std::vector<CoordinateLocus>{f.minus} ||
          s.ss_minus.removed != std::vector<CoordinateLocus>{f.plus})
        return entry.name + ": one-sided complements are wrong";
      if (s.s_zero.removed !=
          std::vector<CoordinateLocus>{f.plus, f.minus})
        return entry.name + ": stable locus complement is wrong";
    }
    return std::string();
  });

  // Dimension equality across the wall on every ring with both sides.
  r.run("dimension_equality", [&] {
    for (const auto& entry : corpus()) {
      Int d = trivially_graded(entry.ring) ? Int(1)
                                           : find_d(entry.ring, Int(6), bound);
      auto plus = proj_quotient(entry.ring, +1, d, bound);
      auto minus = proj_quotient(entry.ring, -1, d, bound);
      if (plus.empty_to_bound || minus.empty_to_bound) continue;
      auto inv = invariant_ring(entry.ring, bound);
      std::size_t rank0 = lattice_rank(exponents(inv));
      if (lattice_rank(exponents(plus)) != rank0 + 1 ||
          lattice_rank(exponents(minus)) != rank0 + 1)
        return entry.name + ": quotient rank is not invariant rank + 1";
    }
    return std::string();
  });

  // Master-space two-route comparison.
  r.run("master_two_route", [&] {
    for (const char* name : {"weighted_blowup", "conifold"}) {
      const GradedRing& ring = ring_named(name);
      Int n_plus = find_d(ring, Int(6), bound);
      auto rep = master_space_check(ring, n_plus, -n_plus,
                                    {Rat(-1), Rat(0), Rat(1)}, bound);
      if (!rep.all_match)
        return std::string(name) + ": two-route comparison failed";
    }
    return std::string();
  });

  // Randomized solver cross-check against brute force.
  r.run("hilbert_random_oracle", [&] {
    std::mt19937 rng(20260819u);
    std::uniform_int_distribution<int> rank_dist(1, 5);
    std::uniform_int_distribution<int> weight_dist(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      DiophantineSystem sys;
      sys.num_vars = static_cast<std::size_t>(rank_dist(rng));
      for (std::size_t i = 0; i < sys.num_vars; ++i)
        sys.weights.emplace_back(weight_dist(rng));
      auto hb = hilbert_basis(sys, Int(12));
      auto expected = brute_minimal(sys, 12);
      std::vector<LatticeVector> got = hb.elements;
      sort_grlex(got);
      if (got != expected)
        return "trial " + std::to_string(trial) + ": solver disagrees on " +
               format_vector(sys.weights);
    }
    return std::string();
  });

  return r.take();
}

bool all_passed(const std::vector<CorpusCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace vgit
