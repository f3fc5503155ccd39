#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vgit/loci.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace vgit;

namespace {

std::vector<Int> weights(std::initializer_list<long long> ws) {
  std::vector<Int> out;
  for (long long w : ws) out.emplace_back(w);
  return out;
}

std::set<std::size_t> idx(std::initializer_list<std::size_t> is) {
  return std::set<std::size_t>(is);
}

// Random weight vectors exercising every sign pattern.
std::vector<std::vector<Int>> random_weight_vectors(std::size_t count) {
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<int> rank_dist(1, 6);
  std::uniform_int_distribution<int> weight_dist(-4, 4);
  std::vector<std::vector<Int>> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Int> w;
    int rank = rank_dist(rng);
    for (int i = 0; i < rank; ++i) w.emplace_back(weight_dist(rng));
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("fixed loci of diagonal actions") {
  SUBCASE("mixed weights") {
    FixedLoci f = fixed_loci(weights({-1, 1, 2}));
    CHECK(f.plus.zero_set == idx({0}));
    CHECK(f.minus.zero_set == idx({1, 2}));
    CHECK(f.zero.zero_set == idx({0, 1, 2}));
  }
  SUBCASE("all weights positive") {
    FixedLoci f = fixed_loci(weights({1, 1, 1}));
    CHECK(f.plus.zero_set.empty());  // every forward limit exists
    CHECK(f.minus.zero_set == idx({0, 1, 2}));
    CHECK(f.zero.zero_set == idx({0, 1, 2}));
  }
  SUBCASE("balanced two-plane weights") {
    FixedLoci f = fixed_loci(weights({1, 1, -1, -1}));
    CHECK(f.plus.zero_set == idx({2, 3}));
    CHECK(f.minus.zero_set == idx({0, 1}));
    CHECK(f.zero.zero_set == idx({0, 1, 2, 3}));
  }
  SUBCASE("zero-locus vanishing set is the union of the two sides") {
    for (const auto& w : random_weight_vectors(200)) {
      FixedLoci f = fixed_loci(w);
      std::set<std::size_t> both = f.plus.zero_set;
      both.insert(f.minus.zero_set.begin(), f.minus.zero_set.end());
      CHECK(f.zero.zero_set == both);
    }
  }
}

TEST_CASE("semistable loci follow the sign of the linearization") {
  SUBCASE("balanced pair") {
    SemistableLoci s = semistable_loci(weights({1, -1}));
    CHECK(s.ss_zero.removed.empty());
    REQUIRE(s.s_zero.removed.size() == 2);
    CHECK(s.s_zero.removed[0].zero_set == idx({1}));  // plus locus
    CHECK(s.s_zero.removed[1].zero_set == idx({0}));  // minus locus
  }
  SUBCASE("mixed weights") {
    SemistableLoci s = semistable_loci(weights({-1, 1, 2}));
    REQUIRE(s.ss_plus.removed.size() == 1);
    CHECK(s.ss_plus.removed[0].zero_set == idx({1, 2}));
    REQUIRE(s.ss_minus.removed.size() == 1);
    CHECK(s.ss_minus.removed[0].zero_set == idx({0}));
  }
  SUBCASE("zero linearization is never obstructed") {
    for (const auto& w : random_weight_vectors(50))
      CHECK(semistable_loci(w).ss_zero.removed.empty());
  }
  SUBCASE("the two one-sided conditions together cut the stable set") {
    for (const auto& w : random_weight_vectors(200)) {
      SemistableLoci s = semistable_loci(w);
      std::vector<CoordinateLocus> both = s.ss_plus.removed;
      both.insert(both.end(), s.ss_minus.removed.begin(),
                  s.ss_minus.removed.end());
      std::vector<CoordinateLocus> expected = s.s_zero.removed;
      auto locus_less = [](const CoordinateLocus& a, const CoordinateLocus& b) {
        return a.zero_set < b.zero_set;
      };
      std::sort(both.begin(), both.end(), locus_less);
      std::sort(expected.begin(), expected.end(), locus_less);
      CHECK(both == expected);
    }
  }
  SUBCASE("one-sided removals are the opposite fixed loci") {
    for (const auto& w : random_weight_vectors(200)) {
      FixedLoci f = fixed_loci(w);
      SemistableLoci s = semistable_loci(w);
      REQUIRE(s.ss_plus.removed.size() == 1);
      CHECK(s.ss_plus.removed[0] == f.minus);
      REQUIRE(s.ss_minus.removed.size() == 1);
      CHECK(s.ss_minus.removed[0] == f.plus);
    }
  }
}

TEST_CASE("limit points of the coordinate flow") {
  SUBCASE("no zero weights sends everything to the origin") {
    CHECK(limit_point(idx({1, 2}), weights({-1, 1, 2}), +1).empty());
  }
  SUBCASE("points of the fixed locus are their own limits") {
    CHECK(limit_point(idx({0, 2}), weights({0, 1, 0}), +1) == idx({0, 2}));
    CHECK(limit_point(idx({0, 2}), weights({0, 1, 0}), -1) == idx({0, 2}));
  }
  SUBCASE("diverging coordinates have no limit") {
    CHECK_THROWS_WITH_AS(limit_point(idx({0}), weights({-1, 1, 2}), +1),
                         "limit does not exist", std::invalid_argument);
    CHECK_THROWS_WITH_AS(limit_point(idx({1}), weights({-1, 1, 2}), -1),
                         "limit does not exist", std::invalid_argument);
  }
  SUBCASE("rejects bad arguments") {
    CHECK_THROWS_AS(limit_point(idx({5}), weights({1, 1}), +1),
                    std::invalid_argument);
    CHECK_THROWS_AS(limit_point(idx({0}), weights({1, 1}), 2),
                    std::invalid_argument);
  }
  SUBCASE("limit support is the zero-weight part of the support") {
    for (const auto& w : random_weight_vectors(200)) {
      // Take the full support; the limit exists iff no weight has the
      // wrong sign, and then keeps exactly the zero-weight coordinates.
      std::set<std::size_t> support;
      for (std::size_t i = 0; i < w.size(); ++i) support.insert(i);
      for (int dir : {+1, -1}) {
        bool exists = true;
        std::set<std::size_t> expected;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (Int(dir) * w[i] < 0) exists = false;
          if (w[i] == 0) expected.insert(i);
        }
        if (exists)
          CHECK(limit_point(support, w, dir) == expected);
        else
          CHECK_THROWS_AS(limit_point(support, w, dir),
                          std::invalid_argument);
      }
    }
  }
}

TEST_CASE("crossing classification") {
  SUBCASE("balanced two-plane crossing is a flip") {
    CrossingReport r = classify_crossing(weights({1, 1, -1, -1}));
    CHECK_FALSE(r.degenerate);
    CHECK(r.codim_plus == 2);
    CHECK(r.codim_minus == 2);
    CHECK(r.flip);
    CHECK(r.weights_plus == weights({1, 1}));
    CHECK(r.weights_minus == weights({-1, -1}));
    CHECK(fiber_to_string(r.fiber_plus) == "P^1");
    CHECK(fiber_to_string(r.fiber_minus) == "P^1");
    REQUIRE(r.quasi_free.has_value());
    CHECK(*r.quasi_free == 1);
  }
  SUBCASE("codimension-one side blocks the flip") {
    CrossingReport r = classify_crossing(weights({-1, 1, 2}));
    CHECK(r.codim_plus == 1);
    CHECK(r.codim_minus == 2);
    CHECK_FALSE(r.flip);
    CHECK(r.fiber_plus == weights({1, 2}));
    CHECK(fiber_to_string(r.fiber_plus) == "P(1,2)");
    CHECK(fiber_to_string(r.fiber_minus) == "P^0");
    CHECK_FALSE(r.quasi_free.has_value());
  }
  SUBCASE("one empty side reports the fibration over the affine quotient") {
    CrossingReport r = classify_crossing(weights({1, 1, 1}));
    CHECK(r.codim_plus == 0);
    CHECK(r.codim_minus == 3);
    CHECK_FALSE(r.flip);
    CHECK(r.weights_minus.empty());
    CHECK(r.fiber_minus.empty());
    CHECK(fiber_to_string(r.fiber_minus) == "empty");
    CHECK(r.note.find("fibration with fibre P(1,1,1)") != std::string::npos);
    CHECK(r.note.find("X mod - is empty") != std::string::npos);
    REQUIRE(r.quasi_free.has_value());
    CHECK(*r.quasi_free == 1);
  }
  SUBCASE("mirrored weights mirror the report") {
    CrossingReport r = classify_crossing(weights({-1, -2, -3}));
    CHECK(r.codim_plus == 3);
    CHECK(r.codim_minus == 0);
    CHECK(r.fiber_minus == weights({1, 2, 3}));
    CHECK(r.note.find("fibration with fibre P(1,2,3)") != std::string::npos);
    CHECK(r.note.find("X mod + is empty") != std::string::npos);
  }
  SUBCASE("all weights zero is degenerate") {
    CrossingReport r = classify_crossing(weights({0, 0}));
    CHECK(r.degenerate);
    CHECK_FALSE(r.flip);
    CHECK(r.weights_plus.empty());
    CHECK(r.weights_minus.empty());
    CHECK_FALSE(r.quasi_free.has_value());
  }
  SUBCASE("zero weights are transverse directions and do not count") {
    CrossingReport r = classify_crossing(weights({2, 0, -2, 0, 2}));
    CHECK(r.codim_plus == 1);
    CHECK(r.codim_minus == 2);
    CHECK_FALSE(r.flip);
    REQUIRE(r.quasi_free.has_value());
    CHECK(*r.quasi_free == 2);
    CHECK(fiber_to_string(r.fiber_plus) == "P^1");  // P(2,2) is P^1
  }
  SUBCASE("flip flag equals the brute-force sign count") {
    for (const auto& w : random_weight_vectors(300)) {
      CrossingReport r = classify_crossing(w);
      std::size_t pos = 0, neg = 0;
      for (const Int& wi : w) {
        if (wi > 0) ++pos;
        if (wi < 0) ++neg;
      }
      CHECK(r.flip == (pos >= 2 && neg >= 2));
      CHECK(r.codim_plus == neg);
      CHECK(r.codim_minus == pos);
      CHECK(r.fiber_plus.size() == pos);
      CHECK(r.fiber_minus.size() == neg);
      CHECK(r.degenerate == (pos + neg == 0));
    }
  }
  SUBCASE("quasi-free crossings have straight projective fibres") {
    for (const auto& w : random_weight_vectors(300)) {
      CrossingReport r = classify_crossing(w);
      if (r.degenerate) continue;
      bool uniform = true;
      Int common = 0;
      for (const Int& wi : w) {
        if (wi == 0) continue;
        Int a = wi < 0 ? Int(-wi) : wi;
        if (common == 0) common = a;
        if (a != common) uniform = false;
      }
      CHECK(r.quasi_free.has_value() == uniform);
      if (uniform) {
        CHECK(*r.quasi_free == common);
        if (!r.fiber_plus.empty())
          CHECK(fiber_to_string(r.fiber_plus) ==
                "P^" + std::to_string(r.fiber_plus.size() - 1));
        if (!r.fiber_minus.empty())
          CHECK(fiber_to_string(r.fiber_minus) ==
                "P^" + std::to_string(r.fiber_minus.size() - 1));
      }
    }
  }
}

TEST_CASE("fibre rendering") {
  CHECK(fiber_to_string({}) == "empty");
  CHECK(fiber_to_string(weights({1})) == "P^0");
  CHECK(fiber_to_string(weights({3})) == "P^0");
  CHECK(fiber_to_string(weights({1, 1, 1})) == "P^2");
  CHECK(fiber_to_string(weights({1, 2})) == "P(1,2)");
  CHECK(fiber_to_string(weights({2, 4})) == "P(1,2)");
  CHECK(fiber_to_string(weights({2, 2, 2})) == "P^2");
  CHECK(fiber_to_string(weights({2, 3, 5})) == "P(2,3,5)");
}
