#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vgit/corpus.hpp"
#include "vgit/report.hpp"

#include <set>

using namespace vgit;
using nlohmann::json;

namespace {

LatticeVector lv(std::initializer_list<long long> vals) {
  LatticeVector v;
  for (long long x : vals) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("parsing ring problems") {
  ProblemFile p = parse_problem(R"({
    "problem": "affine_torus",
    "ambient_rank": 3,
    "weights": [-1, 1, 2],
    "names": ["w", "x", "y"],
    "bound": "20",
    "d": 2,
    "t_samples": [1, "-1", "1/2"]
  })");
  CHECK(p.kind == ProblemKind::affine_torus);
  CHECK(p.ambient_rank == 3);
  CHECK(!p.generators.has_value());
  CHECK(p.weights == std::vector<Int>{Int(-1), Int(1), Int(2)});
  CHECK(p.names == std::vector<std::string>{"w", "x", "y"});
  CHECK(p.bound == Int(20));
  CHECK(p.d == Int(2));
  CHECK(p.t_samples == std::vector<Rat>{Rat(1), Rat(-1), Rat(1, 2)});

  ProblemFile q = parse_problem(R"({
    "problem": "affine_torus",
    "ambient_rank": 2,
    "generators": [[2, 0], [1, 1], [0, 2]],
    "weights": [2, 0, -2]
  })");
  REQUIRE(q.generators.has_value());
  CHECK(q.generators->size() == 3);
  CHECK((*q.generators)[1] == lv({1, 1}));
  CHECK(q.names.empty());
  CHECK(!q.bound.has_value());

  ProblemFile pts = parse_problem(R"({
    "problem": "points_p1",
    "n": 5,
    "clusters": [[0, 3], [1, 2, 4, 5]],
    "t_samples": ["7/2"]
  })");
  CHECK(pts.kind == ProblemKind::points_p1);
  CHECK(pts.n == 5);
  REQUIRE(pts.clusters.has_value());
  CHECK(pts.clusters->size() == 2);
  CHECK((*pts.clusters)[0] == std::vector<std::size_t>{0, 3});
  CHECK(pts.t_samples == std::vector<Rat>{Rat(7, 2)});
}

TEST_CASE("rejecting malformed problems") {
  auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(parse_problem(text), SchemaError);
  };
  rejects("not json at all");
  rejects(R"([1, 2, 3])");
  rejects(R"({"ambient_rank": 2, "weights": [1, -1]})");
  rejects(R"({"problem": "mystery"})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 1,
              "weights": [1], "surprise": true})");
  rejects(R"({"problem": "affine_torus", "weights": [1]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 0, "weights": []})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 99,
              "weights": [1]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1.5, 1]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": ["one", "1"]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "generators": [[1, 0, 0]], "weights": [1]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "generators": [[1, 0], [0, 1]], "weights": [1]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1, -1], "names": ["x"]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1, -1], "names": [1, 2]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1, -1], "bound": 0})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1, -1], "d": -1})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1, -1], "t_samples": ["1/0"]})");
  rejects(R"({"problem": "affine_torus", "ambient_rank": 2,
              "weights": [1, -1], "t_samples": [0.5]})");
  rejects(R"({"problem": "points_p1"})");
  rejects(R"({"problem": "points_p1", "n": 2})");
  rejects(R"({"problem": "points_p1", "n": 5, "clusters": [[0, 9]]})");
  rejects(R"({"problem": "points_p1", "n": 5, "weights": [1]})");
}

TEST_CASE("building rings from problems") {
  ProblemFile p = parse_problem(R"({
    "problem": "affine_torus",
    "ambient_rank": 3,
    "weights": [-1, 1, 2],
    "names": ["w", "x", "y"]
  })");
  GradedRing ring = ring_from_problem(p);
  GradedRing direct = make_polynomial_ring({Int(-1), Int(1), Int(2)},
                                           {"w", "x", "y"});
  CHECK(ring.standard_basis);
  CHECK(ring.ambient_rank == direct.ambient_rank);
  CHECK(ring.generators == direct.generators);
  CHECK(ring.gen_weights == direct.gen_weights);
  CHECK(ring.var_names == direct.var_names);

  ProblemFile q = parse_problem(R"({
    "problem": "affine_torus",
    "ambient_rank": 3,
    "generators": [[0,0,2],[1,0,2],[2,0,2],[0,1,1],[1,1,1]],
    "weights": [2, 0, -2, 1, -1]
  })");
  GradedRing semi = ring_from_problem(q);
  CHECK(!semi.standard_basis);
  CHECK(semi.generators.size() == 5);

  // a functional cannot give the same generator two different weights
  ProblemFile bad = parse_problem(R"({
    "problem": "affine_torus",
    "ambient_rank": 1,
    "generators": [[1], [1]],
    "weights": [1, 2]
  })");
  CHECK_THROWS_AS(ring_from_problem(bad), SchemaError);

  ProblemFile pts = parse_problem(R"({"problem": "points_p1", "n": 4})");
  CHECK_THROWS_AS(ring_from_problem(pts), SchemaError);
}

TEST_CASE("problem echo keeps exact integers") {
  ProblemFile p = parse_problem(R"({
    "problem": "affine_torus",
    "ambient_rank": 2,
    "weights": [1, -1],
    "bound": 30,
    "t_samples": ["1/2"]
  })");
  json echo = problem_to_json(p);
  CHECK(echo.at("problem") == "affine_torus");
  CHECK(echo.at("ambient_rank") == 2);
  CHECK(echo.at("weights") == json::array({"1", "-1"}));
  CHECK(echo.at("bound") == "30");
  CHECK(echo.at("t_samples") == json::array({"1/2"}));
  CHECK(!echo.contains("generators"));
  CHECK(!echo.contains("names"));
  CHECK(!echo.contains("d"));

  ProblemFile pts = parse_problem(R"({
    "problem": "points_p1", "n": 5, "clusters": [[0, 1], [2], [3], [4], [5]]
  })");
  json pecho = problem_to_json(pts);
  CHECK(pecho.at("n") == 5);
  CHECK(pecho.at("clusters").size() == 5);
}

TEST_CASE("report round trip is deterministic") {
  ReportFile r;
  r.echo = problem_to_json(parse_problem(
      R"({"problem": "affine_torus", "ambient_rank": 2, "weights": [1, -1]})"));
  GradedRing ring = make_polynomial_ring({Int(1), Int(-1)}, {"x", "y"});
  r.results["invariant_ring"] = json_of(invariant_ring(ring, Int(12)));
  r.results["fixed_loci"] = json_of(fixed_loci(ring.gen_weights));
  r.flags = {{"bound", "12"}, {"format", "json"}};

  std::string text = serialize_report(r);
  CHECK(text == serialize_report(r));
  CHECK(text.back() == '\n');
  ReportFile back = parse_report(text);
  CHECK(back == r);
  CHECK(back.version == std::string(kVersion));

  CHECK_THROWS_AS(parse_report("{"), SchemaError);
  CHECK_THROWS_AS(parse_report("[]"), SchemaError);
  CHECK_THROWS_AS(parse_report(R"({"echo": {}, "results": {}, "flags": {}})"),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_report(
          R"({"echo": {}, "results": {}, "flags": {}, "version": 1})"),
      SchemaError);
}

TEST_CASE("json encodings use decimal strings") {
  CHECK(json_of(Int(-12)) == json("-12"));
  CHECK(json_of(Rat(1, 2)) == json("1/2"));
  CHECK(json_of(Rat(3)) == json("3"));
  CHECK(json_of(lv({1, 0, -2})) == json::array({"1", "0", "-2"}));

  GradedRing ring = make_polynomial_ring({Int(-1), Int(1), Int(2)});
  json q = json_of(proj_quotient(ring, +1, Int(1), Int(12)));
  CHECK(q.at("kind") == "proj_plus");
  CHECK(q.at("linearization_d") == "1");
  CHECK(q.at("completeness") == "complete-to-bound");
  CHECK(q.at("empty_to_bound") == false);
  REQUIRE(q.at("generators").size() == 4);
  CHECK(q.at("generators")[0].at("exponent") ==
        json::array({"1", "1", "0", "0"}));
  CHECK(q.at("generators")[3].at("z_degree") == "2");

  json cross = json_of(classify_crossing({Int(1), Int(1), Int(-1), Int(-1)}));
  CHECK(cross.at("flip") == true);
  CHECK(cross.at("fiber_plus_rendered") == "P^1");
  CHECK(cross.at("quasi_free") == "1");
  json nq = json_of(classify_crossing({Int(-1), Int(1), Int(2)}));
  CHECK(nq.at("quasi_free").is_null());

  json wall = json_of(wall_geometry(5, 1));
  CHECK(wall.at("t0") == "3");
  CHECK(wall.at("component_count") == "5");
  CHECK(wall.at("fiber_plus_rendered") == "P^2");
  CHECK(wall.at("stabilizer") == "k*");

  json poly = json_of(poincare_ordered(5));
  CHECK(poly.at("coefficients") == json::array({"1", "0", "5", "0", "1"}));
  CHECK(poly.at("rendered") == "1 + 5t^2 + t^4");
}

TEST_CASE("monomial rendering") {
  std::vector<std::string> names = {"w", "x", "y"};
  CHECK(format_monomial(lv({2, 0, 1, 1}), names) == "w^2 y z");
  CHECK(format_monomial(lv({0, 0, 0}), names) == "1");
  CHECK(format_monomial(lv({1, 1, 1}), names) == "w x y");
  CHECK(format_monomial(lv({0, 3, 0}), names) == "x^3");
  CHECK(format_monomial(lv({2}), {}) == "z^2");
}

TEST_CASE("regression corpus passes") {
  std::vector<CorpusCheck> checks = run_corpus(Int(12));
  CHECK(checks.size() == 21);
  std::set<std::string> names;
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
    names.insert(c.name);
  }
  CHECK(names.size() == checks.size());
  CHECK(all_passed(checks));
  CHECK(corpus().size() == 6);
}
