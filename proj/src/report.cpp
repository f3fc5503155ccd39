#include "vgit/report.hpp"

#include <cctype>
#include <set>

namespace vgit {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw SchemaError(message);
}

Int int_from_string(const std::string& s, const std::string& where) {
  std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (k == s.size()) fail(where + ": not an integer: '" + s + "'");
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      fail(where + ": not an integer: '" + s + "'");
  return Int(s);
}

Int parse_int(const json& v, const std::string& where) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return Int(v.get<long long>());
  if (v.is_string()) return int_from_string(v.get<std::string>(), where);
  fail(where + ": expected an integer");
}

std::size_t parse_index(const json& v, const std::string& where,
                        std::size_t max) {
  Int raw = parse_int(v, where);
  if (raw < 0 || raw > Int(max)) fail(where + ": out of range");
  return raw.convert_to<std::size_t>();
}

Rat parse_rat(const json& v, const std::string& where) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return Rat(parse_int(v, where));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s, where));
    Int num = int_from_string(s.substr(0, slash), where);
    Int den = int_from_string(s.substr(slash + 1), where);
    if (den == 0) fail(where + ": zero denominator");
    return Rat(num, den);
  }
  fail(where + ": expected a rational (integer or \"p/q\")");
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail(context + ": unknown key '" + it.key() + "'");
}

json locus_to_json(const CoordinateLocus& locus) {
  json indices = json::array();
  for (std::size_t i : locus.zero_set) indices.push_back(i);
  return json{{"zero_set", indices}};
}

json complement_to_json(const ComplementRecord& rec) {
  json removed = json::array();
  for (const auto& locus : rec.removed) removed.push_back(locus_to_json(locus));
  return json{{"removed", removed}};
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("problem file must be a JSON object");
  if (!j.contains("problem") || !j.at("problem").is_string())
    fail("missing string field 'problem'");
  const std::string kind = j.at("problem").get<std::string>();

  ProblemFile p;
  if (kind == "affine_torus") {
    p.kind = ProblemKind::affine_torus;
    check_keys(j,
               {"problem", "ambient_rank", "generators", "weights", "names",
                "bound", "d", "t_samples"},
               "affine_torus");
    if (!j.contains("ambient_rank"))
      fail("affine_torus: missing 'ambient_rank'");
    p.ambient_rank = parse_index(j.at("ambient_rank"), "ambient_rank", 64);
    if (p.ambient_rank == 0) fail("ambient_rank: must be positive");

    if (!j.contains("weights") || !j.at("weights").is_array())
      fail("affine_torus: missing array 'weights'");
    for (const auto& w : j.at("weights"))
      p.weights.push_back(parse_int(w, "weights"));

    if (j.contains("generators")) {
      const json& gens = j.at("generators");
      if (!gens.is_array()) fail("generators: expected an array");
      std::vector<LatticeVector> parsed;
      for (const auto& g : gens) {
        if (!g.is_array()) fail("generators: expected arrays of integers");
        LatticeVector v;
        for (const auto& entry : g)
          v.push_back(parse_int(entry, "generators"));
        if (v.size() != p.ambient_rank)
          fail("generators: each needs ambient_rank entries");
        parsed.push_back(std::move(v));
      }
      p.generators = std::move(parsed);
      if (p.generators->size() != p.weights.size())
        fail("weights: one entry per generator required");
    } else if (p.weights.size() != p.ambient_rank) {
      fail("weights: one entry per coordinate required");
    }

    if (j.contains("names")) {
      const json& names = j.at("names");
      if (!names.is_array()) fail("names: expected an array of strings");
      for (const auto& s : names) {
        if (!s.is_string()) fail("names: expected an array of strings");
        p.names.push_back(s.get<std::string>());
      }
      if (p.names.size() != p.weights.size())
        fail("names: one entry per generator required");
    }
  } else if (kind == "points_p1") {
    p.kind = ProblemKind::points_p1;
    check_keys(j, {"problem", "n", "clusters", "bound", "d", "t_samples"},
               "points_p1");
    if (!j.contains("n")) fail("points_p1: missing 'n'");
    p.n = parse_index(j.at("n"), "n", 64);
    if (p.n < 3) fail("n: need n > 2");
    if (j.contains("clusters")) {
      const json& clusters = j.at("clusters");
      if (!clusters.is_array()) fail("clusters: expected an array");
      std::vector<std::vector<std::size_t>> parsed;
      for (const auto& cluster : clusters) {
        if (!cluster.is_array())
          fail("clusters: expected arrays of indices");
        std::vector<std::size_t> one;
        for (const auto& entry : cluster)
          one.push_back(parse_index(entry, "clusters", p.n));
        parsed.push_back(std::move(one));
      }
      p.clusters = std::move(parsed);
    }
  } else {
    fail("unknown problem kind: '" + kind + "'");
  }

  if (j.contains("bound")) {
    Int b = parse_int(j.at("bound"), "bound");
    if (b <= 0) fail("bound: must be positive");
    p.bound = b;
  }
  if (j.contains("d")) {
    Int d = parse_int(j.at("d"), "d");
    if (d <= 0) fail("d: must be positive");
    p.d = d;
  }
  if (j.contains("t_samples")) {
    const json& samples = j.at("t_samples");
    if (!samples.is_array()) fail("t_samples: expected an array");
    for (const auto& t : samples)
      p.t_samples.push_back(parse_rat(t, "t_samples"));
  }
  return p;
}

GradedRing ring_from_problem(const ProblemFile& p) {
  if (p.kind != ProblemKind::affine_torus)
    fail("this operation needs an affine_torus problem");
  try {
    if (p.generators)
      return make_semigroup_ring(p.ambient_rank, *p.generators, p.weights,
                                 p.names);
    return make_polynomial_ring(p.weights, p.names);
  } catch (const std::invalid_argument& e) {
    fail(std::string("ring data rejected: ") + e.what());
  }
}

nlohmann::json problem_to_json(const ProblemFile& p) {
  json out;
  if (p.kind == ProblemKind::affine_torus) {
    out["problem"] = "affine_torus";
    out["ambient_rank"] = p.ambient_rank;
    json weights = json::array();
    for (const Int& w : p.weights) weights.push_back(json_of(w));
    out["weights"] = weights;
    if (p.generators) {
      json gens = json::array();
      for (const auto& g : *p.generators) gens.push_back(json_of(g));
      out["generators"] = gens;
    }
    if (!p.names.empty()) out["names"] = p.names;
  } else {
    out["problem"] = "points_p1";
    out["n"] = p.n;
    if (p.clusters) {
      json clusters = json::array();
      for (const auto& cluster : *p.clusters) {
        json one = json::array();
        for (std::size_t i : cluster) one.push_back(i);
        clusters.push_back(one);
      }
      out["clusters"] = clusters;
    }
  }
  if (p.bound) out["bound"] = json_of(*p.bound);
  if (p.d) out["d"] = json_of(*p.d);
  if (!p.t_samples.empty()) {
    json samples = json::array();
    for (const Rat& t : p.t_samples) samples.push_back(json_of(t));
    out["t_samples"] = samples;
  }
  return out;
}

std::string serialize_report(const ReportFile& r) {
  json j;
  j["echo"] = r.echo;
  j["results"] = r.results;
  j["flags"] = r.flags;
  j["version"] = r.version;
  return j.dump(2) + "\n";
}

ReportFile parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("report must be a JSON object");
  for (const char* key : {"echo", "results", "flags", "version"})
    if (!j.contains(key))
      fail(std::string("report: missing field '") + key + "'");
  if (!j.at("version").is_string()) fail("report: version must be a string");
  ReportFile out;
  out.echo = j.at("echo");
  out.results = j.at("results");
  out.flags = j.at("flags");
  out.version = j.at("version").get<std::string>();
  return out;
}

bool operator==(const ReportFile& a, const ReportFile& b) {
  return a.echo == b.echo && a.results == b.results && a.flags == b.flags &&
         a.version == b.version;
}

nlohmann::json json_of(const Int& v) { return to_string(v); }

nlohmann::json json_of(const Rat& v) { return to_string(v); }

nlohmann::json json_of(const LatticeVector& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(json_of(x));
  return out;
}

nlohmann::json json_of(const HilbertBasis& hb) {
  json elements = json::array();
  for (const auto& e : hb.elements) elements.push_back(json_of(e));
  return json{{"completeness", to_string(hb.completeness)},
              {"elements", elements}};
}

nlohmann::json json_of(const QuotientPresentation& q) {
  json gens = json::array();
  for (const auto& g : q.gens)
    gens.push_back(json{{"exponent", json_of(g.exponent)},
                        {"z_degree", json_of(g.z_degree)}});
  return json{{"kind", to_string(q.kind)},
              {"linearization_d", json_of(q.linearization_d)},
              {"completeness", to_string(q.completeness)},
              {"empty_to_bound", q.empty_to_bound},
              {"generators", gens}};
}

nlohmann::json json_of(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(json_of(g));
  return json{{"completeness", to_string(ideal.completeness)},
              {"generators", gens},
              {"support_matches_locus", ideal.support_matches_locus}};
}

nlohmann::json json_of(const BigradedAlgebra& alg) {
  json gens = json::array();
  for (const auto& g : alg.gens)
    gens.push_back(json{{"exponent", json_of(g.exponent)},
                        {"proj_degree", json_of(g.proj_degree)}});
  return json{{"completeness", to_string(alg.completeness)},
              {"empty_to_bound", alg.empty_to_bound},
              {"generators", gens},
              {"linearization_d", json_of(alg.linearization_d)},
              {"piece_minus", json_of(alg.piece_minus)},
              {"piece_plus", json_of(alg.piece_plus)}};
}

nlohmann::json json_of(const MasterReport& rep) {
  json samples = json::array();
  for (const auto& s : rep.samples)
    samples.push_back(json{{"effective_character",
                            json_of(s.effective_character)},
                           {"matches", s.matches},
                           {"t", json_of(s.t)}});
  return json{{"all_match", rep.all_match},
              {"completeness", to_string(rep.completeness)},
              {"samples", samples}};
}

nlohmann::json json_of(const FixedLoci& loci) {
  return json{{"plus", locus_to_json(loci.plus)},
              {"minus", locus_to_json(loci.minus)},
              {"zero", locus_to_json(loci.zero)}};
}

nlohmann::json json_of(const SemistableLoci& loci) {
  return json{{"s_zero", complement_to_json(loci.s_zero)},
              {"ss_minus", complement_to_json(loci.ss_minus)},
              {"ss_plus", complement_to_json(loci.ss_plus)},
              {"ss_zero", complement_to_json(loci.ss_zero)}};
}

nlohmann::json json_of(const CrossingReport& rep) {
  auto vec = [](const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(json_of(x));
    return out;
  };
  json out{{"degenerate", rep.degenerate},
           {"codim_plus", rep.codim_plus},
           {"codim_minus", rep.codim_minus},
           {"flip", rep.flip},
           {"weights_plus", vec(rep.weights_plus)},
           {"weights_minus", vec(rep.weights_minus)},
           {"fiber_plus", vec(rep.fiber_plus)},
           {"fiber_minus", vec(rep.fiber_minus)},
           {"fiber_plus_rendered", fiber_to_string(rep.fiber_plus)},
           {"fiber_minus_rendered", fiber_to_string(rep.fiber_minus)},
           {"note", rep.note}};
  out["quasi_free"] =
      rep.quasi_free ? json_of(*rep.quasi_free) : json(nullptr);
  return out;
}

nlohmann::json json_of(const WallDataPoints& wall) {
  auto vec = [](const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(json_of(x));
    return out;
  };
  return json{{"m", wall.m},
              {"t0", json_of(wall.t0)},
              {"component_count", json_of(wall.component_count)},
              {"normal_weights", vec(wall.normal_weights)},
              {"fiber_minus", vec(wall.fiber_minus)},
              {"fiber_plus", vec(wall.fiber_plus)},
              {"fiber_minus_rendered", fiber_to_string(wall.fiber_minus)},
              {"fiber_plus_rendered", fiber_to_string(wall.fiber_plus)},
              {"stabilizer", wall.stabilizer},
              {"boundary", wall.boundary}};
}

nlohmann::json json_of(const PoincarePolynomial& p) {
  json coeffs = json::array();
  for (const Int& c : p.coefficients) coeffs.push_back(json_of(c));
  return json{{"coefficients", coeffs}, {"rendered", to_string(p)}};
}

std::string format_monomial(const LatticeVector& exponent,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    if (exponent[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += i < names.size() ? names[i] : "z";
    if (exponent[i] != 1) out += "^" + to_string(exponent[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace vgit
