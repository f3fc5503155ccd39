// Command-line surface: reads a JSON problem file, runs one operation of the
// library, and emits a deterministic JSON (or plain-text) report.
//
// Exit codes: 0 ok, 1 engine error, 2 bad input or schema error,
// 3 truncated result without --allow-truncated, 4 corpus mismatch.

#include "CLI11.hpp"

#include "vgit/betti.hpp"
#include "vgit/corpus.hpp"
#include "vgit/graded_ring.hpp"
#include "vgit/lattice.hpp"
#include "vgit/loci.hpp"
#include "vgit/points.hpp"
#include "vgit/report.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace vgit;
using nlohmann::json;

struct Options {
  Int bound = 12;
  std::string format = "json";
  std::string out_path;
  bool allow_truncated = false;
};

// Report under construction: JSON results plus the text-mode rendering of
// the same values, and the worst completeness grade seen so far.
struct Output {
  ReportFile report;
  std::string text;
  Completeness grade = Completeness::certified;

  void merge(Completeness c) { grade = worst(grade, c); }
};

[[noreturn]] void schema_fail(const std::string& message) {
  throw SchemaError(message);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) schema_fail("cannot read problem file: " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Int int_arg(const std::string& s, const std::string& where) {
  std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (k == s.size()) schema_fail(where + ": not an integer: '" + s + "'");
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      schema_fail(where + ": not an integer: '" + s + "'");
  return Int(s);
}

Rat rat_arg(const std::string& s, const std::string& where) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_arg(s, where));
  Int num = int_arg(s.substr(0, slash), where);
  Int den = int_arg(s.substr(slash + 1), where);
  if (den == 0) schema_fail(where + ": zero denominator");
  return Rat(num, den);
}

Int resolve_bound(const std::optional<std::string>& flag) {
  if (flag) {
    Int b = int_arg(*flag, "--bound");
    if (b <= 0) schema_fail("--bound: must be positive");
    return b;
  }
  if (const char* env = std::getenv("VGIT_BOUND")) {
    Int b = int_arg(env, "VGIT_BOUND");
    if (b <= 0) schema_fail("VGIT_BOUND: must be positive");
    return b;
  }
  return Int(12);
}

// ---------------------------------------------------------------------------
// text-mode rendering
// ---------------------------------------------------------------------------

// Monomials print with the user's variable names only over the standard
// basis (exponents then are honest coordinate exponents); otherwise the raw
// exponent vector over the ring generators is shown.
std::string show_monomial(const LatticeVector& e, const GradedRing& ring) {
  if (ring.standard_basis && !ring.var_names.empty())
    return format_monomial(e, ring.var_names);
  return format_vector(e);
}

std::string show_locus(const CoordinateLocus& locus) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : locus.zero_set) {
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string show_complement(const ComplementRecord& rec) {
  if (rec.removed.empty()) return "removes nothing";
  std::string out = "removes";
  for (std::size_t i = 0; i < rec.removed.size(); ++i)
    out += (i ? " and " : " ") + show_locus(rec.removed[i]);
  return out;
}

void text_quotient(Output& o, const std::string& title,
                   const QuotientPresentation& q, const GradedRing& ring) {
  o.text += title + ": kind=" + to_string(q.kind) +
            " d=" + to_string(q.linearization_d) +
            " completeness=" + to_string(q.completeness) + "\n";
  if (q.empty_to_bound) o.text += "  (no positive-degree generator found)\n";
  for (const auto& g : q.gens)
    o.text += "  " + show_monomial(g.exponent, ring) +
              "   z-degree " + to_string(g.z_degree) + "\n";
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

Output cmd_hilbert(const ProblemFile& p, const Options& opt) {
  Output o;
  o.report.echo = problem_to_json(p);
  if (p.kind != ProblemKind::affine_torus)
    schema_fail("hilbert needs an affine_torus problem");
  GradedRing ring = ring_from_problem(p);
  DiophantineSystem sys;
  sys.num_vars = p.weights.size();
  sys.weights = p.weights;
  HilbertBasis hb = hilbert_basis(sys, opt.bound);
  o.merge(hb.completeness);
  o.report.results["hilbert_basis"] = json_of(hb);
  o.text += "hilbert_basis: completeness=" + std::string(to_string(hb.completeness)) + "\n";
  for (const auto& e : hb.elements)
    o.text += "  " + show_monomial(e, ring) + "\n";
  return o;
}

Output cmd_quotient(const ProblemFile& p, const Options& opt,
                    const std::string& lin,
                    const std::optional<std::string>& d_flag) {
  Output o;
  o.report.echo = problem_to_json(p);
  GradedRing ring = ring_from_problem(p);
  if (lin == "zero") {
    QuotientPresentation q = invariant_ring(ring, opt.bound);
    o.merge(q.completeness);
    o.report.results["invariant_ring"] = json_of(q);
    text_quotient(o, "invariant_ring", q, ring);
    return o;
  }
  Int d = 0;
  if (d_flag)
    d = int_arg(*d_flag, "--d");
  else if (p.d)
    d = *p.d;
  else
    d = trivially_graded(ring) ? Int(1) : find_d(ring, Int(6), opt.bound);
  if (d <= 0) schema_fail("--d: must be positive");
  QuotientPresentation q =
      proj_quotient(ring, lin == "plus" ? +1 : -1, d, opt.bound);
  o.merge(q.completeness);
  o.report.results["proj_quotient"] = json_of(q);
  text_quotient(o, "proj_quotient", q, ring);
  return o;
}

Output cmd_cross(const ProblemFile& p) {
  Output o;
  o.report.echo = problem_to_json(p);
  if (p.kind != ProblemKind::affine_torus)
    schema_fail("cross needs an affine_torus problem");
  if (p.generators)
    schema_fail("cross needs the standard basis: omit 'generators'");

  FixedLoci fixed = fixed_loci(p.weights);
  SemistableLoci semi = semistable_loci(p.weights);
  CrossingReport rep = classify_crossing(p.weights);
  o.report.results["fixed_loci"] = json_of(fixed);
  o.report.results["semistable_loci"] = json_of(semi);
  o.report.results["classify_crossing"] = json_of(rep);

  o.text += "fixed_loci: plus=" + show_locus(fixed.plus) +
            " minus=" + show_locus(fixed.minus) +
            " zero=" + show_locus(fixed.zero) + "\n";
  o.text += "semistable_loci:\n";
  o.text += "  ss_zero " + show_complement(semi.ss_zero) + "\n";
  o.text += "  s_zero " + show_complement(semi.s_zero) + "\n";
  o.text += "  ss_plus " + show_complement(semi.ss_plus) + "\n";
  o.text += "  ss_minus " + show_complement(semi.ss_minus) + "\n";
  o.text += "classify_crossing:\n";
  if (rep.degenerate) {
    o.text += "  degenerate\n";
  } else {
    o.text += "  codim_plus=" + std::to_string(rep.codim_plus) +
              " codim_minus=" + std::to_string(rep.codim_minus) +
              " flip=" + (rep.flip ? "yes" : "no") + "\n";
    o.text += "  fiber_plus=" + fiber_to_string(rep.fiber_plus) +
              " fiber_minus=" + fiber_to_string(rep.fiber_minus) + "\n";
    if (rep.quasi_free)
      o.text += "  quasi_free weight " + to_string(*rep.quasi_free) + "\n";
  }
  o.text += "  note: " + rep.note + "\n";
  return o;
}

Output cmd_blowup(const ProblemFile& p, const Options& opt,
                  const std::string& side,
                  const std::optional<std::string>& d_flag) {
  Output o;
  o.report.echo = problem_to_json(p);
  GradedRing ring = ring_from_problem(p);
  Int d = 0;
  if (d_flag)
    d = int_arg(*d_flag, "--d");
  else if (p.d)
    d = *p.d;
  else
    d = trivially_graded(ring) ? Int(1) : find_d(ring, Int(6), opt.bound);
  if (d <= 0) schema_fail("--d: must be positive");
  Int a = 1, b = 1;
  if (side == "plus") a = d + 1;
  if (side == "minus") b = d + 1;
  BigradedAlgebra alg = blowup_algebra(ring, a, b, d, opt.bound);
  o.merge(alg.completeness);
  o.report.results["blowup_algebra"] = json_of(alg);
  o.text += "blowup_algebra: pieces (" + to_string(alg.piece_plus) + "," +
            to_string(Int(-alg.piece_minus)) + ") d=" + to_string(d) +
            " completeness=" + to_string(alg.completeness) + "\n";
  if (alg.empty_to_bound) o.text += "  (no positive-degree generator found)\n";
  for (const auto& g : alg.gens)
    o.text += "  " + show_monomial(g.exponent, ring) + "   degree " +
              to_string(g.proj_degree) + "\n";
  return o;
}

Output cmd_points(const ProblemFile& p, const std::string& mode,
                  const std::optional<long long>& m_flag,
                  const std::optional<std::string>& t_flag) {
  Output o;
  o.report.echo = problem_to_json(p);
  if (p.kind != ProblemKind::points_p1)
    schema_fail("points needs a points_p1 problem");

  if (mode == "walls") {
    std::vector<Rat> walls = walls_points(p.n);
    json arr = json::array();
    o.text += "walls:";
    for (const Rat& t : walls) {
      arr.push_back(json_of(t));
      o.text += " " + to_string(t);
    }
    o.text += "\n";
    o.report.results["walls"] = arr;
    return o;
  }

  if (mode == "wall") {
    if (!m_flag) schema_fail("wall mode needs --m");
    if (*m_flag < 0) schema_fail("--m: must be nonnegative");
    WallDataPoints w = wall_geometry(p.n, static_cast<std::size_t>(*m_flag));
    o.report.results["wall_geometry"] = json_of(w);
    o.text += "wall_geometry: m=" + std::to_string(w.m) +
              " t0=" + to_string(w.t0) +
              " components=" + to_string(w.component_count) + "\n";
    o.text += "  fiber_minus=" + fiber_to_string(w.fiber_minus) +
              " fiber_plus=" + fiber_to_string(w.fiber_plus) +
              " stabilizer=" + w.stabilizer +
              (w.boundary ? " (boundary wall)" : "") + "\n";
    return o;
  }

  // check
  if (!p.clusters) schema_fail("check mode needs 'clusters' in the problem");
  std::vector<Rat> samples;
  if (t_flag)
    samples.push_back(rat_arg(*t_flag, "--t"));
  else
    samples = p.t_samples;
  if (samples.empty())
    schema_fail("check mode needs --t or 't_samples' in the problem");
  Configuration c;
  c.n = p.n;
  c.clusters = *p.clusters;
  json arr = json::array();
  for (const Rat& t : samples) {
    Stability s = is_semistable(c, t);
    arr.push_back(json{{"t", json_of(t)}, {"stability", to_string(s)}});
    o.text += "t = " + to_string(t) + ": " + to_string(s) + "\n";
  }
  o.report.results["is_semistable"] = arr;
  return o;
}

Output cmd_betti(const std::optional<ProblemFile>& p,
                 const std::optional<long long>& n_flag, bool symmetric) {
  Output o;
  std::size_t n = 0;
  if (p) {
    if (p->kind != ProblemKind::points_p1)
      schema_fail("betti needs a points_p1 problem");
    n = p->n;
    if (n_flag && static_cast<std::size_t>(*n_flag) != n)
      schema_fail("--n disagrees with the problem file");
    o.report.echo = problem_to_json(*p);
  } else {
    if (!n_flag) schema_fail("betti needs --n or a problem file");
    if (*n_flag < 3) schema_fail("--n: need n > 2");
    n = static_cast<std::size_t>(*n_flag);
    o.report.echo = json{{"problem", "points_p1"}, {"n", n}};
  }
  PoincarePolynomial ordered = poincare_ordered(n);
  o.report.results["poincare_ordered"] = json_of(ordered);
  o.text += "poincare_ordered: " + to_string(ordered) + "\n";
  if (symmetric) {
    PoincarePolynomial sym = poincare_symmetric(n);
    o.report.results["poincare_symmetric"] = json_of(sym);
    o.text += "poincare_symmetric: " + to_string(sym) + "\n";
  }
  return o;
}

int cmd_corpus(const Options& opt) {
  std::vector<CorpusCheck> checks = run_corpus(opt.bound);
  for (const auto& c : checks)
    std::cout << (c.passed ? "pass " : "FAIL ") << c.name
              << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
  if (all_passed(checks)) {
    std::cout << "corpus: " << checks.size() << " checks passed\n";
    return 0;
  }
  std::cerr << "corpus: mismatch\n";
  return 4;
}

int emit(Output o, const Options& opt) {
  o.report.flags = json{{"bound", json_of(opt.bound)},
                        {"format", opt.format},
                        {"allow_truncated", opt.allow_truncated},
                        {"completeness", to_string(o.grade)}};
  std::string body = opt.format == "json"
                         ? serialize_report(o.report)
                         : o.text + "completeness: " + to_string(o.grade) + "\n";
  if (opt.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) schema_fail("cannot write: " + opt.out_path);
    out << body;
  }
  if (o.grade == Completeness::truncated && !opt.allow_truncated) {
    std::cerr << "result truncated at bound " << opt.bound
              << "; pass --allow-truncated to accept\n";
    return 3;
  }
  return 0;
}

int fail_with(const std::string& kind, const std::string& message,
              int code) {
  json record = {{"error", {{"kind", kind}, {"message", message}}},
                 {"version", kVersion}};
  std::cout << record.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant rings, quotients, and wall crossings for "
               "one-parameter torus actions"};
  app.require_subcommand(1);

  std::optional<std::string> bound_flag;
  Options opt;
  std::string path, lin, side, mode;
  std::optional<std::string> d_flag, t_flag;
  std::optional<long long> m_flag, n_flag;
  bool symmetric = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--bound", bound_flag,
                    "search bound (default 12, or VGIT_BOUND)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opt.out_path, "write the report to a file");
    cmd->add_flag("--allow-truncated", opt.allow_truncated,
                  "exit 0 even when the result is truncated");
  };

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "minimal solutions of the invariant-weight system");
  hilbert->add_option("problem", path, "problem file (default: stdin)");
  add_common(hilbert);

  CLI::App* quotient =
      app.add_subcommand("quotient", "invariant ring or one-sided quotient");
  quotient->add_option("problem", path, "problem file (default: stdin)");
  quotient->add_option("--lin", lin, "linearization side")
      ->required()
      ->check(CLI::IsMember({"plus", "minus", "zero"}));
  quotient->add_option("--d", d_flag, "linearization step (default: found)");
  add_common(quotient);

  CLI::App* cross = app.add_subcommand(
      "cross", "fixed loci, semistable loci, and the crossing type");
  cross->add_option("problem", path, "problem file (default: stdin)");
  add_common(cross);

  CLI::App* blowup = app.add_subcommand(
      "blowup", "section algebra of the birational transform");
  blowup->add_option("problem", path, "problem file (default: stdin)");
  blowup->add_option("--side", side, "which side is blown up")
      ->required()
      ->check(CLI::IsMember({"plus", "minus", "zero"}));
  blowup->add_option("--d", d_flag, "linearization step (default: found)");
  add_common(blowup);

  CLI::App* points = app.add_subcommand(
      "points", "weighted point configurations on the line");
  points->add_option("problem", path, "problem file (default: stdin)");
  points->add_option("mode", mode, "walls | wall | check")
      ->required()
      ->check(CLI::IsMember({"walls", "wall", "check"}));
  points->add_option("--m", m_flag, "wall index for wall mode");
  points->add_option("--t", t_flag, "mass parameter for check mode (p/q)");
  add_common(points);

  CLI::App* betti =
      app.add_subcommand("betti", "Poincare polynomial of the quotient");
  betti->add_option("problem", path, "problem file (optional)");
  betti->add_option("--n", n_flag, "number of unit-mass points");
  betti->add_flag("--symmetric", symmetric, "also the unordered quotient");
  add_common(betti);

  CLI::App* corpus_cmd = app.add_subcommand(
      "corpus", "run the built-in regression corpus");
  add_common(corpus_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    opt.bound = resolve_bound(bound_flag);
    if (corpus_cmd->parsed()) return cmd_corpus(opt);

    Output o;
    if (hilbert->parsed()) {
      o = cmd_hilbert(parse_problem(read_input(path)), opt);
    } else if (quotient->parsed()) {
      o = cmd_quotient(parse_problem(read_input(path)), opt, lin, d_flag);
    } else if (cross->parsed()) {
      o = cmd_cross(parse_problem(read_input(path)));
    } else if (blowup->parsed()) {
      o = cmd_blowup(parse_problem(read_input(path)), opt, side, d_flag);
    } else if (points->parsed()) {
      o = cmd_points(parse_problem(read_input(path)), mode, m_flag, t_flag);
    } else if (betti->parsed()) {
      std::optional<ProblemFile> p;
      if (!path.empty()) p = parse_problem(read_input(path));
      o = cmd_betti(p, n_flag, symmetric);
    }
    return emit(std::move(o), opt);
  } catch (const SchemaError& e) {
    return fail_with("schema", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return fail_with("schema", e.what(), 2);
  } catch (const std::exception& e) {
    return fail_with("engine", e.what(), 1);
  }
}
