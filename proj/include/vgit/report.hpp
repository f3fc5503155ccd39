#pragma once

#include "vgit/betti.hpp"
#include "vgit/graded_ring.hpp"
#include "vgit/lattice.hpp"
#include "vgit/loci.hpp"
#include "vgit/numeric.hpp"
#include "vgit/points.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgit {

inline constexpr const char* kVersion = "0.1.0";

// An input file that does not match the problem schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProblemKind { affine_torus, points_p1 };

// Parsed problem file.  affine_torus describes a graded ring (standard
// basis when generators is absent); points_p1 describes the heavy-point
// configuration model on n+1 points.
struct ProblemFile {
  ProblemKind kind = ProblemKind::affine_torus;

  // affine_torus
  std::size_t ambient_rank = 0;
  std::optional<std::vector<LatticeVector>> generators;
  std::vector<Int> weights;
  std::vector<std::string> names;  // optional display names

  // points_p1
  std::size_t n = 0;
  std::optional<std::vector<std::vector<std::size_t>>> clusters;

  // shared options
  std::optional<Int> bound;
  std::optional<Int> d;
  std::vector<Rat> t_samples;
};

// Throws SchemaError on malformed JSON, unknown keys, missing or ill-typed
// fields.  Integers are accepted as JSON integers or decimal strings;
// rationals also as "p/q" strings.
ProblemFile parse_problem(const std::string& text);

// Builds the ring described by an affine_torus problem; throws SchemaError
// for points problems or inconsistent ring data.
GradedRing ring_from_problem(const ProblemFile& p);

// Normalized echo of the problem (exact integers rendered as strings).
nlohmann::json problem_to_json(const ProblemFile& p);

// The output artifact: echo of the problem, results keyed by operation
// name, run flags, and the library version.  Serialization is
// deterministic: keys sorted, integers as decimal strings.
struct ReportFile {
  nlohmann::json echo;
  nlohmann::json results;
  nlohmann::json flags;
  std::string version = kVersion;
};

std::string serialize_report(const ReportFile& r);
ReportFile parse_report(const std::string& text);
bool operator==(const ReportFile& a, const ReportFile& b);

// JSON encoders.  All exact integers become decimal strings, rationals
// "p/q" strings; vectors become arrays of strings.
nlohmann::json json_of(const Int& v);
nlohmann::json json_of(const Rat& v);
nlohmann::json json_of(const LatticeVector& v);
nlohmann::json json_of(const HilbertBasis& hb);
nlohmann::json json_of(const QuotientPresentation& q);
nlohmann::json json_of(const MonomialIdeal& ideal);
nlohmann::json json_of(const BigradedAlgebra& alg);
nlohmann::json json_of(const MasterReport& rep);
nlohmann::json json_of(const FixedLoci& loci);
nlohmann::json json_of(const SemistableLoci& loci);
nlohmann::json json_of(const CrossingReport& rep);
nlohmann::json json_of(const WallDataPoints& wall);
nlohmann::json json_of(const PoincarePolynomial& p);

// "w^2 y z" style monomial rendering: per-coordinate names raised to the
// exponents, "1" for the empty product.  Use only with a standard-basis
// ring; `names` covers the plain coordinates, trailing coordinates beyond
// names.size() render as z (the auxiliary variable).
std::string format_monomial(const LatticeVector& exponent,
                            const std::vector<std::string>& names);

}  // namespace vgit
