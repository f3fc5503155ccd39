#include "vgit/loci.hpp"

#include <algorithm>
#include <stdexcept>

namespace vgit {
namespace {

// Raw weighted form "P(a,b,...)" used in fibration notes.
std::string raw_weighted(const std::vector<Int>& fiber_weights) {
  std::string out = "P(";
  for (std::size_t i = 0; i < fiber_weights.size(); ++i) {
    if (i) out += ",";
    out += to_string(fiber_weights[i]);
  }
  return out + ")";
}

}  // namespace

FixedLoci fixed_loci(const std::vector<Int>& weights) {
  FixedLoci out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) out.plus.zero_set.insert(i);
    if (weights[i] > 0) out.minus.zero_set.insert(i);
    if (weights[i] != 0) out.zero.zero_set.insert(i);
  }
  return out;
}

SemistableLoci semistable_loci(const std::vector<Int>& weights) {
  FixedLoci fixed = fixed_loci(weights);
  SemistableLoci out;
  out.s_zero.removed = {fixed.plus, fixed.minus};
  out.ss_plus.removed = {fixed.minus};
  out.ss_minus.removed = {fixed.plus};
  return out;
}

std::set<std::size_t> limit_point(const std::set<std::size_t>& support,
                                  const std::vector<Int>& weights,
                                  int direction) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("direction must be +1 or -1");
  std::set<std::size_t> out;
  for (std::size_t i : support) {
    if (i >= weights.size())
      throw std::invalid_argument("support index out of range");
    // the coordinate blows up along the chosen flow
    if (Int(direction) * weights[i] < 0)
      throw std::invalid_argument("limit does not exist");
    if (weights[i] == 0) out.insert(i);
  }
  return out;
}

CrossingReport classify_crossing(const std::vector<Int>& weights) {
  CrossingReport report;
  for (const Int& w : weights) {
    if (w > 0) report.weights_plus.push_back(w);
    if (w < 0) report.weights_minus.push_back(w);
  }
  std::sort(report.weights_plus.begin(), report.weights_plus.end());
  std::sort(report.weights_minus.begin(), report.weights_minus.end());
  if (report.weights_plus.empty() && report.weights_minus.empty()) {
    report.degenerate = true;
    report.note = "all weights zero: the action is trivial and the three "
                  "quotients coincide with the variety itself";
    return report;
  }
  report.codim_plus = report.weights_minus.size();
  report.codim_minus = report.weights_plus.size();
  report.flip = report.codim_plus >= 2 && report.codim_minus >= 2;
  report.fiber_plus = report.weights_plus;
  for (const Int& w : report.weights_minus)
    report.fiber_minus.push_back(-w);
  std::sort(report.fiber_minus.begin(), report.fiber_minus.end());

  bool uniform = true;
  Int w0 = !report.fiber_plus.empty() ? report.fiber_plus.front()
                                      : report.fiber_minus.front();
  for (const Int& w : report.fiber_plus)
    if (w != w0) uniform = false;
  for (const Int& w : report.fiber_minus)
    if (w != w0) uniform = false;
  if (uniform) report.quasi_free = w0;

  if (report.codim_plus == 0)
    report.note = "X mod - is empty: X mod + -> X mod 0 is the fibration "
                  "with fibre " +
                  raw_weighted(report.fiber_plus);
  else if (report.codim_minus == 0)
    report.note = "X mod + is empty: X mod - -> X mod 0 is the fibration "
                  "with fibre " +
                  raw_weighted(report.fiber_minus);
  else if (report.flip)
    report.note = "flip: both fixed loci have codimension at least 2";
  else
    report.note = "not a flip: a fixed locus has codimension 1";
  return report;
}

std::string fiber_to_string(const std::vector<Int>& fiber_weights) {
  if (fiber_weights.empty()) return "empty";
  // P(c*a_0, ..., c*a_k) and P(a_0, ..., a_k) are the same variety.
  Int g = 0;
  for (const Int& w : fiber_weights) g = boost::multiprecision::gcd(g, w);
  std::vector<Int> reduced;
  for (const Int& w : fiber_weights) reduced.push_back(w / g);
  bool all_ones = true;
  for (const Int& w : reduced)
    if (w != 1) all_ones = false;
  if (all_ones)
    return "P^" + std::to_string(reduced.size() - 1);
  return raw_weighted(reduced);
}

}  // namespace vgit
