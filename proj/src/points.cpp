#include "vgit/points.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vgit {
namespace {

void validate_configuration(const Configuration& c) {
  if (c.n < 3)
    throw std::invalid_argument("configuration needs at least 4 points");
  std::vector<bool> seen(c.n + 1, false);
  std::size_t covered = 0;
  for (const auto& cluster : c.clusters) {
    if (cluster.empty())
      throw std::invalid_argument("empty cluster");
    for (std::size_t i : cluster) {
      if (i > c.n) throw std::invalid_argument("cluster index out of range");
      if (seen[i]) throw std::invalid_argument("index in two clusters");
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != c.n + 1)
    throw std::invalid_argument("clusters do not cover every index");
}

void validate_wall(std::size_t n, std::size_t m) {
  if (n < 3) throw std::invalid_argument("need n > 2");
  if (2 * m >= n)
    throw std::invalid_argument("no wall there: need n - 2m > 0");
}

}  // namespace

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::strictly_semistable: return "strictly_semistable";
    case Stability::unstable: return "unstable";
  }
  return "unstable";
}

Stability is_semistable(const Configuration& c, const Rat& t) {
  validate_configuration(c);
  if (t <= 0) throw std::invalid_argument("t must be positive");
  if (t > Rat(c.n)) throw std::invalid_argument("t must be at most n");
  // Compare twice the cluster mass against the total mass t + n.
  Rat total = t + Rat(c.n);
  bool equality = false;
  for (const auto& cluster : c.clusters) {
    Rat mass = 0;
    for (std::size_t i : cluster) mass += (i == 0) ? t : Rat(1);
    if (2 * mass > total) return Stability::unstable;
    if (2 * mass == total) equality = true;
  }
  return equality ? Stability::strictly_semistable : Stability::stable;
}

std::vector<Rat> walls_points(std::size_t n) {
  if (n < 3) throw std::invalid_argument("need n > 2");
  std::vector<Rat> out;
  for (std::size_t m = 0; 2 * m < n; ++m) out.emplace_back(Int(n - 2 * m));
  return out;
}

WallDataPoints wall_geometry(std::size_t n, std::size_t m) {
  validate_wall(n, m);
  WallDataPoints out;
  out.m = m;
  out.t0 = Rat(Int(n - 2 * m));
  out.component_count = binomial(n, m);
  for (std::size_t i = 0; i < m; ++i) out.normal_weights.emplace_back(-1);
  for (std::size_t i = 0; i + m + 1 < n; ++i) out.normal_weights.emplace_back(1);
  for (std::size_t i = 0; i < m; ++i) out.fiber_minus.emplace_back(1);
  for (std::size_t i = 0; i + m + 1 < n; ++i) out.fiber_plus.emplace_back(1);
  out.stabilizer = "k*";
  out.boundary = (m == 0);
  return out;
}

bool wall_zero_locus(std::size_t n, std::size_t m, const Configuration& c) {
  validate_wall(n, m);
  validate_configuration(c);
  if (c.n != n) throw std::invalid_argument("configuration size mismatch");
  if (c.clusters.size() != 2) return false;
  for (const auto& cluster : c.clusters)
    if (std::find(cluster.begin(), cluster.end(), std::size_t{0}) !=
        cluster.end())
      return cluster.size() == m + 1;
  return false;
}

}  // namespace vgit
