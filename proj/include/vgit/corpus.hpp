#pragma once

#include "vgit/graded_ring.hpp"

#include <string>
#include <vector>

namespace vgit {

// Built-in example actions exercising every feature: a weighted blow-up
// with unequal weights, the conifold crossing, a non-free semigroup model
// over the quadric cone, and three degenerate sign patterns.
struct CorpusEntry {
  std::string name;
  GradedRing ring;
};
const std::vector<CorpusEntry>& corpus();

// One named check with its outcome; detail explains a failure.
struct CorpusCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Golden-value and property checks over the corpus: frozen generator sets
// for invariant rings, quotients and blow-ups, locus identities, the points
// model scan, the Betti closed forms, a randomized solver cross-check, and
// the two-route master comparison.
std::vector<CorpusCheck> run_corpus(const Int& bound);

bool all_passed(const std::vector<CorpusCheck>& checks);

}  // namespace vgit
