#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsaudit/evidence.hpp"

namespace dsaudit {

/// (index into the left body's focal list, index into the right body's).
struct FocalPair {
  std::size_t left;
  std::size_t right;

  friend bool operator==(const FocalPair&, const FocalPair&) = default;
};

/// One pooled focal element of a combination: the intersection set, its
/// un-normalised product mass and the pairs that produced it.
struct ProvenanceBucket {
  FocalSet set;
  Rational unnormalized;
  std::vector<FocalPair> pairs;
};

struct CombinationStep {
  Rational kappa;             // conflict of this step alone
  Rational cumulative_kappa;  // 1 - prod(1 - kappa_i) over steps so far
  std::vector<ProvenanceBucket> provenance;  // ascending by mask
  std::vector<FocalPair> conflict_pairs;
};

struct CombinationResult {
  BodyOfEvidence combined;
  Rational kappa;  // cumulative conflict; equals the single-step κ for two bodies
  std::vector<ProvenanceBucket> provenance;  // of the last step
  std::vector<FocalPair> conflict_pairs;     // of the last step
  std::vector<CombinationStep> steps;
};

/// Conflict coefficient: total product mass on empty intersections.
Rational conflict(const BodyOfEvidence& a, const BodyOfEvidence& b);

/// Dempster's rule with one focal element per distinct non-empty
/// intersection. Throws Error(TotalConflict) when κ = 1.
CombinationResult combine(const BodyOfEvidence& a, const BodyOfEvidence& b);

/// Left fold of combine(). Total conflict at step k is reported with k in the
/// message (steps are 1-based, step 1 combines bodies 0 and 1).
CombinationResult combine_many(std::span<const BodyOfEvidence> bodies);

}  // namespace dsaudit
