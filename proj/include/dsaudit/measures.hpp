#pragma once

#include <vector>

#include "dsaudit/evidence.hpp"

namespace dsaudit {

enum class MeasureKind { Belief, Plausibility };

/// Belief or plausibility of every subset of a frame, indexed by mask.
struct MeasureTable {
  Frame frame;
  MeasureKind kind;
  std::vector<Rational> values;

  const Rational& operator[](const FocalSet& s) const;
};

Rational belief(const BodyOfEvidence& body, const FocalSet& s);
Rational plausibility(const BodyOfEvidence& body, const FocalSet& s);

MeasureTable measure_table(const BodyOfEvidence& body, MeasureKind kind);

/// Recovers the mass assignment from a belief table by Möbius inversion and
/// validates it as a body. Throws Error(NotABeliefFunction) naming the first
/// subset whose recovered mass is negative (or lands on ∅), or when the
/// recovered masses do not sum to one.
BodyOfEvidence mass_from_belief(const MeasureTable& table);

}  // namespace dsaudit
