#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "dsaudit/combination.hpp"
#include "dsaudit/evidence.hpp"
#include "dsaudit/lp.hpp"

namespace dsaudit {

enum class ConstraintKind {
  NonNegativity,     // P(ω) >= 0
  Normalization,     // Σ P(ω) = 1
  BeliefLower,       // bel_body(S) <= P(S)
  PlausibilityUpper, // P(S) <= pl_body(S)
  PointValue,        // bel_body(S) = P(S) = pl_body(S)
  Custom,
};

const char* to_string(ConstraintKind kind);

struct ConstraintSource {
  static constexpr std::size_t kNoBody = std::numeric_limits<std::size_t>::max();

  ConstraintKind kind = ConstraintKind::Custom;
  std::size_t body = kNoBody;  // index into the bodies given to build_constraints
  Mask subset = 0;
};

/// coeffs · P  (relation)  rhs, with one coefficient per frame element.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  lp::Relation relation;
  Rational rhs;
  ConstraintSource source;
};

/// Linear constraints on the unknown point probabilities P(ω).
struct ProbabilityConstraintSystem {
  Frame frame;
  std::vector<LinearConstraint> constraints;

  /// Adds lower/upper/point bounds on P(S) = Σ_{ω∈S} P(ω).
  void add_subset_constraint(const FocalSet& s, lp::Relation relation, const Rational& rhs,
                             ConstraintSource source);

  lp::Problem to_problem() const;
};

/// The simplex (P >= 0, ΣP = 1) alone.
ProbabilityConstraintSystem simplex_system(const Frame& frame);

/// Simplex plus bel_k(S) <= P(S) <= pl_k(S) for every body k and every
/// proper non-empty subset S. Bounds implied by the simplex (bel = 0,
/// pl = 1) are omitted; bel = pl becomes a single equality.
ProbabilityConstraintSystem build_constraints(std::span<const BodyOfEvidence> bodies);

struct ProbabilityInterval {
  FocalSet subset;
  Rational lower;
  Rational upper;
  bool feasible = false;
  std::vector<Rational> argmin;  // distributions attaining the bounds
  std::vector<Rational> argmax;
};

/// Exact min and max of P(target) over the constraint polytope.
ProbabilityInterval probability_bounds(const ProbabilityConstraintSystem& system,
                                       const FocalSet& target);

enum class Verdict { ExactMatch, Compatible, Violation, DisjointViolation, Infeasible };

const char* to_string(Verdict verdict);

/// Compares a Dempster-Shafer interval [bel, pl] with a probability interval.
/// `equality_required` marks subsets on which the combined body demands
/// P(S) = bel(S): the non-Ω focal elements of a partition or quasi-partition.
/// - both intervals single points: ExactMatch if equal, else Violation;
/// - no overlap: Violation when the DS side is a point, else DisjointViolation;
/// - overlap, but bel(S) not attainable where equality is required: Violation;
/// - otherwise Compatible.
Verdict judge(const Rational& ds_lower, const Rational& ds_upper, const ProbabilityInterval& prob,
              bool equality_required);

struct ElementAudit {
  FocalSet subset;
  Rational ds_lower;  // belief of the combined body
  Rational ds_upper;  // plausibility of the combined body
  ProbabilityInterval prob;
  Verdict verdict;
};

struct ConsistencyReport {
  CombinationResult combination;
  StructureClass combined_class;
  Rational kappa;
  bool feasible = false;
  std::vector<ElementAudit> elements;  // ascending by mask

  /// Infeasible if the system is, else the worst element verdict
  /// (DisjointViolation > Violation > Compatible > ExactMatch).
  Verdict overall() const;
  const ElementAudit* find(const FocalSet& s) const;
};

/// Combines the bodies, then compares every focal element of the combined
/// body and every singleton against probability bounds derived from the
/// original bodies. Throws Error(TotalConflict) from the combination.
ConsistencyReport audit(std::span<const BodyOfEvidence> bodies);

}  // namespace dsaudit
