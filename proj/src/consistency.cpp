#include "dsaudit/consistency.hpp"

#include <algorithm>
#include <set>

#include "dsaudit/error.hpp"
#include "dsaudit/kernels.hpp"
#include "dsaudit/measures.hpp"

namespace dsaudit {

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::NonNegativity: return "non-negativity";
    case ConstraintKind::Normalization: return "normalization";
    case ConstraintKind::BeliefLower: return "belief lower bound";
    case ConstraintKind::PlausibilityUpper: return "plausibility upper bound";
    case ConstraintKind::PointValue: return "point value";
    case ConstraintKind::Custom: return "custom";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::ExactMatch: return "ExactMatch";
    case Verdict::Compatible: return "Compatible";
    case Verdict::Violation: return "Violation";
    case Verdict::DisjointViolation: return "DisjointViolation";
    case Verdict::Infeasible: return "Infeasible";
  }
  return "?";
}

void ProbabilityConstraintSystem::add_subset_constraint(const FocalSet& s, lp::Relation relation,
                                                        const Rational& rhs,
                                                        ConstraintSource source) {
  require_frame(frame, s);
  std::vector<Rational> coeffs(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if ((s.bits() >> i) & 1U) coeffs[i] = Rational(1);
  }
  constraints.push_back({std::move(coeffs), relation, rhs, source});
}

lp::Problem ProbabilityConstraintSystem::to_problem() const {
  lp::Problem problem{frame.size(), {}};
  problem.rows.reserve(constraints.size());
  for (const auto& c : constraints) problem.rows.push_back({c.coeffs, c.relation, c.rhs});
  return problem;
}

ProbabilityConstraintSystem simplex_system(const Frame& frame) {
  ProbabilityConstraintSystem system{frame, {}};
  for (std::size_t i = 0; i < frame.size(); ++i) {
    system.add_subset_constraint(frame.singleton(i), lp::Relation::GreaterEqual, Rational(0),
                                 {ConstraintKind::NonNegativity, ConstraintSource::kNoBody,
                                  frame.singleton(i).bits()});
  }
  system.add_subset_constraint(frame.universe(), lp::Relation::Equal, Rational(1),
                               {ConstraintKind::Normalization, ConstraintSource::kNoBody,
                                frame.universe_mask()});
  return system;
}

ProbabilityConstraintSystem build_constraints(std::span<const BodyOfEvidence> bodies) {
  if (bodies.empty()) {
    throw Error(ErrorKind::InternalConsistency, "build_constraints needs at least one body");
  }
  const Frame& frame = bodies.front().frame();
  auto system = simplex_system(frame);
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    if (!(bodies[k].frame() == frame)) {
      throw Error(ErrorKind::FrameMismatch, "bodies are defined on different frames");
    }
    const auto bel = measure_table(bodies[k], MeasureKind::Belief);
    const auto pl = kernels::plausibility_from_belief(bel.values);
    for (Mask s = 1; s < frame.universe_mask(); ++s) {
      const FocalSet set = frame.from_mask(s);
      const Rational& lower = bel.values[s];
      const Rational& upper = pl[s];
      if (lower == upper) {
        system.add_subset_constraint(set, lp::Relation::Equal, lower,
                                     {ConstraintKind::PointValue, k, s});
        continue;
      }
      if (lower.sign() > 0) {
        system.add_subset_constraint(set, lp::Relation::GreaterEqual, lower,
                                     {ConstraintKind::BeliefLower, k, s});
      }
      if (upper < Rational(1)) {
        system.add_subset_constraint(set, lp::Relation::LessEqual, upper,
                                     {ConstraintKind::PlausibilityUpper, k, s});
      }
    }
  }
  return system;
}

ProbabilityInterval probability_bounds(const ProbabilityConstraintSystem& system,
                                       const FocalSet& target) {
  require_frame(system.frame, target);
  const auto problem = system.to_problem();
  std::vector<Rational> objective(system.frame.size());
  for (std::size_t i = 0; i < objective.size(); ++i) {
    if ((target.bits() >> i) & 1U) objective[i] = Rational(1);
  }
  ProbabilityInterval out{target, Rational(0), Rational(0), false, {}, {}};
  auto low = lp::solve(problem, objective, lp::Sense::Minimize);
  if (low.status != lp::Status::Optimal) return out;
  auto high = lp::solve(problem, objective, lp::Sense::Maximize);
  if (high.status != lp::Status::Optimal) {
    throw Error(ErrorKind::InternalConsistency, "probability polytope is unbounded");
  }
  out.lower = std::move(low.value);
  out.upper = std::move(high.value);
  out.argmin = std::move(low.point);
  out.argmax = std::move(high.point);
  out.feasible = true;
  return out;
}

Verdict judge(const Rational& ds_lower, const Rational& ds_upper, const ProbabilityInterval& prob,
              bool equality_required) {
  if (!prob.feasible) return Verdict::Infeasible;
  const bool ds_point = ds_lower == ds_upper;
  const bool prob_point = prob.lower == prob.upper;
  if (ds_point && prob_point) {
    return ds_lower == prob.lower ? Verdict::ExactMatch : Verdict::Violation;
  }
  const bool overlap = std::max(ds_lower, prob.lower) <= std::min(ds_upper, prob.upper);
  if (!overlap) return ds_point ? Verdict::Violation : Verdict::DisjointViolation;
  if (equality_required && (ds_lower < prob.lower || ds_lower > prob.upper)) {
    return Verdict::Violation;
  }
  return Verdict::Compatible;
}

Verdict ConsistencyReport::overall() const {
  if (!feasible) return Verdict::Infeasible;
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::ExactMatch: return 0;
      case Verdict::Compatible: return 1;
      case Verdict::Violation: return 2;
      case Verdict::DisjointViolation: return 3;
      case Verdict::Infeasible: return 4;
    }
    return 4;
  };
  Verdict worst = Verdict::ExactMatch;
  for (const auto& e : elements) {
    if (rank(e.verdict) > rank(worst)) worst = e.verdict;
  }
  return worst;
}

const ElementAudit* ConsistencyReport::find(const FocalSet& s) const {
  for (const auto& e : elements) {
    if (e.subset == s) return &e;
  }
  return nullptr;
}

ConsistencyReport audit(std::span<const BodyOfEvidence> bodies) {
  if (bodies.size() < 2) {
    throw Error(ErrorKind::InternalConsistency, "audit needs at least two bodies");
  }
  auto combination = combine_many(bodies);
  const auto& combined = combination.combined;
  const Frame& frame = combined.frame();
  const auto cls = classify(combined);
  const auto system = build_constraints(bodies);
  const bool is_feasible = lp::feasible(system.to_problem());

  std::set<Mask> targets;
  for (const auto& e : combined.focal()) targets.insert(e.set.bits());
  for (std::size_t i = 0; i < frame.size(); ++i) targets.insert(Mask{1} << i);

  const bool tiled = cls.tag != StructureTag::General;
  std::vector<ElementAudit> elements;
  elements.reserve(targets.size());
  for (Mask m : targets) {
    const FocalSet s = frame.from_mask(m);
    ProbabilityInterval prob{s, Rational(0), Rational(0), false, {}, {}};
    if (is_feasible) prob = probability_bounds(system, s);
    Rational lo = belief(combined, s);
    Rational hi = plausibility(combined, s);
    const bool equality_required = tiled && !s.is_universe() && combined.find(s).has_value();
    const Verdict v = judge(lo, hi, prob, equality_required);
    elements.push_back({s, std::move(lo), std::move(hi), std::move(prob), v});
  }
  Rational kappa = combination.kappa;
  return {std::move(combination), cls, std::move(kappa), is_feasible, std::move(elements)};
}

}  // namespace dsaudit
