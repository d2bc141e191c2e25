#include "dsaudit/combination.hpp"

#include <map>

#include "dsaudit/error.hpp"

namespace dsaudit {

namespace {

void require_same_frame(const BodyOfEvidence& a, const BodyOfEvidence& b) {
  if (!(a.frame() == b.frame())) {
    throw Error(ErrorKind::FrameMismatch, "bodies are defined on different frames");
  }
}

CombinationStep pairwise(const BodyOfEvidence& a, const BodyOfEvidence& b) {
  require_same_frame(a, b);
  CombinationStep step;
  std::map<Mask, ProvenanceBucket> buckets;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ai = a.focal()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto& bj = b.focal()[j];
      const FocalSet meet = intersect(ai.set, bj.set);
      const Rational product = ai.mass * bj.mass;
      if (meet.is_empty()) {
        step.kappa += product;
        step.conflict_pairs.push_back({i, j});
        continue;
      }
      auto [it, inserted] = buckets.try_emplace(meet.bits(), ProvenanceBucket{meet, {}, {}});
      it->second.unnormalized += product;
      it->second.pairs.push_back({i, j});
    }
  }
  step.provenance.reserve(buckets.size());
  for (auto& [mask, bucket] : buckets) step.provenance.push_back(std::move(bucket));
  return step;
}

}  // namespace

Rational conflict(const BodyOfEvidence& a, const BodyOfEvidence& b) {
  require_same_frame(a, b);
  Rational kappa;
  for (const auto& ai : a.focal()) {
    for (const auto& bj : b.focal()) {
      if (intersect(ai.set, bj.set).is_empty()) kappa += ai.mass * bj.mass;
    }
  }
  return kappa;
}

CombinationResult combine(const BodyOfEvidence& a, const BodyOfEvidence& b) {
  CombinationStep step = pairwise(a, b);
  if (step.kappa == Rational(1)) {
    throw Error(ErrorKind::TotalConflict,
                "total conflict (kappa = 1): the supports of the two bodies are disjoint, so "
                "no decision set can be formed");
  }
  step.cumulative_kappa = step.kappa;
  const Rational scale = Rational(1) - step.kappa;
  std::vector<FocalElement> focal;
  focal.reserve(step.provenance.size());
  for (const auto& bucket : step.provenance) {
    focal.push_back({bucket.set, bucket.unnormalized / scale});
  }
  CombinationResult result{make_body(a.frame(), std::move(focal)), step.kappa, step.provenance,
                           step.conflict_pairs, {}};
  result.steps.push_back(std::move(step));
  return result;
}

CombinationResult combine_many(std::span<const BodyOfEvidence> bodies) {
  if (bodies.empty()) {
    throw Error(ErrorKind::InternalConsistency, "combine_many needs at least one body");
  }
  CombinationResult acc{bodies.front(), Rational(0), {}, {}, {}};
  Rational survival(1);  // product of (1 - kappa_i)
  for (std::size_t k = 1; k < bodies.size(); ++k) {
    CombinationResult next = [&] {
      try {
        return combine(acc.combined, bodies[k]);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TotalConflict) throw;
        throw Error(ErrorKind::TotalConflict,
                    "step " + std::to_string(k) + ": " + std::string(e.what()));
      }
    }();
    survival *= Rational(1) - next.kappa;
    auto step = std::move(next.steps.front());
    step.cumulative_kappa = Rational(1) - survival;
    acc.combined = std::move(next.combined);
    acc.kappa = step.cumulative_kappa;
    acc.provenance = step.provenance;
    acc.conflict_pairs = step.conflict_pairs;
    acc.steps.push_back(std::move(step));
  }
  return acc;
}

}  // namespace dsaudit
