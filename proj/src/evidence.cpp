#include "dsaudit/evidence.hpp"

#include <algorithm>

#include "dsaudit/error.hpp"

namespace dsaudit {

BodyOfEvidence make_body(const Frame& frame, std::vector<FocalElement> assignments) {
  std::vector<FocalElement> focal;
  focal.reserve(assignments.size());
  Rational total;
  for (auto& entry : assignments) {
    require_frame(frame, entry.set);
    if (entry.mass.sign() < 0) {
      throw Error(ErrorKind::NegativeMass, "negative mass " + entry.mass.to_string() + " on " +
                                               format_set(frame, entry.set));
    }
    if (entry.mass.is_zero()) continue;
    if (entry.set.is_empty()) {
      throw Error(ErrorKind::MassOnEmptySet,
                  "the empty set cannot carry mass (got " + entry.mass.to_string() + ")");
    }
    total += entry.mass;
    focal.push_back(std::move(entry));
  }
  std::sort(focal.begin(), focal.end(),
            [](const FocalElement& a, const FocalElement& b) { return a.set < b.set; });
  const auto dup = std::adjacent_find(focal.begin(), focal.end(),
                                      [](const FocalElement& a, const FocalElement& b) {
                                        return a.set == b.set;
                                      });
  if (dup != focal.end()) {
    throw Error(ErrorKind::DuplicateFocalSet,
                "focal set " + format_set(frame, dup->set) + " is listed more than once");
  }
  if (total != Rational(1)) {
    throw Error(ErrorKind::MassSumNotOne, "masses sum to " + total.to_string() + ", expected 1");
  }
  return BodyOfEvidence(frame, std::move(focal));
}

BodyOfEvidence vacuous(const Frame& frame) {
  return make_body(frame, {{frame.universe(), Rational(1)}});
}

Rational BodyOfEvidence::mass(const FocalSet& s) const {
  require_frame(frame_, s);
  if (auto i = find(s)) return focal_[*i].mass;
  return Rational(0);
}

std::optional<std::size_t> BodyOfEvidence::find(const FocalSet& s) const {
  const auto it = std::lower_bound(focal_.begin(), focal_.end(), s,
                                   [](const FocalElement& e, const FocalSet& key) {
                                     return e.set < key;
                                   });
  if (it != focal_.end() && it->set == s) return static_cast<std::size_t>(it - focal_.begin());
  return std::nullopt;
}

const char* to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::Partition: return "Partition";
    case StructureTag::QuasiPartition: return "QuasiPartition";
    case StructureTag::General: return "General";
  }
  return "?";
}

StructureClass classify(const BodyOfEvidence& body) {
  const Mask omega = body.frame().universe_mask();
  Mask covered = 0;
  bool disjoint = true;
  Rational uncertainty;
  bool has_omega = false;
  for (const auto& e : body.focal()) {
    if (e.set.bits() == omega) {
      has_omega = true;
      uncertainty = e.mass;
      continue;
    }
    if ((covered & e.set.bits()) != 0) disjoint = false;
    covered |= e.set.bits();
  }
  // The non-Ω blocks must tile Ω on their own, so {Ω ↦ 1} is General.
  const bool tiles = disjoint && covered == omega;
  StructureTag tag = StructureTag::General;
  if (tiles) tag = has_omega ? StructureTag::QuasiPartition : StructureTag::Partition;
  return {tag, uncertainty};
}

}  // namespace dsaudit
