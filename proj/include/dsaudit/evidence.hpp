#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dsaudit/frame.hpp"
#include "dsaudit/rational.hpp"

namespace dsaudit {

struct FocalElement {
  FocalSet set;
  Rational mass;

  friend bool operator==(const FocalElement&, const FocalElement&) = default;
};

/// Validated body of evidence: non-empty, distinct focal sets with strictly
/// positive masses summing to exactly one. Focal elements are kept sorted by
/// mask so that equality is structural.
class BodyOfEvidence {
 public:
  const Frame& frame() const { return frame_; }
  const std::vector<FocalElement>& focal() const { return focal_; }
  std::size_t size() const { return focal_.size(); }

  /// Mass of an arbitrary subset (zero when it is not focal).
  Rational mass(const FocalSet& s) const;
  /// Index of the focal element with this set, if any.
  std::optional<std::size_t> find(const FocalSet& s) const;

  friend bool operator==(const BodyOfEvidence& a, const BodyOfEvidence& b) {
    return a.frame_ == b.frame_ && a.focal_ == b.focal_;
  }

 private:
  BodyOfEvidence(Frame frame, std::vector<FocalElement> focal)
      : frame_(std::move(frame)), focal_(std::move(focal)) {}
  friend BodyOfEvidence make_body(const Frame&, std::vector<FocalElement>);

  Frame frame_;
  std::vector<FocalElement> focal_;
};

/// Validates and canonicalizes an assignment. Zero-mass entries are dropped.
/// Throws Error with MassOnEmptySet, NegativeMass, MassSumNotOne,
/// DuplicateFocalSet or FrameMismatch.
BodyOfEvidence make_body(const Frame& frame, std::vector<FocalElement> assignments);

/// Total-ignorance body {Ω ↦ 1}.
BodyOfEvidence vacuous(const Frame& frame);

enum class StructureTag { Partition, QuasiPartition, General };

const char* to_string(StructureTag tag);

struct StructureClass {
  StructureTag tag;
  Rational uncertainty_mass;  // mass on Ω, zero when Ω is not focal
};

StructureClass classify(const BodyOfEvidence& body);

}  // namespace dsaudit
