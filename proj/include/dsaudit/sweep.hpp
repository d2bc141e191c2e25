#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dsaudit/consistency.hpp"

namespace dsaudit {

/// PartitionXY:  A = {a}↦x, {b,c}↦1-x          B = {a,b}↦y, {c}↦1-y
/// QuasiXXbarY:  A = {a}↦x, {b,c}↦x̄, Ω↦1-x-x̄   B = {a,b}↦y, {c}↦1-y
enum class Family { PartitionXY, QuasiXXbarY, Custom };

const char* to_string(Family family);

struct FamilyParams {
  Rational x;
  Rational xbar;  // unused by PartitionXY
  Rational y;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

using BodyPair = std::pair<BodyOfEvidence, BodyOfEvidence>;
using CustomFamily = std::function<BodyPair(const Frame&, const FamilyParams&)>;

struct FamilySpec {
  Family family = Family::PartitionXY;
  FamilyParams params;
  CustomFamily custom;  // only for Family::Custom
};

/// The shared three-element frame {a, b, c} used by the built-in families.
const Frame& abc_frame();

/// Throws Error(ParameterOutOfRange) when the parameters violate the family's
/// ranges. Zero-mass entries are dropped from the bodies.
BodyPair instantiate(const FamilySpec& spec);

struct SymbolicCheck {
  std::map<Mask, Rational> closed_form;  // every decision-set element, zeros included
  CombinationResult combination;
};

/// Evaluates the family's closed-form combined masses and compares them with
/// combine(). Throws Error(InternalConsistency) on any mismatch and
/// Error(TotalConflict) when the point is not combinable.
SymbolicCheck symbolic_check(const FamilySpec& spec);

/// QuasiXXbarY only: does P(c) = 1 - y equal the combined mass on {c}?
/// At the single non-combinable point (x = 1, y = 0) the equation is taken
/// with its denominator cleared: (1-y)(1-x(1-y)) = (1-x)(1-y).
bool quasi_c_equality(const FamilyParams& params);

struct SweepPoint {
  FamilyParams params;
  Rational kappa;                           // conflict(A, B), also at κ = 1
  std::optional<ConsistencyReport> report;  // absent on total conflict
  std::optional<bool> c_equality;           // QuasiXXbarY only

  bool total_conflict() const { return !report.has_value(); }
  bool all_exact() const;
};

struct SweepResult {
  Family family;
  std::size_t grid = 0;
  std::vector<SweepPoint> points;  // canonical grid order

  /// Parameter points at which every audited element is ExactMatch.
  std::vector<FamilyParams> summary() const;
};

struct SweepOptions {
  /// x̄ values for QuasiXXbarY; ignored when full_grid is set.
  std::vector<Rational> xbar_slices = {Rational(0), Rational(1, 4), Rational(1, 2),
                                       Rational(3, 4), Rational(1)};
  /// Sweep x̄ over the same i/N grid as x and y.
  bool full_grid = false;
};

/// Grid of parameter points i/N in canonical order (x̄, then x, then y),
/// filtered by the family's ranges.
std::vector<FamilyParams> sweep_grid(Family family, std::size_t n, const SweepOptions& options = {});

SweepPoint evaluate_point(Family family, const FamilyParams& params);

/// Grid points are evaluated concurrently and stored by grid index.
SweepResult sweep(Family family, std::size_t n, const SweepOptions& options = {});
/// Single-threaded sweep, kept as the reference for sweep().
SweepResult sweep_reference(Family family, std::size_t n, const SweepOptions& options = {});

/// CSV with columns family,x,xbar,y,kappa,element,ds_lo,ds_hi,p_lo,p_hi,verdict
/// followed by '#' footer lines listing the all-ExactMatch points.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

/// Zadeh's example: (a↦99/100, c↦1/100) against (b↦99/100, c↦1/100).
/// Throws Error(InternalConsistency) unless the combined body is {c}↦1 with
/// κ = 9999/10000.
ConsistencyReport zadeh_fixture();
BodyPair zadeh_bodies();

}  // namespace dsaudit
