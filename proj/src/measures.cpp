#include "dsaudit/measures.hpp"

#include "dsaudit/error.hpp"
#include "dsaudit/kernels.hpp"

namespace dsaudit {

const Rational& MeasureTable::operator[](const FocalSet& s) const {
  require_frame(frame, s);
  return values[s.bits()];
}

Rational belief(const BodyOfEvidence& body, const FocalSet& s) {
  require_frame(body.frame(), s);
  Rational sum;
  for (const auto& e : body.focal()) {
    if (is_subset(e.set, s)) sum += e.mass;
  }
  return sum;
}

Rational plausibility(const BodyOfEvidence& body, const FocalSet& s) {
  require_frame(body.frame(), s);
  Rational sum;
  for (const auto& e : body.focal()) {
    if (!intersect(e.set, s).is_empty()) sum += e.mass;
  }
  return sum;
}

MeasureTable measure_table(const BodyOfEvidence& body, MeasureKind kind) {
  auto bel = kernels::belief_parallel(body);
  if (kind == MeasureKind::Belief) return {body.frame(), kind, std::move(bel)};
  return {body.frame(), kind, kernels::plausibility_from_belief(bel)};
}

BodyOfEvidence mass_from_belief(const MeasureTable& table) {
  if (table.kind != MeasureKind::Belief) {
    throw Error(ErrorKind::NotABeliefFunction, "mass_from_belief needs a belief table");
  }
  if (table.values.size() != table.frame.subset_count()) {
    throw Error(ErrorKind::NotABeliefFunction, "belief table does not cover the power set");
  }
  const auto mass = kernels::mobius_parallel(table.values);
  std::vector<FocalElement> focal;
  for (std::size_t s = 0; s < mass.size(); ++s) {
    const auto set = table.frame.from_mask(static_cast<Mask>(s));
    if (mass[s].sign() < 0 || (s == 0 && !mass[s].is_zero())) {
      throw Error(ErrorKind::NotABeliefFunction,
                  "recovered mass " + mass[s].to_string() + " on " +
                      format_set(table.frame, set) + " is not admissible");
    }
    if (!mass[s].is_zero()) focal.push_back({set, mass[s]});
  }
  try {
    return make_body(table.frame, std::move(focal));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotABeliefFunction, std::string("belief table rejected: ") + e.what());
  }
}

}  // namespace dsaudit
