#include "dsaudit/sweep.hpp"

#include <exception>
#include <ostream>

#include "dsaudit/error.hpp"

namespace dsaudit {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool in_unit(const Rational& v) { return v.sign() >= 0 && v <= kOne; }

void check_range(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::PartitionXY:
      if (!in_unit(p.x) || !in_unit(p.y)) {
        throw Error(ErrorKind::ParameterOutOfRange, "PartitionXY needs 0 <= x, y <= 1");
      }
      break;
    case Family::QuasiXXbarY:
      if (p.x.sign() < 0 || p.xbar.sign() < 0 || p.x + p.xbar > kOne || !in_unit(p.y)) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "QuasiXXbarY needs x, xbar >= 0, x + xbar <= 1 and 0 <= y <= 1");
      }
      break;
    case Family::Custom:
      if (!spec.custom) throw Error(ErrorKind::ParameterOutOfRange, "custom family has no builder");
      break;
  }
}

Mask bit(char label) { return Mask{1} << static_cast<unsigned>(label - 'a'); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::PartitionXY: return "PartitionXY";
    case Family::QuasiXXbarY: return "QuasiXXbarY";
    case Family::Custom: return "Custom";
  }
  return "?";
}

const Frame& abc_frame() {
  static const Frame frame = make_frame({"a", "b", "c"});
  return frame;
}

BodyPair instantiate(const FamilySpec& spec) {
  check_range(spec);
  const Frame& f = abc_frame();
  const auto& p = spec.params;
  if (spec.family == Family::Custom) return spec.custom(f, p);

  auto b = make_body(f, {{f.from_mask(bit('a') | bit('b')), p.y},
                         {f.from_mask(bit('c')), kOne - p.y}});
  if (spec.family == Family::PartitionXY) {
    auto a = make_body(f, {{f.from_mask(bit('a')), p.x},
                           {f.from_mask(bit('b') | bit('c')), kOne - p.x}});
    return {std::move(a), std::move(b)};
  }
  auto a = make_body(f, {{f.from_mask(bit('a')), p.x},
                         {f.from_mask(bit('b') | bit('c')), p.xbar},
                         {f.universe(), kOne - p.x - p.xbar}});
  return {std::move(a), std::move(b)};
}

SymbolicCheck symbolic_check(const FamilySpec& spec) {
  if (spec.family == Family::Custom) {
    throw Error(ErrorKind::InternalConsistency, "custom families have no closed form");
  }
  const auto [a, b] = instantiate(spec);
  auto combination = combine(a, b);
  const auto& p = spec.params;
  const Rational denom = kOne - p.x * (kOne - p.y);

  std::map<Mask, Rational> closed;
  if (spec.family == Family::PartitionXY) {
    closed[bit('a')] = p.x * p.y / denom;
    closed[bit('b')] = (kOne - p.x) * p.y / denom;
    closed[bit('c')] = (kOne - p.x) * (kOne - p.y) / denom;
  } else {
    closed[bit('a')] = p.x * p.y / denom;
    closed[bit('b')] = p.xbar * p.y / denom;
    closed[bit('c')] = (kOne - p.x) * (kOne - p.y) / denom;
    closed[bit('a') | bit('b')] = (kOne - p.x - p.xbar) * p.y / denom;
  }

  const Frame& f = abc_frame();
  for (const auto& [mask, value] : closed) {
    const Rational got = combination.combined.mass(f.from_mask(mask));
    if (got != value) {
      throw Error(ErrorKind::InternalConsistency,
                  "closed form for " + format_set(f, f.from_mask(mask)) + " gives " +
                      value.to_string() + " but combine() gives " + got.to_string());
    }
  }
  // Every combined focal element must be covered by a closed form.
  for (const auto& e : combination.combined.focal()) {
    if (!closed.contains(e.set.bits())) {
      throw Error(ErrorKind::InternalConsistency,
                  "combine() produced unexpected focal set " + format_set(f, e.set));
    }
  }
  return {std::move(closed), std::move(combination)};
}

bool quasi_c_equality(const FamilyParams& params) {
  const FamilySpec spec{Family::QuasiXXbarY, params, {}};
  const auto [a, b] = instantiate(spec);
  const Frame& f = abc_frame();
  const auto c = f.from_mask(bit('c'));
  const Rational p_c = b.mass(c);
  if (conflict(a, b) == kOne) {
    const auto& [x, xbar, y] = params;
    return (kOne - y) * (kOne - x * (kOne - y)) == (kOne - x) * (kOne - y);
  }
  return combine(a, b).combined.mass(c) == p_c;
}

bool SweepPoint::all_exact() const {
  if (!report) return false;
  for (const auto& e : report->elements) {
    if (e.verdict != Verdict::ExactMatch) return false;
  }
  return true;
}

std::vector<FamilyParams> SweepResult::summary() const {
  std::vector<FamilyParams> out;
  for (const auto& p : points) {
    if (p.all_exact()) out.push_back(p.params);
  }
  return out;
}

std::vector<FamilyParams> sweep_grid(Family family, std::size_t n, const SweepOptions& options) {
  if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "grid density must be at least 2");
  if (family == Family::Custom) {
    throw Error(ErrorKind::ParameterOutOfRange, "custom families cannot be swept");
  }
  const auto den = static_cast<std::int64_t>(n);
  std::vector<Rational> axis;
  for (std::int64_t i = 0; i <= den; ++i) axis.emplace_back(i, den);

  std::vector<Rational> slices{kZero};
  if (family == Family::QuasiXXbarY) slices = options.full_grid ? axis : options.xbar_slices;

  std::vector<FamilyParams> grid;
  for (const auto& xbar : slices) {
    for (const auto& x : axis) {
      if (family == Family::QuasiXXbarY && (xbar.sign() < 0 || x + xbar > kOne)) continue;
      for (const auto& y : axis) grid.push_back({x, xbar, y});
    }
  }
  return grid;
}

SweepPoint evaluate_point(Family family, const FamilyParams& params) {
  const auto [a, b] = instantiate({family, params, {}});
  SweepPoint point{params, conflict(a, b), std::nullopt, std::nullopt};
  if (family == Family::QuasiXXbarY) point.c_equality = quasi_c_equality(params);
  if (point.kappa == kOne) return point;
  symbolic_check({family, params, {}});
  const std::vector<BodyOfEvidence> bodies{a, b};
  point.report = audit(bodies);
  return point;
}

SweepResult sweep_reference(Family family, std::size_t n, const SweepOptions& options) {
  SweepResult result{family, n, {}};
  for (const auto& params : sweep_grid(family, n, options)) {
    result.points.push_back(evaluate_point(family, params));
  }
  return result;
}

SweepResult sweep(Family family, std::size_t n, const SweepOptions& options) {
  const auto grid = sweep_grid(family, n, options);
  std::vector<std::optional<SweepPoint>> slots(grid.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = evaluate_point(family, grid[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(dsaudit_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result{family, n, {}};
  result.points.reserve(slots.size());
  for (auto& slot : slots) result.points.push_back(std::move(*slot));
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  const Frame& f = abc_frame();
  const bool quasi = result.family == Family::QuasiXXbarY;
  out << "family,x,xbar,y,kappa,element,ds_lo,ds_hi,p_lo,p_hi,verdict\n";
  for (const auto& point : result.points) {
    const auto& p = point.params;
    const std::string prefix = std::string(to_string(result.family)) + "," + p.x.to_string() +
                               "," + (quasi ? p.xbar.to_string() : "") + "," + p.y.to_string() +
                               "," + point.kappa.to_string() + ",";
    if (!point.report) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        out << prefix << csv_field(format_set(f, f.singleton(i))) << ",,,,,TotalConflict\n";
      }
      continue;
    }
    for (const auto& e : point.report->elements) {
      out << prefix << csv_field(format_set(f, e.subset)) << ',' << e.ds_lower << ','
          << e.ds_upper << ',';
      if (e.prob.feasible) {
        out << e.prob.lower << ',' << e.prob.upper;
      } else {
        out << ',';
      }
      out << ',' << to_string(e.verdict) << '\n';
    }
  }
  const auto consistent = result.summary();
  out << "# consistent_points " << consistent.size() << '\n';
  for (const auto& p : consistent) {
    out << "# consistent x=" << p.x;
    if (quasi) out << " xbar=" << p.xbar;
    out << " y=" << p.y << '\n';
  }
}

BodyPair zadeh_bodies() {
  const Frame& f = abc_frame();
  auto a = make_body(f, {{f.from_mask(bit('a')), Rational(99, 100)},
                         {f.from_mask(bit('b')), kZero},
                         {f.from_mask(bit('c')), Rational(1, 100)}});
  auto b = make_body(f, {{f.from_mask(bit('a')), kZero},
                         {f.from_mask(bit('b')), Rational(99, 100)},
                         {f.from_mask(bit('c')), Rational(1, 100)}});
  return {std::move(a), std::move(b)};
}

ConsistencyReport zadeh_fixture() {
  const auto [a, b] = zadeh_bodies();
  const std::vector<BodyOfEvidence> bodies{a, b};
  auto report = audit(bodies);
  const Frame& f = abc_frame();
  const auto& combined = report.combination.combined;
  if (combined.size() != 1 || combined.mass(f.from_mask(bit('c'))) != kOne) {
    throw Error(ErrorKind::InternalConsistency, "Zadeh fixture: combined body is not {c}->1");
  }
  if (report.kappa != Rational(9999, 10000)) {
    throw Error(ErrorKind::InternalConsistency,
                "Zadeh fixture: kappa is " + report.kappa.to_string() + ", expected 9999/10000");
  }
  return report;
}

}  // namespace dsaudit
