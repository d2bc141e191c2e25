#include "dsaudit/repro.hpp"

#include <functional>
#include <sstream>

#include "dsaudit/consistency.hpp"
#include "dsaudit/evidence_io.hpp"
#include "dsaudit/measures.hpp"
#include "dsaudit/sweep.hpp"

namespace dsaudit {

namespace {

constexpr std::string_view kPartitionExample = R"({
  "frame": ["a", "b", "c"],
  "bodies": {
    "A": [{"set": ["a"], "mass": "1/4"}, {"set": ["b", "c"], "mass": "3/4"}],
    "B": [{"set": ["a", "b"], "mass": "1/2"}, {"set": ["c"], "mass": "1/2"}]
  }
}
)";

constexpr std::string_view kQuasiExample = R"({
  "frame": ["a", "b", "c"],
  "bodies": {
    "A": [{"set": ["a"], "mass": "1/4"}, {"set": ["b", "c"], "mass": "1/2"},
          {"set": ["a", "b", "c"], "mass": "1/4"}],
    "B": [{"set": ["a", "b"], "mass": "1/2"}, {"set": ["c"], "mass": "1/2"}]
  }
}
)";

std::string render_masses(const BodyOfEvidence& body) {
  std::string out;
  for (const auto& e : body.focal()) {
    if (!out.empty()) out += ' ';
    out += format_set(body.frame(), e.set) + "=" + e.mass.to_string();
  }
  return out;
}

std::string render_interval(const Rational& lo, const Rational& hi) {
  return "[" + lo.to_string() + "," + hi.to_string() + "]";
}

class Collector {
 public:
  void check(const std::string& group, const std::string& name, const std::string& expected,
             const std::function<std::string()>& actual) {
    std::string got;
    try {
      got = actual();
    } catch (const std::exception& e) {
      got = std::string("exception: ") + e.what();
    }
    checks_.push_back({group, name, expected, std::move(got)});
  }

  std::vector<FixtureCheck> take() { return std::move(checks_); }

 private:
  std::vector<FixtureCheck> checks_;
};

void partition_example(Collector& c) {
  const std::string g = "partition example";
  const auto doc = parse_document(kPartitionExample, "partition-example");
  const auto bodies = doc.select({"A", "B"});
  const Frame& f = doc.frame;

  c.check(g, "A is a partition", "Partition",
          [&] { return std::string(to_string(classify(bodies[0]).tag)); });
  c.check(g, "combined masses", "{a}=1/7 {b}=3/7 {c}=3/7",
          [&] { return render_masses(combine(bodies[0], bodies[1]).combined); });
  c.check(g, "kappa", "1/8", [&] { return conflict(bodies[0], bodies[1]).to_string(); });
  c.check(g, "mass = belief = plausibility on singletons", "1/7 3/7 3/7", [&] {
    const auto combined = combine(bodies[0], bodies[1]).combined;
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto s = f.singleton(i);
      const auto m = combined.mass(s);
      if (m != belief(combined, s) || m != plausibility(combined, s)) return std::string("mismatch");
      out += (i ? " " : "") + m.to_string();
    }
    return out;
  });
  c.check(g, "probability points P(a) P(b) P(c)", "[1/4,1/4] [1/4,1/4] [1/2,1/2]", [&] {
    const auto system = build_constraints(bodies);
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto iv = probability_bounds(system, f.singleton(i));
      out += (i ? " " : "") + render_interval(iv.lower, iv.upper);
    }
    return out;
  });
  c.check(g, "verdicts on singletons", "Violation Violation Violation", [&] {
    const auto report = audit(bodies);
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      out += (i ? " " : "") + std::string(to_string(report.find(f.singleton(i))->verdict));
    }
    return out;
  });
}

void quasi_example(Collector& c) {
  const std::string g = "quasi-partition example";
  const auto doc = parse_document(kQuasiExample, "quasi-example");
  const auto bodies = doc.select({"A", "B"});
  const Frame& f = doc.frame;
  const auto b = subset(f, {"b"});

  c.check(g, "A is a quasi-partition", "QuasiPartition uncertainty=1/4", [&] {
    const auto cls = classify(bodies[0]);
    return std::string(to_string(cls.tag)) + " uncertainty=" + cls.uncertainty_mass.to_string();
  });
  c.check(g, "combined masses", "{a}=1/7 {b}=2/7 {a,b}=1/7 {c}=3/7",
          [&] { return render_masses(combine(bodies[0], bodies[1]).combined); });
  c.check(g, "belief/plausibility interval of {b}", "[2/7,3/7]", [&] {
    const auto combined = combine(bodies[0], bodies[1]).combined;
    return render_interval(belief(combined, b), plausibility(combined, b));
  });
  c.check(g, "probability interval of {b}", "[0,1/4]", [&] {
    const auto iv = probability_bounds(build_constraints(bodies), b);
    return render_interval(iv.lower, iv.upper);
  });
  c.check(g, "the two intervals do not overlap", "DisjointViolation",
          [&] { return std::string(to_string(audit(bodies).find(b)->verdict)); });
}

void zadeh_example(Collector& c) {
  const std::string g = "Zadeh example";
  c.check(g, "combined body", "{c}=1",
          [&] { return render_masses(zadeh_fixture().combination.combined); });
  c.check(g, "kappa", "9999/10000", [&] { return zadeh_fixture().kappa.to_string(); });
}

void characterizations(Collector& c) {
  const std::string g = "consistency characterizations";
  c.check(g, "PartitionXY x=0 y=1/3 audits as ExactMatch", "ExactMatch", [&] {
    const auto [a, b] = instantiate({Family::PartitionXY, {Rational(0), Rational(0), Rational(1, 3)}, {}});
    const std::vector<BodyOfEvidence> bodies{a, b};
    return std::string(to_string(audit(bodies).overall()));
  });
  c.check(g, "PartitionXY N=4: all-ExactMatch points are exactly x=0 or y=1", "9 points, all with x=0 or y=1, all with kappa=0", [&] {
    const auto result = sweep(Family::PartitionXY, 4);
    std::size_t count = 0;
    for (const auto& p : result.points) {
      const bool expected = p.params.x.is_zero() || p.params.y == Rational(1);
      if (p.all_exact() != expected) return std::string("mismatch at x=") + p.params.x.to_string() + " y=" + p.params.y.to_string();
      if (p.all_exact() != p.kappa.is_zero()) return std::string("kappa disagrees at x=") + p.params.x.to_string() + " y=" + p.params.y.to_string();
      count += p.all_exact();
    }
    return std::to_string(count) + " points, all with x=0 or y=1, all with kappa=0";
  });
  c.check(g, "QuasiXXbarY N=4: P(c) equality holds iff x=0 or y=0 or y=1", "holds", [&] {
    for (const auto& p : sweep_grid(Family::QuasiXXbarY, 4)) {
      const bool expected = p.x.is_zero() || p.y.is_zero() || p.y == Rational(1);
      if (quasi_c_equality(p) != expected) return std::string("fails at x=") + p.x.to_string() + " xbar=" + p.xbar.to_string() + " y=" + p.y.to_string();
    }
    return std::string("holds");
  });
}

}  // namespace

std::string_view partition_example_document() { return kPartitionExample; }
std::string_view quasi_example_document() { return kQuasiExample; }

std::vector<FixtureCheck> run_paper_fixtures() {
  Collector c;
  partition_example(c);
  quasi_example(c);
  zadeh_example(c);
  characterizations(c);
  return c.take();
}

}  // namespace dsaudit
