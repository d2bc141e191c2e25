#include <algorithm>

#include "doctest.h"

#include "dsaudit/combination.hpp"
#include "dsaudit/error.hpp"
#include "support/generators.hpp"

using namespace dsaudit;

namespace {

struct Example {
  Frame f = make_frame({"a", "b", "c"});
  FocalSet a = subset(f, {"a"});
  FocalSet b = subset(f, {"b"});
  FocalSet c = subset(f, {"c"});
  FocalSet ab = subset(f, {"a", "b"});
  FocalSet bc = subset(f, {"b", "c"});
};

}  // namespace

TEST_CASE("partition example: masses 1/7, 3/7, 3/7 and kappa 1/8") {
  Example e;
  const auto A = make_body(e.f, {{e.a, Rational(1, 4)}, {e.bc, Rational(3, 4)}});
  const auto B = make_body(e.f, {{e.ab, Rational(1, 2)}, {e.c, Rational(1, 2)}});
  CHECK(conflict(A, B) == Rational(1, 8));

  const auto r = combine(A, B);
  CHECK(r.kappa == Rational(1, 8));
  CHECK(r.combined == make_body(e.f, {{e.a, Rational(1, 7)}, {e.b, Rational(3, 7)}, {e.c, Rational(3, 7)}}));
  REQUIRE(r.conflict_pairs.size() == 1);
  CHECK(r.conflict_pairs[0] == FocalPair{0, 1});  // {a} x {c}
  REQUIRE(r.provenance.size() == 3);
  CHECK(r.provenance[1].set == e.b);
  CHECK(r.provenance[1].pairs == std::vector<FocalPair>{{1, 0}});  // {b,c} x {a,b}
}

TEST_CASE("quasi example pools both routes into {c}") {
  Example e;
  const auto A = make_body(e.f, {{e.a, Rational(1, 4)}, {e.bc, Rational(1, 2)}, {e.f.universe(), Rational(1, 4)}});
  const auto B = make_body(e.f, {{e.ab, Rational(1, 2)}, {e.c, Rational(1, 2)}});
  const auto r = combine(A, B);
  // Substituting x=1/4, xbar=1/2, y=1/2 into the closed forms: denominator
  // 7/8, numerators 1/8, 1/4, 3/8, 1/8.
  CHECK(r.combined == make_body(e.f, {{e.a, Rational(1, 7)},
                                      {e.b, Rational(2, 7)},
                                      {e.c, Rational(3, 7)},
                                      {e.ab, Rational(1, 7)}}));
  const auto bucket = std::find_if(r.provenance.begin(), r.provenance.end(),
                                   [&](const ProvenanceBucket& p) { return p.set == e.c; });
  REQUIRE(bucket != r.provenance.end());
  CHECK(bucket->pairs.size() == 2);
  CHECK(bucket->unnormalized == Rational(3, 8));
}

TEST_CASE("Zadeh bodies: kappa 9999/10000 and all mass on {c}") {
  Example e;
  const auto A = make_body(e.f, {{e.a, Rational(99, 100)}, {e.b, Rational(0)}, {e.c, Rational(1, 100)}});
  const auto B = make_body(e.f, {{e.b, Rational(99, 100)}, {e.c, Rational(1, 100)}});
  // 99/100 * 99/100 + 99/100 * 1/100 + 1/100 * 99/100
  const Rational by_hand = Rational(9801, 10000) + Rational(99, 10000) + Rational(99, 10000);
  CHECK(by_hand == Rational(9999, 10000));
  CHECK(conflict(A, B) == by_hand);
  CHECK(combine(A, B).combined == make_body(e.f, {{e.c, Rational(1)}}));
}

TEST_CASE("total conflict is an error") {
  const auto f = make_frame({"a", "b"});
  const auto A = make_body(f, {{subset(f, {"a"}), Rational(1)}});
  const auto B = make_body(f, {{subset(f, {"b"}), Rational(1)}});
  CHECK(conflict(A, B) == Rational(1));
  try {
    combine(A, B);
    FAIL("expected TotalConflict");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::TotalConflict);
  }
  const std::vector<BodyOfEvidence> chain{vacuous(f), A, B};
  try {
    combine_many(chain);
    FAIL("expected TotalConflict");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::TotalConflict);
    CHECK(std::string(err.what()).find("step 2") != std::string::npos);
  }
}

TEST_CASE("frame mismatch") {
  const auto f = make_frame({"a"});
  const auto g = make_frame({"a"});
  CHECK_THROWS_AS(combine(vacuous(f), vacuous(g)), Error);
  CHECK_THROWS_AS(conflict(vacuous(f), vacuous(g)), Error);
}

TEST_CASE("combine_many") {
  gen::Rng rng(5);
  const auto f = gen::frame(3);
  const auto B = gen::body(rng, f);
  const auto C = gen::body(rng, f);

  const std::vector<BodyOfEvidence> single{B};
  const auto one = combine_many(single);
  CHECK(one.combined == B);
  CHECK(one.kappa == Rational(0));
  CHECK(one.steps.empty());

  const std::vector<BodyOfEvidence> with_vacuous{B, vacuous(f)};
  CHECK(combine_many(with_vacuous).combined == B);

  const std::vector<BodyOfEvidence> pair{B, C};
  if (conflict(B, C) != Rational(1)) {
    const auto many = combine_many(pair);
    const auto direct = combine(B, C);
    CHECK(many.combined == direct.combined);
    CHECK(many.kappa == direct.kappa);
  }
}

TEST_CASE("property: combination invariants on random bodies") {
  gen::Rng rng(2024);
  int combined_cases = 0;
  for (int i = 0; i < 400; ++i) {
    const auto f = gen::frame(gen::uniform(rng, 1, 5));
    const auto A = gen::body(rng, f);
    const auto B = gen::body(rng, f);

    Mask support_a = 0, support_b = 0;
    for (const auto& e : A.focal()) support_a |= e.set.bits();
    for (const auto& e : B.focal()) support_b |= e.set.bits();
    const Rational kappa = conflict(A, B);
    CHECK((kappa == Rational(1)) == ((support_a & support_b) == 0));
    CHECK(combine(A, vacuous(f)).combined == A);
    if (kappa == Rational(1)) continue;
    ++combined_cases;

    const auto ab = combine(A, B);
    const auto ba = combine(B, A);
    CHECK(ab.combined == ba.combined);
    CHECK(ab.kappa == kappa);

    Rational total, unnormalized;
    for (const auto& e : ab.combined.focal()) total += e.mass;
    for (const auto& p : ab.provenance) unnormalized += p.unnormalized;
    CHECK(total == Rational(1));
    CHECK(kappa + unnormalized == Rational(1));

    Rational from_pairs;
    for (const auto& p : ab.conflict_pairs) from_pairs += A.focal()[p.left].mass * B.focal()[p.right].mass;
    CHECK(from_pairs == kappa);

    std::size_t pairs = ab.conflict_pairs.size();
    for (const auto& p : ab.provenance) pairs += p.pairs.size();
    CHECK(pairs == A.size() * B.size());

    if (kappa.is_zero()) {
      for (const auto& p : ab.provenance) CHECK(ab.combined.mass(p.set) == p.unnormalized);
    }
  }
  CHECK(combined_cases >= 200);
}

TEST_CASE("property: the combined mass assignment does not depend on fold order") {
  gen::Rng rng(99);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 100; ++i) {
    const auto f = gen::frame(gen::uniform(rng, 2, 4));
    std::vector<BodyOfEvidence> bodies{gen::body(rng, f), gen::body(rng, f), gen::body(rng, f)};
    try {
      const auto forward = combine_many(bodies);
      std::vector<BodyOfEvidence> reordered{bodies[2], bodies[0], bodies[1]};
      const auto other = combine_many(reordered);
      CHECK(forward.combined == other.combined);
      CHECK(forward.kappa == other.kappa);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TotalConflict);
    }
  }
  CHECK(checked >= 50);
}
