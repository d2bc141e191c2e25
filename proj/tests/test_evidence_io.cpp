#include "doctest.h"

#include "dsaudit/error.hpp"
#include "dsaudit/evidence_io.hpp"
#include "dsaudit/repro.hpp"
#include "support/generators.hpp"

using namespace dsaudit;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse_document(text, "test.json");
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InternalConsistency;
}

std::string message_of(std::string_view text) {
  try {
    parse_document(text, "test.json");
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse the embedded examples") {
  const auto doc = parse_document(partition_example_document());
  CHECK(doc.frame.labels() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(doc.bodies.size() == 2);
  CHECK(doc.bodies[0].first == "A");
  CHECK(doc.body("A").mass(subset(doc.frame, {"b", "c"})) == Rational(3, 4));
  CHECK_THROWS_AS(doc.body("Z"), Error);

  const auto quasi = parse_document(quasi_example_document());
  CHECK(quasi.body("A").mass(quasi.frame.universe()) == Rational(1, 4));
}

TEST_CASE("decimal and integer masses convert exactly") {
  const auto doc = parse_document(R"({"frame": ["a", "b"], "bodies": {
      "D": [{"set": ["a"], "mass": "0.1"}, {"set": ["b"], "mass": "0.9"}],
      "I": [{"set": ["a", "b"], "mass": 1}]}})");
  CHECK(doc.body("D").mass(subset(doc.frame, {"a"})) == Rational(1, 10));
  CHECK(doc.body("I").size() == 1);
}

TEST_CASE("errors carry their kind and location") {
  CHECK(kind_of(R"({"frame": ["a", "b"], "bodies": {"A": [{"set": ["a"], "mass": "9/10"}]}})") ==
        ErrorKind::MassSumNotOne);
  CHECK(message_of(R"({"frame": ["a", "b"], "bodies": {"A": [{"set": ["a"], "mass": "9/10"}]}})")
            .find("test.json: /bodies/A: masses sum to 9/10") != std::string::npos);
  CHECK(kind_of(R"({"frame": ["a", "b"], "bodies": {"A": [{"set": ["a"], "mass": 0.5}]}})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"frame": ["a", "b"], "bodies": {"A": [{"set": ["x"], "mass": "1"}]}})") ==
        ErrorKind::UnknownLabel);
  CHECK(message_of(R"({"frame": ["a", "b"], "bodies": {"A": [{"set": ["x"], "mass": "1"}]}})")
            .find("/bodies/A/0/set") != std::string::npos);
  CHECK(kind_of(R"({"frame": ["a", "a"], "bodies": {}})") == ErrorKind::DuplicateLabel);
  CHECK(kind_of(R"({"frame": ["a"], "bodies": {"A": [{"set": ["a"], "mass": "1/0"}]}})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"frame": ["a"], "bodies": {"A": [{"set": [], "mass": "1"}]}})") == ErrorKind::MassOnEmptySet);
  CHECK(kind_of(R"({"frame": ["a"])") == ErrorKind::Parse);
  CHECK(kind_of(R"({"frame": ["a"]})") == ErrorKind::Parse);
  CHECK(kind_of(R"([1, 2])") == ErrorKind::Parse);
}

TEST_CASE("serialization is canonical and idempotent") {
  const auto doc = parse_document(R"({"frame": ["a", "b", "c"], "bodies": {
      "B": [{"set": ["c", "b"], "mass": "6/8"}, {"set": ["a"], "mass": "0.25"}]}})");
  const std::string once = serialize_document(doc);
  CHECK(once.find("\"3/4\"") != std::string::npos);
  CHECK(once.find("\"b\",\n") != std::string::npos);  // {b,c} written in frame order
  CHECK(serialize_document(parse_document(once)) == once);

  // Random documents round-trip to the same canonical text.
  gen::Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto f = gen::frame(gen::uniform(rng, 1, 5));
    EvidenceDocument random{f, {{"X", gen::body(rng, f)}, {"Y", gen::body(rng, f)}}};
    const auto text = serialize_document(random);
    const auto back = parse_document(text);
    CHECK(serialize_document(back) == text);
    CHECK(back.body("X").size() == random.body("X").size());
  }
}

TEST_CASE("parse_subset") {
  const auto f = make_frame({"a", "b", "c"});
  CHECK(parse_subset(f, "a,b") == subset(f, {"a", "b"}));
  CHECK(parse_subset(f, "{b, c}") == subset(f, {"b", "c"}));
  CHECK(parse_subset(f, "{}").is_empty());
  CHECK(parse_subset(f, "*").is_universe());
  CHECK(parse_subset(f, "Ω").is_universe());
  CHECK_THROWS_AS(parse_subset(f, "d"), Error);
}
