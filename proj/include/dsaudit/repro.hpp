#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dsaudit {

/// One expected-vs-actual comparison. Both sides are rendered as exact
/// strings, so a pass is a byte-for-byte match.
struct FixtureCheck {
  std::string group;
  std::string name;
  std::string expected;
  std::string actual;

  bool passed() const { return expected == actual; }
};

/// Evidence files for the two worked examples, embedded so that
/// `dsaudit paper-repro` runs without any files on disk.
std::string_view partition_example_document();  // A = {a}:1/4 {b,c}:3/4, B = {a,b}:1/2 {c}:1/2
std::string_view quasi_example_document();      // A adds Ω; x = 1/4, x̄ = 1/2, y = 1/2

/// Runs every built-in fixture. Never throws for a failed expectation; an
/// unexpected exception is recorded as the actual value.
std::vector<FixtureCheck> run_paper_fixtures();

}  // namespace dsaudit
