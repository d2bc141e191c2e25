#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsaudit/evidence.hpp"

namespace dsaudit {

/// Parsed evidence file:
///
///   {
///     "frame": ["a", "b", "c"],
///     "bodies": {
///       "A": [{"set": ["a"], "mass": "1/4"}, {"set": ["b", "c"], "mass": "3/4"}],
///       "B": [{"set": ["a", "b"], "mass": "1/2"}, {"set": ["c"], "mass": "0.5"}]
///     }
///   }
///
/// Masses are strings ("p/q", integers or finite decimals, all converted
/// exactly) or JSON integers. Non-integer JSON numbers are rejected because
/// they have already been rounded to binary floating point by the parser.
struct EvidenceDocument {
  Frame frame;
  std::vector<std::pair<std::string, BodyOfEvidence>> bodies;  // file order

  /// Throws Error(Parse) naming the missing body.
  const BodyOfEvidence& body(const std::string& name) const;
  std::vector<BodyOfEvidence> select(const std::vector<std::string>& names) const;
};

/// Errors keep their original kind and are prefixed with
/// "<source>: <json path>:" so they can be traced back to the file.
EvidenceDocument parse_document(std::string_view text, const std::string& source = "<input>");
EvidenceDocument load_document(const std::filesystem::path& path);

/// Canonical form: sets in frame order, focal elements in mask order,
/// reduced fractions, two-space indentation, trailing newline.
std::string serialize_document(const EvidenceDocument& doc);

/// Parses "a,b", "{a,b}", "{}" (empty) or "*" / "Ω" (whole frame).
FocalSet parse_subset(const Frame& frame, std::string_view text);

}  // namespace dsaudit
