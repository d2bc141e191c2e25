#include "dsaudit/evidence_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dsaudit/error.hpp"

namespace dsaudit {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(ErrorKind kind, const std::string& where, const std::string& what) {
  throw Error(kind, where + ": " + what);
}

Rational parse_mass(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorKind::Parse, where, e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) {
    fail(ErrorKind::Parse, where,
         "write non-integer masses as strings (\"1/4\" or \"0.25\") so they stay exact");
  }
  fail(ErrorKind::Parse, where, "mass must be a string or an integer");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

const BodyOfEvidence& EvidenceDocument::body(const std::string& name) const {
  for (const auto& [n, b] : bodies) {
    if (n == name) return b;
  }
  throw Error(ErrorKind::Parse, "no body named '" + name + "' in the evidence file");
}

std::vector<BodyOfEvidence> EvidenceDocument::select(const std::vector<std::string>& names) const {
  std::vector<BodyOfEvidence> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(body(n));
  return out;
}

EvidenceDocument parse_document(std::string_view text, const std::string& source) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, source, e.what());
  }
  if (!root.is_object()) fail(ErrorKind::Parse, source, "top level must be an object");
  if (!root.contains("frame") || !root["frame"].is_array()) {
    fail(ErrorKind::Parse, source + ": /frame", "expected an array of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < root["frame"].size(); ++i) {
    const auto& l = root["frame"][i];
    if (!l.is_string()) fail(ErrorKind::Parse, source + ": /frame/" + std::to_string(i), "label must be a string");
    labels.push_back(l.get<std::string>());
  }
  Frame frame = [&] {
    try {
      return make_frame(std::move(labels));
    } catch (const Error& e) {
      fail(e.kind(), source + ": /frame", e.what());
    }
  }();

  if (!root.contains("bodies") || !root["bodies"].is_object()) {
    fail(ErrorKind::Parse, source + ": /bodies", "expected an object of named bodies");
  }
  EvidenceDocument doc{frame, {}};
  for (const auto& [name, entries] : root["bodies"].items()) {
    const std::string where = source + ": /bodies/" + name;
    if (!entries.is_array()) fail(ErrorKind::Parse, where, "expected an array of focal elements");
    std::vector<FocalElement> assignment;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string at = where + "/" + std::to_string(i);
      const auto& entry = entries[i];
      if (!entry.is_object() || !entry.contains("set") || !entry.contains("mass")) {
        fail(ErrorKind::Parse, at, "expected {\"set\": [...], \"mass\": ...}");
      }
      if (!entry["set"].is_array()) fail(ErrorKind::Parse, at + "/set", "expected an array of labels");
      std::vector<std::string> members;
      for (const auto& m : entry["set"]) {
        if (!m.is_string()) fail(ErrorKind::Parse, at + "/set", "labels must be strings");
        members.push_back(m.get<std::string>());
      }
      try {
        assignment.push_back({subset(frame, members), parse_mass(entry["mass"], at + "/mass")});
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        fail(e.kind(), at + "/set", e.what());
      }
    }
    try {
      doc.bodies.emplace_back(name, make_body(frame, std::move(assignment)));
    } catch (const Error& e) {
      fail(e.kind(), where, e.what());
    }
  }
  return doc;
}

EvidenceDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path.string());
}

std::string serialize_document(const EvidenceDocument& doc) {
  Json root;
  root["frame"] = doc.frame.labels();
  Json bodies = Json::object();
  for (const auto& [name, body] : doc.bodies) {
    Json entries = Json::array();
    for (const auto& e : body.focal()) {
      Json set = Json::array();
      for (std::size_t i = 0; i < doc.frame.size(); ++i) {
        if ((e.set.bits() >> i) & 1U) set.push_back(doc.frame.label(i));
      }
      entries.push_back(Json{{"set", std::move(set)}, {"mass", e.mass.to_string()}});
    }
    bodies[name] = std::move(entries);
  }
  root["bodies"] = std::move(bodies);
  return root.dump(2) + "\n";
}

FocalSet parse_subset(const Frame& frame, std::string_view text) {
  std::string s = trim(text);
  if (s == "*" || s == "Ω") return frame.universe();
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  std::vector<std::string> members;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) members.push_back(item);
  }
  return subset(frame, members);
}

}  // namespace dsaudit
