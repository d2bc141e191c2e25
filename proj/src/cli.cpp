#include "dsaudit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsaudit/combination.hpp"
#include "dsaudit/consistency.hpp"
#include "dsaudit/error.hpp"
#include "dsaudit/evidence_io.hpp"
#include "dsaudit/measures.hpp"
#include "dsaudit/repro.hpp"
#include "dsaudit/sweep.hpp"

namespace dsaudit::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

struct Options {
  std::string input;
  Format format = Format::Table;
  bool all = false;
  bool invert = false;
  std::size_t grid = 12;
  std::string xbar_slices;
  bool full_grid = false;
  std::vector<std::string> bodies;
  std::vector<std::string> subsets;
  std::string family;
  std::string output;
};

// Left-aligned text table with two-space gutters.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - display_width(row[i]) + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  static std::size_t display_width(const std::string& s) {
    // Count UTF-8 code points, not bytes.
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  }
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

EvidenceDocument load_input(const Options& opt) {
  if (opt.input.empty()) throw Error(ErrorKind::Parse, "--input FILE is required");
  return load_document(opt.input);
}

std::vector<BodyOfEvidence> selected_bodies(const EvidenceDocument& doc, const Options& opt) {
  if (!opt.bodies.empty()) return doc.select(opt.bodies);
  std::vector<BodyOfEvidence> all;
  for (const auto& [name, body] : doc.bodies) all.push_back(body);
  return all;
}

int cmd_combine(const Options& opt, std::ostream& out) {
  const auto doc = load_input(opt);
  const auto bodies = selected_bodies(doc, opt);
  const auto result = combine_many(bodies);
  const Frame& f = doc.frame;

  switch (opt.format) {
    case Format::Json: {
      Json j;
      j["kappa"] = result.kappa.to_string();
      j["combined"] = Json::array();
      for (const auto& e : result.combined.focal()) {
        j["combined"].push_back({{"set", format_set(f, e.set)}, {"mass", e.mass.to_string()}});
      }
      j["steps"] = Json::array();
      for (const auto& step : result.steps) {
        Json s{{"kappa", step.kappa.to_string()}, {"cumulative_kappa", step.cumulative_kappa.to_string()}};
        s["provenance"] = Json::array();
        for (const auto& b : step.provenance) {
          Json pairs = Json::array();
          for (const auto& p : b.pairs) pairs.push_back({p.left, p.right});
          s["provenance"].push_back({{"set", format_set(f, b.set)},
                                     {"unnormalized", b.unnormalized.to_string()},
                                     {"pairs", std::move(pairs)}});
        }
        s["conflict_pairs"] = Json::array();
        for (const auto& p : step.conflict_pairs) s["conflict_pairs"].push_back({p.left, p.right});
        j["steps"].push_back(std::move(s));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows{{"set", "mass"}};
      for (const auto& e : result.combined.focal()) rows.push_back({format_set(f, e.set), e.mass.to_string()});
      print_csv(out, rows);
      out << "# kappa " << result.kappa << '\n';
      break;
    }
    case Format::Table: {
      Table t({"set", "mass"});
      for (const auto& e : result.combined.focal()) t.add({format_set(f, e.set), e.mass.to_string()});
      t.print(out);
      out << "kappa = " << result.kappa << '\n';
      // After the first step the left operand is an intermediate body, so
      // its focal elements are shown by index.
      for (std::size_t k = 0; k < result.steps.size(); ++k) {
        for (const auto& p : result.steps[k].conflict_pairs) {
          out << "conflict step " << (k + 1) << ": ";
          if (k == 0) {
            out << opt.bodies[0] << format_set(f, bodies[0].focal()[p.left].set);
          } else {
            out << "#" << p.left;
          }
          out << " x " << opt.bodies[k + 1] << format_set(f, bodies[k + 1].focal()[p.right].set)
              << '\n';
        }
      }
      break;
    }
  }
  return kOk;
}

int cmd_measures(const Options& opt, std::ostream& out) {
  const auto doc = load_input(opt);
  const auto bodies = selected_bodies(doc, opt);
  const auto body = combine_many(bodies).combined;
  const Frame& f = doc.frame;

  std::vector<FocalSet> targets;
  if (opt.all) {
    for (const auto s : enumerate_subsets(f)) targets.push_back(s);
  } else {
    for (const auto& text : opt.subsets) targets.push_back(parse_subset(f, text));
    if (targets.empty()) {
      for (const auto& e : body.focal()) targets.push_back(e.set);
    }
  }
  const auto bel = measure_table(body, MeasureKind::Belief);
  const auto pl = measure_table(body, MeasureKind::Plausibility);

  bool round_trip = false;
  if (opt.invert) round_trip = mass_from_belief(bel) == body;

  switch (opt.format) {
    case Format::Json: {
      Json j = Json::array();
      for (const auto& s : targets) {
        j.push_back({{"set", format_set(f, s)}, {"mass", body.mass(s).to_string()},
                     {"bel", bel[s].to_string()}, {"pl", pl[s].to_string()}});
      }
      Json root{{"measures", std::move(j)}};
      if (opt.invert) root["mobius_round_trip"] = round_trip;
      out << root.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows{{"set", "mass", "bel", "pl"}};
      for (const auto& s : targets) {
        rows.push_back({format_set(f, s), body.mass(s).to_string(), bel[s].to_string(), pl[s].to_string()});
      }
      print_csv(out, rows);
      if (opt.invert) out << "# mobius_round_trip " << (round_trip ? "ok" : "FAILED") << '\n';
      break;
    }
    case Format::Table: {
      for (const auto& s : targets) {
        out << format_set(f, s) << "  bel=" << bel[s] << " pl=" << pl[s] << '\n';
      }
      if (opt.invert) {
        out << "mobius round-trip: " << (round_trip ? "recovered masses match" : "MISMATCH") << '\n';
      }
      break;
    }
  }
  return opt.invert && !round_trip ? kInconsistent : kOk;
}

int audit_exit_code(const ConsistencyReport& report) {
  switch (report.overall()) {
    case Verdict::ExactMatch:
    case Verdict::Compatible: return kOk;
    case Verdict::Violation:
    case Verdict::DisjointViolation: return kInconsistent;
    case Verdict::Infeasible: return kInfeasible;
  }
  return kInconsistent;
}

int cmd_audit(const Options& opt, std::ostream& out) {
  const auto doc = load_input(opt);
  auto bodies = selected_bodies(doc, opt);
  if (bodies.size() == 1) bodies.push_back(vacuous(doc.frame));
  const auto report = audit(bodies);
  const Frame& f = doc.frame;
  auto p_lo = [](const ElementAudit& e) { return e.prob.feasible ? e.prob.lower.to_string() : std::string(); };
  auto p_hi = [](const ElementAudit& e) { return e.prob.feasible ? e.prob.upper.to_string() : std::string(); };

  switch (opt.format) {
    case Format::Json: {
      Json j{{"kappa", report.kappa.to_string()},
             {"combined_structure", to_string(report.combined_class.tag)},
             {"feasible", report.feasible},
             {"overall", to_string(report.overall())}};
      j["elements"] = Json::array();
      for (const auto& e : report.elements) {
        j["elements"].push_back({{"set", format_set(f, e.subset)},
                                 {"ds_lo", e.ds_lower.to_string()},
                                 {"ds_hi", e.ds_upper.to_string()},
                                 {"p_lo", p_lo(e)},
                                 {"p_hi", p_hi(e)},
                                 {"verdict", to_string(e.verdict)}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows{{"element", "ds_lo", "ds_hi", "p_lo", "p_hi", "verdict"}};
      for (const auto& e : report.elements) {
        rows.push_back({format_set(f, e.subset), e.ds_lower.to_string(), e.ds_upper.to_string(), p_lo(e),
                        p_hi(e), to_string(e.verdict)});
      }
      print_csv(out, rows);
      out << "# kappa " << report.kappa << '\n';
      break;
    }
    case Format::Table: {
      Table t({"element", "[bel, pl]", "[P min, P max]", "verdict"});
      for (const auto& e : report.elements) {
        const std::string prob = e.prob.feasible ? "[" + p_lo(e) + ", " + p_hi(e) + "]" : "-";
        t.add({format_set(f, e.subset), "[" + e.ds_lower.to_string() + ", " + e.ds_upper.to_string() + "]",
               prob, to_string(e.verdict)});
      }
      t.print(out);
      out << "kappa = " << report.kappa << '\n';
      out << "combined structure: " << to_string(report.combined_class.tag) << '\n';
      if (!report.feasible) out << "the probability constraints of the input bodies have no solution\n";
      out << "overall: " << to_string(report.overall()) << '\n';
      break;
    }
  }
  return audit_exit_code(report);
}

Family parse_family(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "partition" || lower == "partitionxy") return Family::PartitionXY;
  if (lower == "quasi" || lower == "quasixxbary") return Family::QuasiXXbarY;
  throw Error(ErrorKind::Parse, "unknown family '" + name + "' (use partition or quasi)");
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const Family family = parse_family(opt.family);
  SweepOptions sweep_opt;
  sweep_opt.full_grid = opt.full_grid;
  if (!opt.xbar_slices.empty()) {
    sweep_opt.xbar_slices.clear();
    std::stringstream stream(opt.xbar_slices);
    std::string item;
    while (std::getline(stream, item, ',')) sweep_opt.xbar_slices.push_back(Rational::parse(item));
  }
  const auto result = sweep(family, opt.grid, sweep_opt);
  if (opt.output.empty() || opt.output == "-") {
    write_sweep_csv(result, out);
    return kOk;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::Parse, opt.output + ": cannot open for writing");
  write_sweep_csv(result, file);
  file.close();
  if (!file) throw Error(ErrorKind::Parse, opt.output + ": write failed");
  out << "wrote " << result.points.size() << " parameter points to " << opt.output << '\n';
  return kOk;
}

int cmd_paper_repro(std::ostream& out) {
  const auto checks = run_paper_fixtures();
  std::size_t failed = 0;
  std::string group;
  for (const auto& c : checks) {
    if (c.group != group) {
      group = c.group;
      out << "== " << group << '\n';
    }
    out << (c.passed() ? "  PASS  " : "  FAIL  ") << c.name << "\n        expected: " << c.expected
        << "\n        actual:   " << c.actual << '\n';
    failed += !c.passed();
  }
  out << (checks.size() - failed) << "/" << checks.size() << " fixtures match\n";
  return failed == 0 ? kOk : kInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact Dempster-Shafer combination and probability-consistency audits", "dsaudit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input,-i", opt.input, "evidence file (JSON)");
  app.add_option("--format,-f", opt.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}},
          CLI::ignore_case));
  app.add_flag("--all", opt.all, "measures: render all subsets of the frame");
  app.add_flag("--invert", opt.invert, "measures: re-derive masses from belief and compare");
  app.add_option("--grid,-n", opt.grid, "sweep: grid density N (points i/N)")->check(CLI::Range(2, 10000));
  app.add_option("--xbar-slices", opt.xbar_slices, "sweep: comma-separated xbar values for quasi");
  app.add_flag("--full-grid", opt.full_grid, "sweep: sweep xbar over the full i/N grid");

  auto* combine_cmd = app.add_subcommand("combine", "combine bodies with Dempster's rule");
  combine_cmd->add_option("bodies", opt.bodies, "body names, combined left to right (default: all)");

  auto* measures_cmd = app.add_subcommand("measures", "belief and plausibility of subsets");
  measures_cmd->add_option("bodies", opt.bodies, "body names, combined first when several (default: all)");
  measures_cmd->add_option("--subset,-s", opt.subsets, "subset such as a,b or {} or *; repeatable")->allow_extra_args(false);

  auto* audit_cmd = app.add_subcommand("audit", "compare combined evidence with probability bounds");
  audit_cmd->add_option("bodies", opt.bodies, "body names (default: all)");

  auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep of a parametric family, CSV output");
  sweep_cmd->add_option("family", opt.family, "partition or quasi")->required();
  sweep_cmd->add_option("path", opt.output, "CSV path (stdout when omitted)");
  sweep_cmd->add_option("--output,-o", opt.output, "CSV path");

  auto* repro_cmd = app.add_subcommand("paper-repro", "run the built-in reproduction fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*combine_cmd) return cmd_combine(opt, out);
    if (*measures_cmd) return cmd_measures(opt, out);
    if (*audit_cmd) return cmd_audit(opt, out);
    if (*sweep_cmd) return cmd_sweep(opt, out);
    if (*repro_cmd) return cmd_paper_repro(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::TotalConflict) {
      err << "the focal sets of the bodies have no element in common, so Dempster's rule is "
             "undefined\n";
      return kTotalConflict;
    }
    return kInputError;
  }
  return kInputError;
}

}  // namespace dsaudit::cli
