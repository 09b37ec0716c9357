#include "tms/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tms/builtins.hpp"
#include "tms/enumerate.hpp"
#include "tms/expr.hpp"
#include "tms/harness.hpp"
#include "tms/model_io.hpp"
#include "tms/oracle.hpp"
#include "tms/registry.hpp"
#include "tms/report_io.hpp"

namespace tms::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<ExtValue> parse_grid(const std::string& text) {
  std::vector<ExtValue> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    auto v = ExtValue::parse(item);
    if (!v) throw UsageError("invalid mass value '" + item + "' in --values");
    grid.push_back(*v);
  }
  if (grid.empty()) throw UsageError("--values needs at least one value");
  return grid;
}

ReportFormat format_from(const std::string& name) {
  auto f = parse_report_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

SigmaMode sigma_from(const std::string& name) {
  if (name == "powerset") return SigmaMode::kPowerset;
  if (name == "all") return SigmaMode::kAllRefinements;
  throw UsageError("unknown sigma mode '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_violations(const std::vector<ImplicationViolation>& violations, const Space& space, std::ostream& err) {
  for (const ImplicationViolation& v : violations) err << "violation: " << v.entry << " (" << v.side << ")\n";
  if (!violations.empty()) err << serialize_model(space);
}

struct Options {
  std::string file;
  bool oracle = false;
  bool assert_expected = false;
  std::string format = "human";
  std::string search_format = "jsonl";
  int n = 3;
  std::string values = "0,1,inf";
  bool unlabeled = false;
  std::string sigma = "powerset";
  int jobs = 1;
  std::string where;
  long long limit = -1;
  std::string out_file;
  bool count_only = false;
};

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Space space = parse_model(read_file(o.file));
  const PropertyReport report = evaluate_report(space);
  const ReportRecord record = make_record(space, report);
  write_report(std::span<const ReportRecord>(&record, 1), format_from(o.format), out);
  int code = kExitOk;
  const auto violations = check_implications(space, report);
  if (!violations.empty()) {
    print_violations(violations, space, err);
    code = kExitViolation;
  }
  if (o.oracle) {
    if (space.size() > oracle::kMaxOraclePoints) throw ModelError(ErrorCode::kTooLarge, "oracle supports at most 6 points");
    const auto expected = oracle::report(space);
    for (int i = 0; i < kPropertyCount; ++i) {
      const Property p = property_at(i);
      if (report[p] != expected[static_cast<std::size_t>(i)]) {
        err << "oracle mismatch: " << property_name(p) << " decider=" << (report[p] ? "true" : "false")
            << " oracle=" << (expected[static_cast<std::size_t>(i)] ? "true" : "false") << "\n";
        code = kExitViolation;
      }
      if (auto why = oracle::recheck(space, p, report.verdict(p))) {
        err << "witness rejected: " << property_name(p) << ": " << *why << "\n";
        code = kExitViolation;
      }
    }
  }
  return code;
}

int cmd_examples(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<ReportRecord> records;
  int code = kExitOk;
  for (const BuiltinExample& ex : builtin_examples()) {
    const PropertyReport report = evaluate_report(ex.space);
    ReportRecord r = make_record(ex.space, report);
    r.label = ex.name;
    records.push_back(std::move(r));
    if (o.assert_expected) {
      for (const std::string& name : report_mismatches(report, ex.expected)) {
        const bool got = report[*property_from_name(name)];
        err << ex.name << ": expected " << name << "=" << (got ? "false" : "true") << ", got "
            << (got ? "true" : "false") << "\n";
        code = kExitViolation;
      }
    }
  }
  write_report(records, format_from(o.format), out);
  return code;
}

EnumConfig config_from(const Options& o) {
  EnumConfig c;
  c.n = o.n;
  c.mass_grid = parse_grid(o.values);
  c.unlabeled = o.unlabeled;
  c.sigma_mode = sigma_from(o.sigma);
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  return c;
}

nlohmann::ordered_json summary_json(const HarnessSummary& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["models"] = s.models;
  j["violations"] = s.violation_count;
  nlohmann::ordered_json freq = nlohmann::ordered_json::object();
  for (int i = 0; i < kPropertyCount; ++i) {
    freq[std::string(kPropertyNames[static_cast<std::size_t>(i)])] = s.property_true[static_cast<std::size_t>(i)];
  }
  j["property_true"] = std::move(freq);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const EntryStats& e : s.entries) {
    entries.push_back({{"entry", e.name}, {"exercised", e.exercised}, {"vacuous", e.vacuous}, {"violations", e.violations}});
  }
  j["entries"] = std::move(entries);
  if (!s.violations.empty()) {
    const HarnessViolation& v = s.violations.front();
    j["first_violation"] = {{"entry", v.entry}, {"side", v.side}, {"model_index", v.model_index}, {"model", v.model_source}};
  }
  return j;
}

int cmd_theorems(const Options& o, std::ostream& out, std::ostream& err) {
  const ReportFormat format = format_from(o.format);
  SpaceStream stream(config_from(o));
  HarnessConfig hc;
  hc.jobs = o.jobs;
  const HarnessSummary summary = run_harness([&] { return stream.next(); }, hc);
  if (format == ReportFormat::kJsonl) {
    out << summary_json(summary).dump() << "\n";
  } else {
    out << format_summary(summary);
  }
  if (!summary.ok()) {
    const HarnessViolation& v = summary.violations.front();
    err << "violation: " << v.entry << " (" << v.side << ") at model #" << v.model_index << "\n" << v.model_source;
    return kExitViolation;
  }
  return kExitOk;
}

struct Match {
  CanonicalKey key;
  ReportRecord record;
};

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const PropertyExpr expr = parse_property_expr(o.where);
  const ReportFormat format = format_from(o.search_format);
  SpaceStream stream(config_from(o));
  std::vector<Match> matches;
  std::uint64_t total = 0;
  const std::size_t workers = static_cast<std::size_t>(o.jobs);
  std::vector<Space> batch;
  for (bool more = true; more;) {
    batch.clear();
    while (batch.size() < 1024) {
      auto s = stream.next();
      if (!s) {
        more = false;
        break;
      }
      batch.push_back(std::move(*s));
    }
    total += batch.size();
    std::vector<std::optional<Match>> found(batch.size());
    auto work = [&](std::size_t w) {
      for (std::size_t i = w; i < batch.size(); i += workers) {
        const PropertyReport report = evaluate_report(batch[i]);
        if (eval_expr(expr, report)) found[i] = Match{canonical_form(batch[i]), make_record(batch[i], report)};
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& m : found)
      if (m) matches.push_back(std::move(*m));
  }
  std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    if (auto c = a.key <=> b.key; c != 0) return c < 0;
    return a.record.model < b.record.model;
  });
  if (o.limit >= 0 && matches.size() > static_cast<std::size_t>(o.limit)) matches.resize(static_cast<std::size_t>(o.limit));
  std::vector<ReportRecord> records;
  for (Match& m : matches) records.push_back(std::move(m.record));
  if (o.out_file.empty()) {
    write_report(records, format, out);
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) throw ModelError(ErrorCode::kIo, "cannot write " + o.out_file);
    write_report(records, format, file);
  }
  err << "search: " << records.size() << " of " << total << " models match\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto topologies = enumerate_topologies(o.n, o.unlabeled);
  if (o.count_only) {
    out << topologies.size() << "\n";
    return kExitOk;
  }
  const auto names = default_point_names(o.n);
  for (const Topology& t : topologies) {
    bool first = true;
    for (Subset s : t.opens()) {
      out << (first ? "" : " ") << format_set(s, names);
      first = false;
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact model checker for finite topological measure spaces", "tms"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Evaluate every property of a model file");
  check->add_option("file", o.file, "Model file")->required();
  check->add_flag("--oracle", o.oracle, "Also compare against the brute-force oracle");
  check->add_option("--format", o.format, "human or jsonl");

  auto* examples = app.add_subcommand("examples", "Report the built-in example models");
  examples->add_flag("--assert", o.assert_expected, "Fail on any mismatch with the expected reports");
  examples->add_option("--format", o.format, "human or jsonl");

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of points")->required();
    sub->add_option("--values", o.values, "Mass grid, comma separated");
    sub->add_flag("--unlabeled", o.unlabeled, "One model per homeomorphism class");
    sub->add_option("--sigma", o.sigma, "powerset or all");
    sub->add_option("--jobs", o.jobs, "Worker threads");
  };

  auto* theorems = app.add_subcommand("theorems", "Assert the implication registry over a model family");
  add_family(theorems);
  theorems->add_option("--format", o.format, "human or jsonl");

  auto* search = app.add_subcommand("search", "Models of a family satisfying a property expression");
  add_family(search);
  search->add_option("--where", o.where, "Property expression")->required();
  search->add_option("--limit", o.limit, "Keep at most K records");
  search->add_option("--out", o.out_file, "Write records to FILE");
  search->add_option("--format", o.search_format, "jsonl or human");

  auto* enumerate = app.add_subcommand("enumerate", "List the topologies on n points");
  enumerate->add_option("--n", o.n, "Number of points")->required();
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");
  enumerate->add_flag("--unlabeled", o.unlabeled, "One topology per homeomorphism class");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out, err);
    if (*examples) return cmd_examples(o, out, err);
    if (*theorems) return cmd_theorems(o, out, err);
    if (*search) return cmd_search(o, out, err);
    if (*enumerate) return cmd_enumerate(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tms::cli
