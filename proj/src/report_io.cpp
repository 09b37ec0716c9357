#include "tms/report_io.hpp"

#include <algorithm>

#include "tms/model_io.hpp"

namespace tms {

using nlohmann::ordered_json;

namespace {

ordered_json point_list(Subset s, std::span<const std::string> names) {
  ordered_json out = ordered_json::array();
  s.for_each([&](int p) { out.push_back(names[static_cast<std::size_t>(p)]); });
  return out;
}

ordered_json evidence_json(const Verdict& v, std::span<const std::string> names) {
  ordered_json w = ordered_json::object();
  w["note"] = v.note;
  if (!v.witness) return w;
  const Evidence& e = *v.witness;
  if (!e.sets.empty()) {
    ordered_json sets = ordered_json::object();
    for (const auto& [role, s] : e.sets) sets[role] = point_list(s, names);
    w["sets"] = std::move(sets);
  }
  if (!e.values.empty()) {
    ordered_json values = ordered_json::object();
    for (const auto& [role, x] : e.values) values[role] = x.to_string();
    w["values"] = std::move(values);
  }
  if (!e.partitions.empty()) {
    ordered_json parts = ordered_json::object();
    for (const auto& [role, p] : e.partitions) {
      ordered_json blocks = ordered_json::array();
      for (Subset b : p.blocks()) blocks.push_back(point_list(b, names));
      parts[role] = std::move(blocks);
    }
    w["partitions"] = std::move(parts);
  }
  return w;
}

}  // namespace

ReportRecord make_record(const Space& space, const PropertyReport& report) {
  ReportRecord r;
  r.model = serialize_model(space);
  r.properties = report.booleans();
  for (int i = 0; i < kPropertyCount; ++i) {
    r.witnesses[std::string(kPropertyNames[static_cast<std::size_t>(i)])] =
        evidence_json(report.verdict(property_at(i)), space.points());
  }
  return r;
}

ReportRecord make_record(const Space& space) { return make_record(space, evaluate_report(space)); }

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "human") return ReportFormat::kHuman;
  if (name == "jsonl") return ReportFormat::kJsonl;
  return std::nullopt;
}

ordered_json record_to_json(const ReportRecord& record) {
  ordered_json j = ordered_json::object();
  j["model"] = record.model;
  ordered_json props = ordered_json::object();
  for (int i = 0; i < kPropertyCount; ++i) {
    props[std::string(kPropertyNames[static_cast<std::size_t>(i)])] = record.properties[static_cast<std::size_t>(i)];
  }
  j["properties"] = std::move(props);
  j["witnesses"] = record.witnesses;
  return j;
}

ReportRecord record_from_json_line(std::string_view line) {
  ordered_json j = ordered_json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("model") || !j.contains("properties")) {
    throw ParseError(ErrorCode::kGrammar, 0, "malformed report record");
  }
  ReportRecord r;
  if (!j["model"].is_string()) throw ParseError(ErrorCode::kGrammar, 0, "record model must be a string");
  r.model = j["model"].get<std::string>();
  const ordered_json& props = j["properties"];
  for (int i = 0; i < kPropertyCount; ++i) {
    const std::string name(kPropertyNames[static_cast<std::size_t>(i)]);
    if (!props.contains(name) || !props[name].is_boolean()) {
      throw ParseError(ErrorCode::kGrammar, 0, "record lacks property " + name);
    }
    r.properties[static_cast<std::size_t>(i)] = props[name].get<bool>();
  }
  if (j.contains("witnesses")) r.witnesses = j["witnesses"];
  return r;
}

namespace {

std::string one_line(std::string source) {
  while (!source.empty() && source.back() == '\n') source.pop_back();
  std::string out;
  for (char c : source) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

void write_human(std::span<const ReportRecord> records, std::ostream& sink) {
  if (records.empty()) return;
  std::vector<std::string> models;
  std::size_t width = 5;
  for (const ReportRecord& r : records) {
    models.push_back(r.label.empty() ? one_line(r.model) : r.label);
    width = std::max(width, models.back().size());
  }
  for (std::size_t k = 0; k < records.size(); ++k) {
    sink << models[k] << std::string(width - models[k].size(), ' ');
    for (int i = 0; i < kPropertyCount; ++i) {
      const std::string_view name = kPropertyNames[static_cast<std::size_t>(i)];
      const bool v = records[k].properties[static_cast<std::size_t>(i)];
      std::string cell = std::string(name) + "=" + (v ? "true" : "false");
      const std::size_t cell_width = name.size() + 6;
      sink << "  " << cell;
      if (i + 1 < kPropertyCount) sink << std::string(cell_width - cell.size(), ' ');
    }
    sink << "\n";
  }
}

}  // namespace

void write_report(std::span<const ReportRecord> records, ReportFormat format, std::ostream& sink) {
  if (format == ReportFormat::kJsonl) {
    for (const ReportRecord& r : records) sink << record_to_json(r).dump() << "\n";
  } else {
    write_human(records, sink);
  }
  sink.flush();
  if (!sink) throw ModelError(ErrorCode::kIo, "failed writing report");
}

}  // namespace tms
