#ifndef TMS_REPORT_IO_HPP
#define TMS_REPORT_IO_HPP

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tms/report.hpp"
#include "tms/space.hpp"

namespace tms {

/// A self-contained report line: canonical model source, the fifteen
/// booleans and witness summaries with sets named by point lists.
struct ReportRecord {
  /// Optional row label for the human table (not serialized).
  std::string label;
  std::string model;
  std::array<bool, kPropertyCount> properties{};
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
};

ReportRecord make_record(const Space& space, const PropertyReport& report);
ReportRecord make_record(const Space& space);

enum class ReportFormat { kHuman, kJsonl };

std::optional<ReportFormat> parse_report_format(std::string_view name);

nlohmann::ordered_json record_to_json(const ReportRecord& record);
/// Throws ParseError(kGrammar) on malformed input.
ReportRecord record_from_json_line(std::string_view line);

/// Throws ModelError(kIo) if the sink fails.
void write_report(std::span<const ReportRecord> records, ReportFormat format, std::ostream& sink);

}  // namespace tms

#endif  // TMS_REPORT_IO_HPP
