#ifndef TMS_HARNESS_HPP
#define TMS_HARNESS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tms/registry.hpp"
#include "tms/report.hpp"
#include "tms/space.hpp"

namespace tms {

struct HarnessConfig {
  int jobs = 1;
  /// Models pulled from the stream per parallel round.
  std::size_t batch = 2048;
  /// Violations kept verbatim; the count is always exact.
  std::size_t max_stored_violations = 64;
};

struct EntryStats {
  std::string name;
  std::string family;
  std::uint64_t exercised = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t violations = 0;
};

struct HarnessViolation {
  std::uint64_t model_index = 0;
  std::string entry;
  std::string side;
  std::string model_source;
};

struct HarnessSummary {
  std::uint64_t models = 0;
  std::array<std::uint64_t, kPropertyCount> property_true{};
  std::vector<EntryStats> entries;
  std::uint64_t violation_count = 0;
  std::vector<HarnessViolation> violations;

  bool ok() const { return violation_count == 0; }
  /// Per-family totals in registry order (T2.1 and T2.2 fold into T2).
  std::vector<EntryStats> family_stats() const;
  friend bool operator==(const HarnessSummary&, const HarnessSummary&);
};

bool operator==(const EntryStats&, const EntryStats&);
bool operator==(const HarnessViolation&, const HarnessViolation&);

using SpaceSource = std::function<std::optional<Space>()>;

HarnessSummary run_harness(const SpaceSource& next, const HarnessConfig& config = {});
HarnessSummary run_harness(std::span<const Space> spaces, const HarnessConfig& config = {});

/// Frequency table, entry table and the first violation with its model source.
std::string format_summary(const HarnessSummary& summary);

}  // namespace tms

#endif  // TMS_HARNESS_HPP
