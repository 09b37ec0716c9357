#ifndef TMS_VERDICT_HPP
#define TMS_VERDICT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tms/ext_value.hpp"
#include "tms/partition.hpp"
#include "tms/subset.hpp"

namespace tms {

/// Structured evidence behind a verdict. Slots are named by role ("E",
/// "hull", "C", "u", "g", ...) so a witness can be re-checked against the
/// raw definition without knowing which decider produced it.
struct Evidence {
  std::vector<std::pair<std::string, Subset>> sets;
  std::vector<std::pair<std::string, ExtValue>> values;
  std::vector<std::pair<std::string, LabeledPartition>> partitions;

  Evidence& set(std::string role, Subset s) {
    sets.emplace_back(std::move(role), s);
    return *this;
  }
  Evidence& value(std::string role, ExtValue v) {
    values.emplace_back(std::move(role), v);
    return *this;
  }
  Evidence& partition(std::string role, LabeledPartition p) {
    partitions.emplace_back(std::move(role), std::move(p));
    return *this;
  }

  std::optional<Subset> find_set(std::string_view role) const {
    for (const auto& [r, s] : sets)
      if (r == role) return s;
    return std::nullopt;
  }
  const LabeledPartition* find_partition(std::string_view role) const {
    for (const auto& [r, p] : partitions)
      if (r == role) return &p;
    return nullptr;
  }
};

struct Verdict {
  bool holds = false;
  /// Short reason tag, e.g. "hull-mass-differs".
  std::string note;
  /// Always present when holds is false.
  std::optional<Evidence> witness;

  static Verdict yes(std::string note = "ok", std::optional<Evidence> w = std::nullopt) {
    return {true, std::move(note), std::move(w)};
  }
  static Verdict no(std::string note, Evidence w) { return {false, std::move(note), std::move(w)}; }
};

}  // namespace tms

#endif  // TMS_VERDICT_HPP
