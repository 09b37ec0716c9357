#include "tms/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "tms/model_io.hpp"

namespace tms {

bool operator==(const EntryStats& a, const EntryStats& b) {
  return a.name == b.name && a.family == b.family && a.exercised == b.exercised && a.vacuous == b.vacuous &&
         a.violations == b.violations;
}

bool operator==(const HarnessViolation& a, const HarnessViolation& b) {
  return a.model_index == b.model_index && a.entry == b.entry && a.side == b.side && a.model_source == b.model_source;
}

bool operator==(const HarnessSummary& a, const HarnessSummary& b) {
  return a.models == b.models && a.property_true == b.property_true && a.entries == b.entries &&
         a.violation_count == b.violation_count && a.violations == b.violations;
}

std::vector<EntryStats> HarnessSummary::family_stats() const {
  std::vector<EntryStats> out;
  for (const EntryStats& e : entries) {
    auto it = std::find_if(out.begin(), out.end(), [&](const EntryStats& f) { return f.family == e.family; });
    if (it == out.end()) {
      out.push_back({e.family, e.family, 0, 0, 0});
      it = out.end() - 1;
    }
    it->exercised += e.exercised;
    it->vacuous += e.vacuous;
    it->violations += e.violations;
  }
  return out;
}

namespace {

struct ModelResult {
  std::array<bool, kPropertyCount> properties{};
  std::vector<EntryOutcome> outcomes;
  std::vector<ImplicationViolation> violations;
};

ModelResult check_model(const Space& space) {
  ModelResult r;
  const PropertyReport report = evaluate_report(space);
  r.properties = report.booleans();
  r.outcomes = evaluate_registry(make_facts(report, compute_aux_facts(space)), &r.violations);
  return r;
}

void evaluate_batch(std::span<const Space> batch, std::vector<ModelResult>& results, int jobs) {
  results.assign(batch.size(), {});
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || batch.size() < 2) {
    for (std::size_t i = 0; i < batch.size(); ++i) results[i] = check_model(batch[i]);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < batch.size(); i += workers) results[i] = check_model(batch[i]);
    });
  }
  for (auto& t : pool) t.join();
}

class Accumulator {
 public:
  explicit Accumulator(const HarnessConfig& config) : config_(config) {
    for (const Implication& imp : implication_registry()) summary_.entries.push_back({imp.name, imp.family, 0, 0, 0});
  }

  void add(const Space& space, const ModelResult& r) {
    const std::uint64_t index = summary_.models++;
    for (int i = 0; i < kPropertyCount; ++i) {
      if (r.properties[static_cast<std::size_t>(i)]) ++summary_.property_true[static_cast<std::size_t>(i)];
    }
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
      EntryStats& e = summary_.entries[i];
      switch (r.outcomes[i]) {
        case EntryOutcome::kVacuous: ++e.vacuous; break;
        case EntryOutcome::kHolds: ++e.exercised; break;
        case EntryOutcome::kViolated: ++e.exercised; ++e.violations; break;
      }
    }
    for (const ImplicationViolation& v : r.violations) {
      ++summary_.violation_count;
      if (summary_.violations.size() < config_.max_stored_violations) {
        summary_.violations.push_back({index, v.entry, v.side, serialize_model(space)});
      }
    }
  }

  HarnessSummary take() { return std::move(summary_); }

 private:
  const HarnessConfig& config_;
  HarnessSummary summary_;
};

}  // namespace

HarnessSummary run_harness(const SpaceSource& next, const HarnessConfig& config) {
  Accumulator acc(config);
  std::vector<Space> batch;
  std::vector<ModelResult> results;
  const std::size_t batch_size = std::max<std::size_t>(1, config.batch);
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size) {
      std::optional<Space> s = next();
      if (!s) {
        more = false;
        break;
      }
      batch.push_back(std::move(*s));
    }
    evaluate_batch(batch, results, config.jobs);
    for (std::size_t i = 0; i < batch.size(); ++i) acc.add(batch[i], results[i]);
  }
  return acc.take();
}

HarnessSummary run_harness(std::span<const Space> spaces, const HarnessConfig& config) {
  std::size_t i = 0;
  return run_harness([&]() -> std::optional<Space> {
    if (i >= spaces.size()) return std::nullopt;
    return spaces[i++];
  }, config);
}

std::string format_summary(const HarnessSummary& summary) {
  std::ostringstream out;
  out << "models checked: " << summary.models << "\n";
  out << "violations: " << summary.violation_count << "\n\n";
  out << "property frequencies\n";
  for (int i = 0; i < kPropertyCount; ++i) {
    out << "  " << std::left << std::setw(20) << kPropertyNames[static_cast<std::size_t>(i)] << std::right
        << std::setw(10) << summary.property_true[static_cast<std::size_t>(i)] << "\n";
  }
  out << "\nregistry entries\n";
  out << "  " << std::left << std::setw(8) << "entry" << std::right << std::setw(12) << "exercised" << std::setw(12)
      << "vacuous" << std::setw(12) << "violations" << "\n";
  for (const EntryStats& e : summary.entries) {
    out << "  " << std::left << std::setw(8) << e.name << std::right << std::setw(12) << e.exercised << std::setw(12)
        << e.vacuous << std::setw(12) << e.violations << "\n";
  }
  if (!summary.violations.empty()) {
    const HarnessViolation& v = summary.violations.front();
    out << "\nfirst violation: " << v.entry << " (" << v.side << ") at model #" << v.model_index << "\n";
    out << v.model_source;
  }
  return out.str();
}

}  // namespace tms
