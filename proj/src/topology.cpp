#include "tms/topology.hpp"

#include <algorithm>

#include "tms/error.hpp"
#include "tms/model_io.hpp"

namespace tms {

Topology::Topology(Subset carrier, std::vector<Subset> opens) : carrier_(carrier), opens_(std::move(opens)) {
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  carrier_.for_each([&](int p) {
    Subset n = carrier_;
    for (Subset o : opens_)
      if (o.contains(p)) n &= o;
    nbhd_[static_cast<std::size_t>(p)] = n;
  });
}

Topology Topology::unchecked(Subset carrier, std::vector<Subset> opens) {
  return Topology(carrier, std::move(opens));
}

Topology Topology::make(Subset carrier, std::vector<Subset> opens) {
  opens.push_back(Subset());
  opens.push_back(carrier);
  Topology t(carrier, std::move(opens));
  if (const auto missing = t.lattice_violations(); !missing.empty()) {
    throw ModelError(ErrorCode::kTopology,
                     "open family is not closed under union/intersection; missing " + format_bits(missing.front()));
  }
  return t;
}

Topology Topology::discrete(int n) {
  std::vector<Subset> opens;
  for_each_subset(Subset::full(n), [&](Subset s) { opens.push_back(s); });
  return Topology(Subset::full(n), std::move(opens));
}

Topology Topology::indiscrete(int n) { return Topology(Subset::full(n), {Subset(), Subset::full(n)}); }

bool Topology::is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

std::vector<Subset> Topology::lattice_violations() const {
  std::vector<Subset> missing;
  if (!is_open(Subset())) missing.push_back(Subset());
  if (!is_open(carrier_)) missing.push_back(carrier_);
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if (!opens_[i].subset_of(carrier_)) missing.push_back(opens_[i]);
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j])) missing.push_back(opens_[i] | opens_[j]);
      if (!is_open(opens_[i] & opens_[j])) missing.push_back(opens_[i] & opens_[j]);
    }
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  return missing;
}

}  // namespace tms
