#ifndef TMS_TOPOLOGY_HPP
#define TMS_TOPOLOGY_HPP

#include <array>
#include <span>
#include <vector>

#include "tms/subset.hpp"

namespace tms {

/// A finite topology on a carrier subset of the points 0..15.
///
/// Opens are stored sorted by bit pattern without duplicates. Because the
/// space is finite, closure under pairwise union and intersection is the
/// whole topology axiom set. Each point's minimal open neighbourhood is
/// precomputed at construction; every hull/kernel query is built from it.
class Topology {
 public:
  Topology() = default;

  /// Adds the empty set and the carrier, then requires lattice closure.
  /// Throws ModelError(kTopology) naming the first missing union/intersection.
  static Topology make(Subset carrier, std::vector<Subset> opens);
  static Topology make(int n, std::vector<Subset> opens) { return make(Subset::full(n), std::move(opens)); }
  /// Sorted and deduplicated, nothing else.
  static Topology unchecked(Subset carrier, std::vector<Subset> opens);

  static Topology discrete(int n);
  static Topology indiscrete(int n);

  Subset carrier() const { return carrier_; }
  std::span<const Subset> opens() const { return opens_; }
  int open_count() const { return static_cast<int>(opens_.size()); }

  /// Intersection of all opens containing `point` (empty outside the carrier).
  Subset neighborhood(int point) const { return nbhd_[static_cast<std::size_t>(point)]; }
  bool is_open(Subset s) const;
  bool is_closed(Subset s) const { return is_open(s.complement_in(carrier_)); }

  /// Sets missing from the family for it to be a topology on the carrier:
  /// absent empty set/carrier, pairwise unions and intersections, opens
  /// escaping the carrier. Sorted, deduplicated.
  std::vector<Subset> lattice_violations() const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.carrier_ == b.carrier_ && a.opens_ == b.opens_;
  }

 private:
  Topology(Subset carrier, std::vector<Subset> opens);

  Subset carrier_;
  std::vector<Subset> opens_;
  std::array<Subset, kMaxPoints> nbhd_{};
};

}  // namespace tms

#endif  // TMS_TOPOLOGY_HPP
