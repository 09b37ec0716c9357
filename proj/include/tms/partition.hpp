#ifndef TMS_PARTITION_HPP
#define TMS_PARTITION_HPP

#include <span>
#include <vector>

#include "tms/subset.hpp"

namespace tms {

/// Disjoint nonempty blocks covering a carrier subset.
///
/// Blocks are kept sorted by their lowest point, so block ids are dense from 0
/// and determined by the block family alone. Used for sigma-algebra atoms,
/// Borel atoms, clopen atoms, and (as LabeledPartition) for functions, where
/// each block is one fiber and distinct blocks stand for distinct values.
class Partition {
 public:
  Partition() = default;
  /// Does not validate; see is_valid().
  explicit Partition(std::vector<Subset> blocks);

  static Partition singletons(Subset carrier);
  static Partition single_block(Subset carrier);

  Subset carrier() const { return carrier_; }
  std::span<const Subset> blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  Subset block(int id) const { return blocks_[static_cast<std::size_t>(id)]; }

  /// Block id of `point`, or -1 if outside the carrier.
  int block_of(int point) const;

  /// True iff `s` is a union of whole blocks (and lies inside the carrier).
  bool is_union_of_blocks(Subset s) const;
  /// Union of the blocks meeting `s`.
  Subset saturate(Subset s) const;
  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  /// Blocks intersected with `c`, empties dropped.
  Partition restricted(Subset c) const;

  /// Blocks nonempty and pairwise disjoint.
  bool is_valid() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Subset> blocks_;
  Subset carrier_;
};

/// Function surrogate: fibers with distinct (unmaterialized) values.
using LabeledPartition = Partition;

/// True iff g agrees with u on `s` up to relabeling: on `s` the map
/// (u-block -> g-block) is well defined and injective.
bool agrees_on(const LabeledPartition& u, const LabeledPartition& g, Subset s);

}  // namespace tms

#endif  // TMS_PARTITION_HPP
