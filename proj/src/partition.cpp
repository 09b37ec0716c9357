#include "tms/partition.hpp"

#include <algorithm>
#include <array>

namespace tms {

Partition::Partition(std::vector<Subset> blocks) : blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end(), [](Subset a, Subset b) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    return a.lowest() < b.lowest();
  });
  for (Subset b : blocks_) carrier_ |= b;
}

Partition Partition::singletons(Subset carrier) {
  std::vector<Subset> blocks;
  carrier.for_each([&](int p) { blocks.push_back(Subset::singleton(p)); });
  return Partition(std::move(blocks));
}

Partition Partition::single_block(Subset carrier) {
  if (carrier.empty()) return Partition();
  return Partition({carrier});
}

int Partition::block_of(int point) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].contains(point)) return static_cast<int>(i);
  return -1;
}

bool Partition::is_union_of_blocks(Subset s) const {
  if (!s.subset_of(carrier_)) return false;
  for (Subset b : blocks_)
    if (b.intersects(s) && !b.subset_of(s)) return false;
  return true;
}

Subset Partition::saturate(Subset s) const {
  Subset out;
  for (Subset b : blocks_)
    if (b.intersects(s)) out |= b;
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](Subset b) {
    const int id = b.empty() ? -1 : coarser.block_of(b.lowest());
    return id >= 0 && b.subset_of(coarser.block(id));
  });
}

Partition Partition::restricted(Subset c) const {
  std::vector<Subset> out;
  for (Subset b : blocks_)
    if (Subset r = b & c; !r.empty()) out.push_back(r);
  return Partition(std::move(out));
}

bool Partition::is_valid() const {
  Subset seen;
  for (Subset b : blocks_) {
    if (b.empty() || b.intersects(seen)) return false;
    seen |= b;
  }
  return true;
}

bool agrees_on(const LabeledPartition& u, const LabeledPartition& g, Subset s) {
  std::array<int, kMaxPoints> forward{};
  std::array<int, kMaxPoints> backward{};
  forward.fill(-1);
  backward.fill(-1);
  bool ok = true;
  s.for_each([&](int p) {
    const int a = u.block_of(p);
    const int b = g.block_of(p);
    if (a < 0 || b < 0) {
      ok = false;
      return;
    }
    if (forward[a] == -1 && backward[b] == -1) {
      forward[a] = b;
      backward[b] = a;
    } else if (forward[a] != b || backward[b] != a) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace tms
