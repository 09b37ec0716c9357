#include "tms/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace tms {

Partition borel_atoms(const Topology& t) {
  std::vector<Subset> blocks;
  Subset left = t.carrier();
  while (!left.empty()) {
    const int p = left.lowest();
    Subset cls;
    left.for_each([&](int q) {
      if (t.neighborhood(p).contains(q) && t.neighborhood(q).contains(p)) cls = cls.with(q);
    });
    blocks.push_back(cls);
    left -= cls;
  }
  return Partition(std::move(blocks));
}

std::vector<Subset> closed_sets(const Topology& t) {
  std::vector<Subset> out;
  out.reserve(t.opens().size());
  for (Subset o : t.opens()) out.push_back(o.complement_in(t.carrier()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subset open_hull(const Topology& t, Subset s) {
  Subset out;
  (s & t.carrier()).for_each([&](int p) { out |= t.neighborhood(p); });
  return out;
}

Subset closed_kernel(const Topology& t, Subset s) {
  return open_hull(t, s.complement_in(t.carrier())).complement_in(t.carrier());
}

Partition components_within(const Topology& t, Subset c) {
  // Union-find over the symmetric closure of "q lies in p's neighbourhood".
  std::array<int, kMaxPoints> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  c.for_each([&](int p) {
    (t.neighborhood(p) & c).for_each([&](int q) {
      const int a = find(p);
      const int b = find(q);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  });
  std::array<Subset, kMaxPoints> groups{};
  c.for_each([&](int p) { groups[find(p)] = groups[find(p)].with(p); });
  std::vector<Subset> blocks;
  for (Subset g : groups)
    if (!g.empty()) blocks.push_back(g);
  return Partition(std::move(blocks));
}

Partition clopen_atoms(const Topology& t) { return components_within(t, t.carrier()); }

Topology subspace_topology(const Topology& t, Subset c) {
  std::vector<Subset> opens;
  opens.reserve(t.opens().size());
  for (Subset o : t.opens()) opens.push_back(o & c);
  return Topology::unchecked(c, std::move(opens));
}

namespace {

bool constant_on_blocks(const LabeledPartition& u, const Partition& blocks) {
  for (Subset b : blocks.blocks()) {
    const int label = u.block_of(b.lowest());
    if (label < 0 || !b.subset_of(u.block(label))) return false;
  }
  return true;
}

}  // namespace

bool is_continuous(const Topology& t, const LabeledPartition& u, Subset c) {
  return constant_on_blocks(u, components_within(t, c));
}

bool extends_continuously(const Topology& t, const LabeledPartition& f, Subset domain) {
  return constant_on_blocks(f, clopen_atoms(t).restricted(domain));
}

LabeledPartition canonical_extension(const Topology& t, const LabeledPartition& f, Subset domain) {
  // One block per label of f seen on domain, plus one fresh block per
  // component missing the domain.
  std::array<Subset, kMaxPoints> by_label{};
  std::vector<Subset> fresh;
  const Partition atoms = clopen_atoms(t);
  for (Subset comp : atoms.blocks()) {
    const Subset hit = comp & domain;
    if (hit.empty()) {
      fresh.push_back(comp);
    } else {
      const int label = f.block_of(hit.lowest());
      by_label[static_cast<std::size_t>(label)] |= comp;
    }
  }
  std::vector<Subset> blocks = std::move(fresh);
  for (Subset b : by_label)
    if (!b.empty()) blocks.push_back(b);
  return Partition(std::move(blocks));
}

}  // namespace tms
