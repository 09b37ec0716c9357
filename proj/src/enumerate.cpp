#include "tms/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "tms/lattice.hpp"

namespace tms {

namespace {

void require_exhaustive(int n) {
  if (n < 1 || n > kMaxExhaustivePoints) {
    throw ModelError(ErrorCode::kTooLarge, "exhaustive enumeration supports 1..5 points, got " + std::to_string(n));
  }
}

struct Growth {
  int n;
  std::uint32_t universe;
  std::vector<std::uint32_t> found;

  // Subsets are visited in increasing bit order. `family` and `forced` are
  // bitmasks over the 2^n subsets.
  void grow(std::uint32_t s, std::uint64_t family, std::uint64_t forced) {
    if (s == universe) {
      found.push_back(static_cast<std::uint32_t>(family | (std::uint64_t{1} << s)));
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << s;
    bool can_include = true;
    std::uint64_t forced_with = forced;
    for (std::uint32_t t = 0; t < s && can_include; ++t) {
      if (!(family >> t & 1)) continue;
      if (!(family >> (s & t) & 1) && (s & t) != s) can_include = false;
      forced_with |= std::uint64_t{1} << (s | t);
    }
    if (can_include) grow(s + 1, family | bit, forced_with);
    if (!(forced & bit)) grow(s + 1, family, forced);
  }
};

std::vector<Subset> opens_from_mask(std::uint64_t mask, int n) {
  std::vector<Subset> opens;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (mask >> s & 1) opens.push_back(Subset(s));
  }
  return opens;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<std::vector<int>>& permutations_of(int n) {
  static const auto cache = [] {
    std::array<std::vector<std::vector<int>>, kMaxCanonicalPoints + 1> c;
    for (int k = 0; k <= kMaxCanonicalPoints; ++k) c[static_cast<std::size_t>(k)] = all_permutations(k);
    return c;
  }();
  return cache[static_cast<std::size_t>(n)];
}

std::vector<std::uint32_t> encode_opens(std::span<const Subset> opens, std::span<const int> perm) {
  std::vector<std::uint32_t> out;
  out.reserve(opens.size());
  for (Subset o : opens) out.push_back(permute(o, perm).bits());
  std::sort(out.begin(), out.end());
  return out;
}

void partitions_into(std::vector<int>& points, std::size_t i, std::vector<Subset>& blocks,
                     std::vector<std::vector<Subset>>& out) {
  if (i == points.size()) {
    out.push_back(blocks);
    return;
  }
  const Subset p = Subset::singleton(points[i]);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] = blocks[b] | p;
    partitions_into(points, i + 1, blocks, out);
    blocks[b] = blocks[b] - p;
  }
  blocks.push_back(p);
  partitions_into(points, i + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<Topology> enumerate_topologies(int n, bool unlabeled) {
  require_exhaustive(n);
  Growth g{n, (1u << n) - 1, {}};
  if (n == 0) return {};
  g.grow(1, 1, std::uint64_t{1} << g.universe);
  std::vector<Topology> out;
  out.reserve(g.found.size());
  for (std::uint32_t mask : g.found) out.push_back(Topology::make(n, opens_from_mask(mask, n)));
  if (!unlabeled) return out;

  std::vector<CanonicalKey> keys;
  for (const Topology& t : out) keys.push_back(canonical_form(t, n));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Topology> reps;
  for (const CanonicalKey& k : keys) {
    std::vector<Subset> opens;
    for (std::uint32_t o : k.opens) opens.push_back(Subset(o));
    reps.push_back(Topology::make(n, std::move(opens)));
  }
  return reps;
}

std::vector<std::vector<Subset>> set_partitions(Subset s) {
  std::vector<int> points;
  s.for_each([&](int p) { points.push_back(p); });
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> blocks;
  partitions_into(points, 0, blocks, out);
  return out;
}

std::vector<SigmaAlgebra> enumerate_sigma_algebras(const Topology& t) {
  const Partition atoms = borel_atoms(t);
  std::vector<std::vector<std::vector<Subset>>> choices;
  for (Subset a : atoms.blocks()) choices.push_back(set_partitions(a));
  std::vector<SigmaAlgebra> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<Subset> blocks;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& c = choices[i][idx[i]];
      blocks.insert(blocks.end(), c.begin(), c.end());
    }
    out.emplace_back(Partition(std::move(blocks)));
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

std::vector<Measure> enumerate_measures(const SigmaAlgebra& sigma, std::span<const ExtValue> grid) {
  std::vector<Measure> out;
  if (grid.empty()) return out;
  const std::size_t k = static_cast<std::size_t>(sigma.atoms().size());
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<ExtValue> mass;
    for (std::size_t i : idx) mass.push_back(grid[i]);
    out.emplace_back(std::move(mass));
    std::size_t i = k;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++idx[i] < grid.size()) break;
      idx[i] = 0;
    }
  }
}

Subset permute(Subset s, std::span<const int> perm) {
  std::uint32_t out = 0;
  s.for_each([&](int p) { out |= 1u << perm[static_cast<std::size_t>(p)]; });
  return Subset(out);
}

Topology permute(const Topology& t, std::span<const int> perm) {
  std::vector<Subset> opens;
  for (Subset o : t.opens()) opens.push_back(permute(o, perm));
  return Topology::unchecked(permute(t.carrier(), perm), std::move(opens));
}

Space permute(const Space& space, std::span<const int> perm) {
  std::vector<Subset> blocks;
  for (Subset a : space.sigma().atoms().blocks()) blocks.push_back(permute(a, perm));
  Partition atoms(blocks);
  std::vector<ExtValue> mass(static_cast<std::size_t>(atoms.size()));
  const Partition& old = space.sigma().atoms();
  for (int i = 0; i < old.size(); ++i) {
    const Subset image = permute(old.block(i), perm);
    mass[static_cast<std::size_t>(atoms.block_of(image.lowest()))] = space.measure().atom_mass(i);
  }
  std::vector<std::string> names(space.points().size());
  for (std::size_t i = 0; i < names.size(); ++i) names[static_cast<std::size_t>(perm[i])] = space.points()[i];
  return Space::make(std::move(names), permute(space.topology(), perm), SigmaAlgebra(std::move(atoms)),
                     Measure(std::move(mass)));
}

std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.opens <=> b.opens; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(), [](const auto& x, const auto& y) {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

CanonicalKey canonical_form(const Topology& t, int n) {
  if (n > kMaxCanonicalPoints) throw ModelError(ErrorCode::kTooLarge, "canonical form supports at most 8 points");
  CanonicalKey best;
  bool first = true;
  for (const auto& perm : permutations_of(n)) {
    CanonicalKey k{n, encode_opens(t.opens(), perm), {}};
    if (first || k < best) best = std::move(k);
    first = false;
  }
  return best;
}

CanonicalKey canonical_form(const Space& space) {
  const int n = space.size();
  if (n > kMaxCanonicalPoints) throw ModelError(ErrorCode::kTooLarge, "canonical form supports at most 8 points");
  const Partition& atoms = space.sigma().atoms();
  CanonicalKey best;
  bool first = true;
  for (const auto& perm : permutations_of(n)) {
    CanonicalKey k{n, encode_opens(space.topology().opens(), perm), {}};
    if (!first && k.opens > best.opens) continue;
    for (int i = 0; i < atoms.size(); ++i) {
      k.atoms.emplace_back(permute(atoms.block(i), perm).bits(), space.measure().atom_mass(i));
    }
    std::sort(k.atoms.begin(), k.atoms.end());
    if (first || k < best) best = std::move(k);
    first = false;
  }
  return best;
}

bool are_homeomorphic(const Space& a, const Space& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

SpaceStream::SpaceStream(EnumConfig config) : config_(std::move(config)) {
  topologies_ = enumerate_topologies(config_.n, config_.unlabeled);
  names_ = default_point_names(config_.n);
  if (config_.mass_grid.empty()) done_ = true;
}

bool SpaceStream::advance_sigma() {
  if (++sigma_ >= sigmas_.size()) return false;
  digits_.assign(static_cast<std::size_t>(sigmas_[sigma_].atoms().size()), 0);
  return true;
}

bool SpaceStream::advance_topology() {
  if (topology_ < topologies_.size()) {
    const Topology& t = topologies_[topology_];
    if (config_.sigma_mode == SigmaMode::kPowerset) {
      sigmas_ = {SigmaAlgebra::powerset(config_.n)};
    } else {
      sigmas_ = enumerate_sigma_algebras(t);
    }
    sigma_ = 0;
    digits_.assign(static_cast<std::size_t>(sigmas_[0].atoms().size()), 0);
    return true;
  }
  return false;
}

std::optional<Space> SpaceStream::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
      if (!advance_topology()) {
        done_ = true;
        break;
      }
    } else {
      std::size_t i = digits_.size();
      bool carried = true;
      while (i > 0) {
        --i;
        if (++digits_[i] < config_.mass_grid.size()) {
          carried = false;
          break;
        }
        digits_[i] = 0;
      }
      if (carried && !advance_sigma()) {
        ++topology_;
        if (!advance_topology()) {
          done_ = true;
          break;
        }
      }
    }
    std::vector<ExtValue> mass;
    for (std::size_t d : digits_) mass.push_back(config_.mass_grid[d]);
    Space s = Space::make(names_, topologies_[topology_], sigmas_[sigma_], Measure(std::move(mass)));
    if (config_.unlabeled && !seen_.insert(canonical_form(s)).second) continue;
    return s;
  }
  return std::nullopt;
}

SampledStream::SampledStream(EnumConfig config, std::uint64_t count)
    : config_(std::move(config)), remaining_(count), rng_(config_.seed) {
  if (config_.n < 1 || config_.n > kMaxPoints) {
    throw ModelError(ErrorCode::kTooLarge, "sampling supports 1..16 points, got " + std::to_string(config_.n));
  }
  if (config_.mass_grid.empty()) remaining_ = 0;
}

std::optional<Space> SampledStream::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  const int n = config_.n;
  std::array<std::uint32_t, kMaxPoints> up{};
  for (int p = 0; p < n; ++p) {
    up[static_cast<std::size_t>(p)] = static_cast<std::uint32_t>(draw(std::uint64_t{1} << n)) | (1u << p);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      std::uint32_t u = up[static_cast<std::size_t>(p)];
      std::uint32_t w = u;
      for (int q = 0; q < n; ++q) {
        if (u >> q & 1) w |= up[static_cast<std::size_t>(q)];
      }
      if (w != u) {
        up[static_cast<std::size_t>(p)] = w;
        changed = true;
      }
    }
  }
  std::vector<Subset> opens;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::uint32_t hull = 0;
    for (int p = 0; p < n; ++p) {
      if (s >> p & 1) hull |= up[static_cast<std::size_t>(p)];
    }
    if (hull == s) opens.push_back(Subset(s));
  }
  Topology t = Topology::make(n, std::move(opens));
  SigmaAlgebra sigma = SigmaAlgebra::powerset(n);
  if (config_.sigma_mode == SigmaMode::kAllRefinements) {
    std::vector<Subset> blocks;
    const Partition borel = borel_atoms(t);
    for (Subset a : borel.blocks()) {
      std::vector<Subset> parts;
      a.for_each([&](int p) {
        const std::uint64_t j = draw(parts.size() + 1);
        if (j == parts.size()) {
          parts.push_back(Subset::singleton(p));
        } else {
          parts[j] = parts[j].with(p);
        }
      });
      blocks.insert(blocks.end(), parts.begin(), parts.end());
    }
    sigma = SigmaAlgebra(Partition(std::move(blocks)));
  }
  std::vector<ExtValue> mass;
  for (int i = 0; i < sigma.atoms().size(); ++i) mass.push_back(config_.mass_grid[draw(config_.mass_grid.size())]);
  return Space::make(default_point_names(n), std::move(t), std::move(sigma), Measure(std::move(mass)));
}

}  // namespace tms
