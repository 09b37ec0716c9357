#ifndef TMS_ENUMERATE_HPP
#define TMS_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "tms/ext_value.hpp"
#include "tms/space.hpp"
#include "tms/topology.hpp"

namespace tms {

inline constexpr int kMaxExhaustivePoints = 5;
inline constexpr int kMaxCanonicalPoints = 8;

enum class SigmaMode { kPowerset, kAllRefinements };

struct EnumConfig {
  int n = 3;
  std::vector<ExtValue> mass_grid = {ExtValue(0), ExtValue(1), ExtValue::infinity()};
  bool unlabeled = false;
  SigmaMode sigma_mode = SigmaMode::kPowerset;
  std::uint64_t seed = 0;
};

/// Every topology on n points exactly once, in depth-first growth order.
/// Unlabeled mode keeps one canonical representative per homeomorphism
/// class, sorted by canonical key. Throws ModelError(kTooLarge) for n > 5.
std::vector<Topology> enumerate_topologies(int n, bool unlabeled = false);

/// All partitions of `s` into nonempty blocks (restricted-growth order).
std::vector<std::vector<Subset>> set_partitions(Subset s);

/// Every sigma-algebra between the Borel sets of `t` and the powerset.
std::vector<SigmaAlgebra> enumerate_sigma_algebras(const Topology& t);

/// Every assignment atoms -> grid, lexicographic in (atom order, grid order).
std::vector<Measure> enumerate_measures(const SigmaAlgebra& sigma, std::span<const ExtValue> grid);

/// Image of `s` under point i -> perm[i].
Subset permute(Subset s, std::span<const int> perm);
Topology permute(const Topology& t, std::span<const int> perm);
Space permute(const Space& space, std::span<const int> perm);

struct CanonicalKey {
  int n = 0;
  std::vector<std::uint32_t> opens;
  std::vector<std::pair<std::uint32_t, ExtValue>> atoms;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b);
};

/// Lexicographically least encoding over all point permutations.
/// Throws ModelError(kTooLarge) above eight points.
CanonicalKey canonical_form(const Space& space);
CanonicalKey canonical_form(const Topology& t, int n);
bool are_homeomorphic(const Space& a, const Space& b);

/// Lazy stream of topologies x sigma-algebras x measures.
class SpaceStream {
 public:
  explicit SpaceStream(EnumConfig config);
  std::optional<Space> next();

 private:
  bool advance_topology();
  bool advance_sigma();

  EnumConfig config_;
  std::vector<std::string> names_;
  std::vector<Topology> topologies_;
  std::size_t topology_ = 0;
  std::vector<SigmaAlgebra> sigmas_;
  std::size_t sigma_ = 0;
  std::vector<std::size_t> digits_;
  bool started_ = false;
  bool done_ = false;
  std::set<CanonicalKey> seen_;
};

/// Reproducible uniform-ish samples for n up to 16: random minimal
/// neighbourhoods closed to a preorder, random sigma refinement, random masses.
class SampledStream {
 public:
  SampledStream(EnumConfig config, std::uint64_t count);
  std::optional<Space> next();

 private:
  EnumConfig config_;
  std::uint64_t remaining_;
  std::mt19937_64 rng_;
  std::uint64_t draw(std::uint64_t k) { return rng_() % k; }
};

}  // namespace tms

#endif  // TMS_ENUMERATE_HPP
