#ifndef TMS_ORACLE_HPP
#define TMS_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tms/lusin.hpp"
#include "tms/report.hpp"
#include "tms/space.hpp"

// Brute-force definitional deciders. Nothing here calls the lattice or
// decider code: only the raw open family, the sigma-atoms and measure_of are
// read from a Space, and every quantifier is expanded over all candidates.
namespace tms::oracle {

inline constexpr int kMaxOraclePoints = 6;

using Blocks = std::vector<std::uint32_t>;

std::vector<std::uint32_t> open_sets(const Space& space);
/// Closure of the opens under complement and union.
std::vector<std::uint32_t> borel_sets(const Space& space);
std::vector<std::uint32_t> closed_sets(const Space& space);

/// Every partition of `set` into nonempty blocks, blocks sorted.
std::vector<Blocks> all_partitions(std::uint32_t set);
/// Partitions of X whose blocks are all measurable (a Bell-number family).
std::vector<Blocks> measurable_partitions(const Space& space);

/// Relative openness in `c` of every union of fibers of u restricted to c.
bool is_continuous(std::span<const std::uint32_t> opens, const Blocks& u, std::uint32_t c);
bool is_continuous(const Space& space, const Blocks& u, std::uint32_t c);

/// The nonempty traces on s coincide.
bool same_on(const Blocks& a, const Blocks& b, std::uint32_t s);

Blocks to_blocks(const LabeledPartition& p);

struct StrongForms {
  /// Every measurable E has closed C within, open O around, mu(O \ C) = 0.
  bool exact = false;
  /// The same with mu(O \ C) < eps for each eps in {1/8, 1/4, 1/2, 1, 2}.
  bool eps_grid = false;
};
StrongForms strong_regularity(const Space& space);

/// A witness exists for this particular u (exact-zero reading).
bool lusin_holds_for(const Space& space, const Blocks& u, LusinKind kind);
bool representative_exists_for(const Space& space, const Blocks& u);

/// Property by its definition, quantified over all measurable functions.
bool decide(const Space& space, Property p);
std::array<bool, kPropertyCount> report(const Space& space);

/// Re-verifies a decider verdict against the raw definition: a positive
/// witness must satisfy the definition, a counterexample must refute every
/// candidate. Returns the failure reason, or nullopt when the verdict stands.
std::optional<std::string> recheck(const Space& space, Property p, const Verdict& verdict);

/// Opens of every topology on n <= 4 points, by filtering all families that
/// contain the empty set and X.
std::vector<std::vector<std::uint32_t>> topologies_by_filter(int n);
/// Number of orbits of the families under point permutations.
std::uint64_t count_orbits(const std::vector<std::vector<std::uint32_t>>& families, int n);

}  // namespace tms::oracle

#endif  // TMS_ORACLE_HPP
