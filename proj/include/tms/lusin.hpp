#ifndef TMS_LUSIN_HPP
#define TMS_LUSIN_HPP

#include <optional>
#include <string_view>

#include "tms/partition.hpp"
#include "tms/space.hpp"
#include "tms/verdict.hpp"

namespace tms {

// Lusin-type properties and Borel representatives.
//
// A measurable function u: X -> extended reals is represented by its fiber
// partition; only the fibers and the distinctness of values matter for
// measurability, continuity, agreement and extension. Each decider tests the
// sigma-atom partition with pairwise distinct labels: every measurable u
// coarsens it, and a witness for the finest partition works for every
// coarsening after merging labels.

enum class LusinKind { kWeak, kStrong, kBorelWeak, kBorelStrong };

std::string_view lusin_kind_name(LusinKind kind);

struct LusinWitness {
  LusinKind kind = LusinKind::kWeak;
  /// The closed C (or Borel B) of full measure carrying the continuity.
  Subset set;
  /// For strong kinds: the continuous g on X agreeing with u on `set`.
  std::optional<LabeledPartition> extension;
};

struct RepWitness {
  /// Borel null set off which the representative equals u.
  Subset null_set;
  /// Borel function (every fiber Borel), agreeing with u off null_set.
  LabeledPartition representative;
};

/// Sigma-atoms, one label each.
LabeledPartition finest_measurable_partition(const Space& space);
/// Carrier is X and every fiber is measurable.
bool is_measurable_partition(const Space& space, const LabeledPartition& u);

Verdict weak_lusin(const Space& space);
Verdict weak_lusin_borel(const Space& space);
Verdict strong_lusin(const Space& space);
Verdict strong_lusin_borel(const Space& space);
Verdict has_borel_representatives(const Space& space);

/// Exhaustive witness search for one function u: candidate sets of full
/// measure in increasing bit order, first success returned.
std::optional<LusinWitness> find_lusin_witness(const Space& space, const LabeledPartition& u, LusinKind kind);

/// Builds the witness the way the existence proof does: each fiber E is
/// squeezed between closed_kernel(E) and open_hull(E) and the gaps are
/// removed, C = X \ U (hull(E) \ kernel(E)). That C is the largest closed set
/// on which u is continuous; strong kinds then shrink it to the largest
/// closed full-measure subset admitting a continuous extension. Borel kinds
/// fall back to a search over Borel sets. Throws ModelError(kNotMeasurable)
/// if u is not measurable.
std::optional<LusinWitness> construct_lusin_set(const Space& space, const LabeledPartition& u, LusinKind kind);

/// Borel null sets by increasing size then bit pattern, assignments of the
/// null points lexicographic (existing labels first, then fresh ones).
std::optional<RepWitness> find_borel_representative(const Space& space, const LabeledPartition& u);

}  // namespace tms

#endif  // TMS_LUSIN_HPP
