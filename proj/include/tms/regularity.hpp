#ifndef TMS_REGULARITY_HPP
#define TMS_REGULARITY_HPP

#include "tms/space.hpp"
#include "tms/verdict.hpp"

namespace tms {

// Exact deciders for the measure/topology regularity notions. Every infimum
// or supremum ranges over a finite family and is attained, so "< eps for
// every eps" is decided as "exactly zero". Counterexamples are the
// lexicographically smallest offending set (by bit pattern).

/// Every measurable E has a Borel superset of equal measure. The minimal
/// Borel superset (union of Borel atoms meeting E) is the only candidate.
Verdict is_borel_regular(const Space& space);
/// mu(E) = mu(open_hull(E)) for every measurable E.
Verdict is_outer_regular(const Space& space);
/// mu(E) = mu(closed_kernel(E)) for every measurable E.
Verdict is_inner_regular(const Space& space);
/// mu(open_hull(E) \ closed_kernel(E)) = 0 for every measurable E.
/// Throws std::logic_error if the three equivalent forms ever disagree.
Verdict is_strongly_regular(const Space& space);
Verdict is_sigma_finite(const Space& space);
/// Every point has an open neighbourhood of finite measure.
Verdict has_open_sigma_finite_cover(const Space& space);
/// Every open U is (closed set) u (null set): mu(U \ closed_kernel(U)) = 0.
Verdict opens_decompose(const Space& space);
Verdict is_normal(const Space& space);
/// Every continuous function on a closed set extends continuously.
Verdict has_tietze_property(const Space& space);
Verdict is_almost_normal(const Space& space);

/// The three strong-regularity forms, each quantified over all measurable sets.
struct StrongRegularityForms {
  bool sandwich = false;        // mu(O \ C) = 0 with C closed <= E <= O open
  bool open_excess = false;     // mu(O \ E) = 0
  bool closed_deficit = false;  // mu(E \ C) = 0
};
StrongRegularityForms strong_regularity_forms(const Space& space);

}  // namespace tms

#endif  // TMS_REGULARITY_HPP
