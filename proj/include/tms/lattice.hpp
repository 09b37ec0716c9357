#ifndef TMS_LATTICE_HPP
#define TMS_LATTICE_HPP

#include <vector>

#include "tms/partition.hpp"
#include "tms/subset.hpp"
#include "tms/topology.hpp"

namespace tms {

/// Classes of topologically indistinguishable points. Their unions are
/// exactly the Borel sets of `t`.
Partition borel_atoms(const Topology& t);

/// All complements of opens, sorted by bit pattern.
std::vector<Subset> closed_sets(const Topology& t);

/// Largest closed subset of `s`. In a finite space this is the union of all
/// closed subsets, so it also stands in for "largest F-sigma subset".
Subset closed_kernel(const Topology& t, Subset s);

/// Smallest open superset of `s` (union of minimal neighbourhoods).
Subset open_hull(const Topology& t, Subset s);

/// Minimal nonempty clopen sets, i.e. connected components.
Partition clopen_atoms(const Topology& t);

/// Opens of `t` intersected with `c`; the result has carrier `c`.
Topology subspace_topology(const Topology& t, Subset c);

/// Whether the function `u` restricted to `c` is continuous for the subspace
/// topology on `c`. Decided by the clopen-atom criterion: a finitely-valued
/// map into the extended reals is continuous iff it is constant on every
/// connected component of its domain. Requires c to be inside u's carrier.
bool is_continuous(const Topology& t, const LabeledPartition& u, Subset c);

/// Connected components of the subspace on `c`, computed without
/// materialising the subspace topology.
Partition components_within(const Topology& t, Subset c);

/// Whether a function f on `domain` (given by its fibers) extends to a
/// continuous function on the whole carrier of `t`: f must be constant on
/// the part of every component of `t` lying in `domain`.
bool extends_continuously(const Topology& t, const LabeledPartition& f, Subset domain);

/// The canonical continuous extension of f|domain: each component of `t`
/// takes f's value on it, or one fresh value when it misses `domain`.
/// Only meaningful when extends_continuously() holds.
LabeledPartition canonical_extension(const Topology& t, const LabeledPartition& f, Subset domain);

}  // namespace tms

#endif  // TMS_LATTICE_HPP
