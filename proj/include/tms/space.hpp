#ifndef TMS_SPACE_HPP
#define TMS_SPACE_HPP

#include <span>
#include <string>
#include <vector>

#include "tms/error.hpp"
#include "tms/ext_value.hpp"
#include "tms/partition.hpp"
#include "tms/subset.hpp"
#include "tms/topology.hpp"

namespace tms {

/// A finite sigma-algebra, represented by its atoms.
class SigmaAlgebra {
 public:
  SigmaAlgebra() = default;
  explicit SigmaAlgebra(Partition atoms) : atoms_(std::move(atoms)) {}
  static SigmaAlgebra powerset(int n) { return SigmaAlgebra(Partition::singletons(Subset::full(n))); }

  const Partition& atoms() const { return atoms_; }
  bool is_measurable(Subset s) const { return atoms_.is_union_of_blocks(s); }

  friend bool operator==(const SigmaAlgebra&, const SigmaAlgebra&) = default;

 private:
  Partition atoms_;
};

/// Mass of each sigma-atom, aligned with SigmaAlgebra::atoms() block ids.
class Measure {
 public:
  Measure() = default;
  explicit Measure(std::vector<ExtValue> atom_mass) : mass_(std::move(atom_mass)) {}

  std::span<const ExtValue> atom_masses() const { return mass_; }
  const ExtValue& atom_mass(int atom) const { return mass_[static_cast<std::size_t>(atom)]; }
  int size() const { return static_cast<int>(mass_.size()); }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::vector<ExtValue> mass_;
};

struct Violation {
  ErrorCode code;
  std::string invariant;
  Subset witness;
};

/// (points, topology, sigma-algebra, measure). Immutable once built; all
/// derived families (measurable, Borel, open, closed sets) are cached in
/// increasing bit order so deciders can scan them for minimal witnesses.
class Space {
 public:
  /// Validates every invariant; throws ModelError with the first violation.
  static Space make(std::vector<std::string> points, Topology topology, SigmaAlgebra sigma, Measure measure);
  /// Builds without validation (used to exercise validate()).
  static Space unchecked(std::vector<std::string> points, Topology topology, SigmaAlgebra sigma, Measure measure);

  int size() const { return static_cast<int>(points_.size()); }
  Subset ground() const { return Subset::full(size()); }
  const std::vector<std::string>& points() const { return points_; }
  const Topology& topology() const { return topology_; }
  const SigmaAlgebra& sigma() const { return sigma_; }
  const Measure& measure() const { return measure_; }
  const Partition& borel_atoms() const { return borel_atoms_; }

  bool is_measurable(Subset s) const { return sigma_.is_measurable(s); }
  bool is_borel(Subset s) const { return borel_atoms_.is_union_of_blocks(s); }
  /// Sum of atom masses inside `s`; throws ModelError(kNotMeasurable) if `s` splits an atom.
  ExtValue measure_of(Subset s) const;
  bool is_null(Subset s) const { return measure_of(s).is_zero(); }

  std::span<const Subset> measurable_sets() const { return measurable_; }
  std::span<const Subset> borel_sets() const { return borel_; }
  std::span<const Subset> closed_sets() const { return closed_; }
  std::span<const Subset> open_sets() const { return topology_.opens(); }

  /// Equality of the defining data (not of point names).
  friend bool operator==(const Space& a, const Space& b) {
    return a.points_ == b.points_ && a.topology_ == b.topology_ && a.sigma_ == b.sigma_ && a.measure_ == b.measure_;
  }

 private:
  Space(std::vector<std::string> points, Topology topology, SigmaAlgebra sigma, Measure measure);

  std::vector<std::string> points_;
  Topology topology_;
  SigmaAlgebra sigma_;
  Measure measure_;
  Partition borel_atoms_;
  std::vector<Subset> measurable_;
  std::vector<Subset> borel_;
  std::vector<Subset> closed_;
};

/// Empty iff every invariant of the space holds. Each record names the
/// violated invariant and a witness subset.
std::vector<Violation> validate(const Space& space);

/// Default point names a, b, c, ... (then p16.. beyond 'z', which never happens at n <= 16).
std::string default_point_name(int index);
std::vector<std::string> default_point_names(int n);

}  // namespace tms

#endif  // TMS_SPACE_HPP
