#include "tms/space.hpp"

#include <algorithm>

#include "tms/lattice.hpp"
#include "tms/model_io.hpp"

namespace tms {

namespace {

std::vector<Subset> unions_of(const Partition& p) {
  std::vector<Subset> out;
  const int k = p.size();
  if (k >= 31) return out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    Subset s;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1U) s |= p.block(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Space::Space(std::vector<std::string> points, Topology topology, SigmaAlgebra sigma, Measure measure)
    : points_(std::move(points)),
      topology_(std::move(topology)),
      sigma_(std::move(sigma)),
      measure_(std::move(measure)),
      borel_atoms_(tms::borel_atoms(topology_)),
      measurable_(unions_of(sigma_.atoms())),
      borel_(unions_of(borel_atoms_)),
      closed_(tms::closed_sets(topology_)) {}

Space Space::unchecked(std::vector<std::string> points, Topology topology, SigmaAlgebra sigma, Measure measure) {
  return Space(std::move(points), std::move(topology), std::move(sigma), std::move(measure));
}

Space Space::make(std::vector<std::string> points, Topology topology, SigmaAlgebra sigma, Measure measure) {
  if (points.empty() || static_cast<int>(points.size()) > kMaxPoints)
    throw ModelError(ErrorCode::kTooLarge, "ground set must have 1.." + std::to_string(kMaxPoints) + " points");
  Space s(std::move(points), std::move(topology), std::move(sigma), std::move(measure));
  if (const auto v = validate(s); !v.empty())
    throw ModelError(v.front().code, v.front().invariant + " (witness " + format_set(v.front().witness, s.points()) + ")");
  return s;
}

ExtValue Space::measure_of(Subset s) const {
  if (!sigma_.is_measurable(s))
    throw ModelError(ErrorCode::kNotMeasurable, format_set(s, points_) + " splits a sigma-atom");
  ExtValue total;
  const auto& atoms = sigma_.atoms();
  for (int i = 0; i < atoms.size(); ++i)
    if (atoms.block(i).intersects(s)) total += measure_.atom_mass(i);
  return total;
}

std::vector<Violation> validate(const Space& space) {
  std::vector<Violation> out;
  const Subset ground = space.ground();
  const Topology& t = space.topology();
  if (t.carrier() != ground) out.push_back({ErrorCode::kTopology, "topology carrier differs from the ground set", t.carrier()});
  for (Subset s : t.lattice_violations())
    out.push_back({ErrorCode::kTopology, "open family must contain empty set and X and be closed under union/intersection", s});

  const Partition& atoms = space.sigma().atoms();
  Subset seen;
  for (Subset a : atoms.blocks()) {
    if (a.empty()) out.push_back({ErrorCode::kSigma, "sigma-atoms must be nonempty", a});
    else if (a.intersects(seen)) out.push_back({ErrorCode::kSigma, "sigma-atoms must be disjoint", a});
    else if (!a.subset_of(ground)) out.push_back({ErrorCode::kSigma, "sigma-atoms must lie in the ground set", a});
    seen |= a;
  }
  if (seen != ground) out.push_back({ErrorCode::kSigma, "sigma-atoms must cover the ground set", ground - seen});
  for (Subset b : space.borel_atoms().blocks())
    if (!atoms.is_union_of_blocks(b))
      out.push_back({ErrorCode::kSigma, "every Borel atom must be measurable (Borel sets inside the sigma-algebra)", b});

  if (space.measure().size() != atoms.size())
    out.push_back({ErrorCode::kMass, "exactly one mass per sigma-atom", Subset()});
  return out;
}

std::string default_point_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "p" + std::to_string(index);
}

std::vector<std::string> default_point_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(default_point_name(i));
  return names;
}

}  // namespace tms
