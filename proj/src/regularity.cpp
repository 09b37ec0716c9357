#include "tms/regularity.hpp"

#include <stdexcept>

#include "tms/lattice.hpp"

namespace tms {

Verdict is_borel_regular(const Space& space) {
  for (Subset e : space.measurable_sets()) {
    const Subset b = space.borel_atoms().saturate(e);
    const ExtValue me = space.measure_of(e);
    const ExtValue mb = space.measure_of(b);
    if (me != mb)
      return Verdict::no("borel-hull-mass-differs", Evidence{}.set("E", e).set("borel_hull", b).value("E", me).value("borel_hull", mb));
  }
  return Verdict::yes();
}

Verdict is_outer_regular(const Space& space) {
  const Topology& t = space.topology();
  for (Subset e : space.measurable_sets()) {
    const Subset h = open_hull(t, e);
    const ExtValue me = space.measure_of(e);
    const ExtValue mh = space.measure_of(h);
    if (me != mh) return Verdict::no("hull-mass-differs", Evidence{}.set("E", e).set("hull", h).value("E", me).value("hull", mh));
  }
  return Verdict::yes();
}

Verdict is_inner_regular(const Space& space) {
  const Topology& t = space.topology();
  for (Subset e : space.measurable_sets()) {
    const Subset k = closed_kernel(t, e);
    const ExtValue me = space.measure_of(e);
    const ExtValue mk = space.measure_of(k);
    if (me != mk)
      return Verdict::no("kernel-mass-differs", Evidence{}.set("E", e).set("kernel", k).value("E", me).value("kernel", mk));
  }
  return Verdict::yes();
}

StrongRegularityForms strong_regularity_forms(const Space& space) {
  const Topology& t = space.topology();
  StrongRegularityForms f{true, true, true};
  for (Subset e : space.measurable_sets()) {
    const Subset h = open_hull(t, e);
    const Subset k = closed_kernel(t, e);
    f.sandwich = f.sandwich && space.is_null(h - k);
    f.open_excess = f.open_excess && space.is_null(h - e);
    f.closed_deficit = f.closed_deficit && space.is_null(e - k);
  }
  return f;
}

Verdict is_strongly_regular(const Space& space) {
  const StrongRegularityForms forms = strong_regularity_forms(space);
  if (forms.sandwich != forms.open_excess || forms.open_excess != forms.closed_deficit)
    throw std::logic_error("strong regularity forms disagree");
  if (forms.sandwich) return Verdict::yes();
  const Topology& t = space.topology();
  for (Subset e : space.measurable_sets()) {
    const Subset h = open_hull(t, e);
    const Subset k = closed_kernel(t, e);
    if (!space.is_null(h - k))
      return Verdict::no("sandwich-excess-positive",
                         Evidence{}.set("E", e).set("kernel", k).set("hull", h).value("excess", space.measure_of(h - k)));
  }
  throw std::logic_error("strong regularity: no witness for failure");
}

Verdict is_sigma_finite(const Space& space) {
  const Partition& atoms = space.sigma().atoms();
  for (int i = 0; i < atoms.size(); ++i)
    if (space.measure().atom_mass(i).is_infinite())
      return Verdict::no("infinite-atom", Evidence{}.set("atom", atoms.block(i)));
  return Verdict::yes();
}

Verdict has_open_sigma_finite_cover(const Space& space) {
  const Topology& t = space.topology();
  for (int p = 0; p < space.size(); ++p) {
    const Subset n = t.neighborhood(p);
    if (space.measure_of(n).is_infinite())
      return Verdict::no("point-without-finite-open", Evidence{}.set("point", Subset::singleton(p)).set("neighborhood", n));
  }
  return Verdict::yes();
}

Verdict opens_decompose(const Space& space) {
  const Topology& t = space.topology();
  for (Subset u : space.open_sets()) {
    const Subset k = closed_kernel(t, u);
    if (!space.is_null(u - k))
      return Verdict::no("open-not-closed-plus-null", Evidence{}.set("U", u).set("kernel", k).value("remainder", space.measure_of(u - k)));
  }
  return Verdict::yes();
}

Verdict is_normal(const Space& space) {
  const Topology& t = space.topology();
  const auto closed = space.closed_sets();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const Subset a = closed[i];
      const Subset b = closed[j];
      if (a.intersects(b)) continue;
      if (open_hull(t, a).intersects(open_hull(t, b))) return Verdict::no("closed-pair-inseparable", Evidence{}.set("A", a).set("B", b));
    }
  }
  return Verdict::yes();
}

Verdict has_tietze_property(const Space& space) {
  const Topology& t = space.topology();
  for (Subset c : space.closed_sets()) {
    // The finest continuous function on C is the hardest to extend.
    const LabeledPartition f = components_within(t, c);
    if (!extends_continuously(t, f, c)) return Verdict::no("no-continuous-extension", Evidence{}.set("C", c).partition("f", f));
  }
  return Verdict::yes();
}

Verdict is_almost_normal(const Space& space) {
  const Topology& t = space.topology();
  for (Subset c : space.closed_sets()) {
    const LabeledPartition f = components_within(t, c);
    bool found = false;
    for (Subset sub : space.closed_sets()) {
      if (!sub.subset_of(c) || !space.is_null(c - sub)) continue;
      if (extends_continuously(t, f, sub)) {
        found = true;
        break;
      }
    }
    if (!found) return Verdict::no("no-full-measure-extension", Evidence{}.set("C", c).partition("f", f));
  }
  return Verdict::yes();
}

}  // namespace tms
