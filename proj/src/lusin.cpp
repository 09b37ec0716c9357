#include "tms/lusin.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tms/lattice.hpp"

namespace tms {

std::string_view lusin_kind_name(LusinKind kind) {
  switch (kind) {
    case LusinKind::kWeak: return "weak";
    case LusinKind::kStrong: return "strong";
    case LusinKind::kBorelWeak: return "borel-weak";
    case LusinKind::kBorelStrong: return "borel-strong";
  }
  return "?";
}

LabeledPartition finest_measurable_partition(const Space& space) { return space.sigma().atoms(); }

bool is_measurable_partition(const Space& space, const LabeledPartition& u) {
  if (u.carrier() != space.ground() || !u.is_valid()) return false;
  return std::all_of(u.blocks().begin(), u.blocks().end(), [&](Subset b) { return space.is_measurable(b); });
}

namespace {

bool is_strong(LusinKind k) { return k == LusinKind::kStrong || k == LusinKind::kBorelStrong; }
bool is_borel(LusinKind k) { return k == LusinKind::kBorelWeak || k == LusinKind::kBorelStrong; }

std::span<const Subset> candidates(const Space& space, LusinKind kind) {
  return is_borel(kind) ? space.borel_sets() : space.closed_sets();
}

std::optional<LusinWitness> try_set(const Space& space, const LabeledPartition& u, LusinKind kind, Subset c) {
  const Topology& t = space.topology();
  if (!space.is_null(space.ground() - c)) return std::nullopt;
  if (is_strong(kind)) {
    if (!extends_continuously(t, u, c)) return std::nullopt;
    return LusinWitness{kind, c, canonical_extension(t, u, c)};
  }
  if (!is_continuous(t, u, c)) return std::nullopt;
  return LusinWitness{kind, c, std::nullopt};
}

Verdict lusin_verdict(const Space& space, LusinKind kind) {
  const LabeledPartition u = finest_measurable_partition(space);
  const char* role = is_borel(kind) ? "B" : "C";
  if (auto w = find_lusin_witness(space, u, kind)) {
    Evidence e;
    e.set(role, w->set).partition("u", u);
    if (w->extension) e.partition("g", *w->extension);
    return Verdict::yes("witness", std::move(e));
  }
  return Verdict::no(is_strong(kind) ? "no-extension-on-full-measure-set" : "discontinuous-on-every-full-measure-set",
                     Evidence{}.partition("u", u));
}

void require_measurable(const Space& space, const LabeledPartition& u) {
  if (!is_measurable_partition(space, u)) throw ModelError(ErrorCode::kNotMeasurable, "function fibers are not measurable");
}

}  // namespace

std::optional<LusinWitness> find_lusin_witness(const Space& space, const LabeledPartition& u, LusinKind kind) {
  for (Subset c : candidates(space, kind))
    if (auto w = try_set(space, u, kind, c)) return w;
  return std::nullopt;
}

Verdict weak_lusin(const Space& space) { return lusin_verdict(space, LusinKind::kWeak); }
Verdict weak_lusin_borel(const Space& space) { return lusin_verdict(space, LusinKind::kBorelWeak); }
Verdict strong_lusin(const Space& space) { return lusin_verdict(space, LusinKind::kStrong); }
Verdict strong_lusin_borel(const Space& space) { return lusin_verdict(space, LusinKind::kBorelStrong); }

std::optional<LusinWitness> construct_lusin_set(const Space& space, const LabeledPartition& u, LusinKind kind) {
  require_measurable(space, u);
  const Topology& t = space.topology();
  const Subset x = space.ground();

  Subset gaps;
  for (Subset fiber : u.blocks()) gaps |= open_hull(t, fiber) - closed_kernel(t, fiber);
  const Subset c = x - gaps;
  std::optional<LusinWitness> closed;
  if (space.is_null(gaps)) {
    if (!is_continuous(t, u, c)) throw std::logic_error("construct_lusin_set: constructed set is not a continuity set");
    closed = LusinWitness{LusinKind::kWeak, c, std::nullopt};
  }

  if (closed && is_strong(kind)) {
    // Largest closed full-measure subset of C admitting an extension.
    std::vector<Subset> subs;
    for (Subset s : space.closed_sets())
      if (s.subset_of(c) && space.is_null(c - s)) subs.push_back(s);
    std::stable_sort(subs.begin(), subs.end(), [](Subset a, Subset b) { return a.size() > b.size(); });
    closed.reset();
    for (Subset s : subs) {
      if (extends_continuously(t, u, s)) {
        closed = LusinWitness{LusinKind::kStrong, s, canonical_extension(t, u, s)};
        break;
      }
    }
  }

  if (closed) {
    closed->kind = kind;
    return closed;
  }
  if (!is_borel(kind)) return std::nullopt;
  return find_lusin_witness(space, u, kind);
}

namespace {

struct RepSearch {
  const Space& space;
  const LabeledPartition& u;
  Subset null_set;
  std::vector<int> points;  // members of null_set
  std::vector<int> label;   // assignment per entry of points
  std::optional<LabeledPartition> found;

  bool leaf() {
    const int k = u.size();
    std::vector<Subset> fibers(static_cast<std::size_t>(k) + points.size());
    for (int i = 0; i < k; ++i) fibers[static_cast<std::size_t>(i)] = u.block(i) - null_set;
    for (std::size_t j = 0; j < points.size(); ++j)
      fibers[static_cast<std::size_t>(label[j])] = fibers[static_cast<std::size_t>(label[j])].with(points[j]);
    std::vector<Subset> nonempty;
    for (Subset f : fibers) {
      if (f.empty()) continue;
      if (!space.is_borel(f)) return false;
      nonempty.push_back(f);
    }
    found = Partition(std::move(nonempty));
    return true;
  }

  bool dfs(std::size_t j, int fresh_used) {
    if (j == points.size()) return leaf();
    const int k = u.size();
    for (int l = 0; l <= k + fresh_used; ++l) {
      label[j] = l;
      if (dfs(j + 1, l == k + fresh_used ? fresh_used + 1 : fresh_used)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<RepWitness> find_borel_representative(const Space& space, const LabeledPartition& u) {
  require_measurable(space, u);
  std::vector<Subset> nulls;
  for (Subset b : space.borel_sets())
    if (space.is_null(b)) nulls.push_back(b);
  std::stable_sort(nulls.begin(), nulls.end(), [](Subset a, Subset b) { return a.size() < b.size(); });

  for (Subset n : nulls) {
    // Sending all of N to one fresh value works iff every fiber minus N is
    // Borel, and that condition is necessary for any assignment.
    const bool feasible =
        std::all_of(u.blocks().begin(), u.blocks().end(), [&](Subset b) { return space.is_borel(b - n); });
    if (!feasible) continue;
    RepSearch search{space, u, n, {}, {}, std::nullopt};
    n.for_each([&](int p) { search.points.push_back(p); });
    search.label.assign(search.points.size(), 0);
    if (!search.dfs(0, 0)) throw std::logic_error("find_borel_representative: feasible null set without assignment");
    return RepWitness{n, std::move(*search.found)};
  }
  return std::nullopt;
}

Verdict has_borel_representatives(const Space& space) {
  const LabeledPartition u = finest_measurable_partition(space);
  if (auto w = find_borel_representative(space, u))
    return Verdict::yes("witness", Evidence{}.set("N", w->null_set).partition("u", u).partition("f", w->representative));
  return Verdict::no("no-borel-representative", Evidence{}.partition("u", u));
}

}  // namespace tms
