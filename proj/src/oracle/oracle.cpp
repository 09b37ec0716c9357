#include "tms/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace tms::oracle {

namespace {

bool within(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

std::uint32_t ground(const Space& space) { return (1u << space.size()) - 1; }

ExtValue mu(const Space& space, std::uint32_t s) { return space.measure_of(Subset(s)); }

bool measurable(const Space& space, std::uint32_t s) { return space.is_measurable(Subset(s)); }

void require_small(const Space& space) {
  if (space.size() > kMaxOraclePoints) {
    throw ModelError(ErrorCode::kTooLarge, "oracle supports at most 6 points");
  }
}

std::vector<std::uint32_t> measurable_sets(const Space& space) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s <= ground(space); ++s) {
    if (measurable(space, s)) out.push_back(s);
  }
  return out;
}

bool contains(const std::vector<std::uint32_t>& sorted, std::uint32_t s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

Blocks trace(const Blocks& p, std::uint32_t s) {
  Blocks out;
  for (std::uint32_t b : p) {
    if (b & s) out.push_back(b & s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void partitions_rec(const std::vector<int>& pts, std::size_t i, Blocks& cur, std::vector<Blocks>& out) {
  if (i == pts.size()) {
    Blocks b = cur;
    std::sort(b.begin(), b.end());
    out.push_back(std::move(b));
    return;
  }
  const std::uint32_t bit = 1u << pts[i];
  for (std::size_t k = 0; k < cur.size(); ++k) {
    cur[k] |= bit;
    partitions_rec(pts, i + 1, cur, out);
    cur[k] &= ~bit;
  }
  cur.push_back(bit);
  partitions_rec(pts, i + 1, cur, out);
  cur.pop_back();
}

struct Context {
  const Space& space;
  std::uint32_t x;
  std::vector<std::uint32_t> opens;
  std::vector<std::uint32_t> closed;
  std::vector<std::uint32_t> borel;
  std::vector<std::uint32_t> measurable;
  std::vector<Blocks> continuous_on_x;
  std::vector<Blocks> borel_functions;

  explicit Context(const Space& s)
      : space(s), x(ground(s)), opens(open_sets(s)), closed(closed_sets(s)), borel(borel_sets(s)),
        measurable(measurable_sets(s)) {
    for (Blocks& g : all_partitions(x)) {
      if (is_continuous(opens, g, x)) continuous_on_x.push_back(g);
      if (std::all_of(g.begin(), g.end(), [&](std::uint32_t b) { return contains(borel, b); })) {
        borel_functions.push_back(std::move(g));
      }
    }
  }

  bool null(std::uint32_t s) const { return mu(space, s).is_zero(); }

  bool extends_on(const Blocks& f, std::uint32_t c) const {
    return std::any_of(continuous_on_x.begin(), continuous_on_x.end(),
                       [&](const Blocks& g) { return same_on(g, f, c); });
  }
};

bool lusin_with(const Context& ctx, const Blocks& u, LusinKind kind) {
  const bool borel = kind == LusinKind::kBorelWeak || kind == LusinKind::kBorelStrong;
  const bool strong = kind == LusinKind::kStrong || kind == LusinKind::kBorelStrong;
  for (std::uint32_t c : borel ? ctx.borel : ctx.closed) {
    if (!ctx.null(ctx.x & ~c)) continue;
    if (strong ? ctx.extends_on(u, c) : is_continuous(ctx.opens, u, c)) return true;
  }
  return false;
}

bool rep_with(const Context& ctx, const Blocks& u) {
  for (std::uint32_t n : ctx.borel) {
    if (!ctx.null(n)) continue;
    for (const Blocks& f : ctx.borel_functions) {
      if (same_on(f, u, ctx.x & ~n)) return true;
    }
  }
  return false;
}

bool tietze_like(const Context& ctx, bool allow_null_shrink) {
  for (std::uint32_t c : ctx.closed) {
    for (const Blocks& f : all_partitions(c)) {
      if (!is_continuous(ctx.opens, f, c)) continue;
      bool ok = false;
      for (std::uint32_t sub : ctx.closed) {
        if (!within(sub, c)) continue;
        if (allow_null_shrink ? !ctx.null(c & ~sub) : sub != c) continue;
        if (ctx.extends_on(f, sub)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool decide_with(const Context& ctx, Property p) {
  const Space& space = ctx.space;
  switch (p) {
    case Property::kBorelRegular:
      return std::all_of(ctx.measurable.begin(), ctx.measurable.end(), [&](std::uint32_t e) {
        return std::any_of(ctx.borel.begin(), ctx.borel.end(),
                           [&](std::uint32_t b) { return within(e, b) && mu(space, b) == mu(space, e); });
      });
    case Property::kOuter:
      return std::all_of(ctx.measurable.begin(), ctx.measurable.end(), [&](std::uint32_t e) {
        ExtValue best = ExtValue::infinity();
        for (std::uint32_t o : ctx.opens)
          if (within(e, o)) best = std::min(best, mu(space, o));
        return best == mu(space, e);
      });
    case Property::kInner:
      return std::all_of(ctx.measurable.begin(), ctx.measurable.end(), [&](std::uint32_t e) {
        ExtValue best = ExtValue::zero();
        for (std::uint32_t c : ctx.closed)
          if (within(c, e)) best = std::max(best, mu(space, c));
        return best == mu(space, e);
      });
    case Property::kStrong: return strong_regularity(space).exact;
    case Property::kSigmaFinite: {
      std::uint32_t covered = 0;
      for (std::uint32_t e : ctx.measurable)
        if (mu(space, e).is_finite()) covered |= e;
      return covered == ctx.x;
    }
    case Property::kOsfCover: {
      std::uint32_t covered = 0;
      for (std::uint32_t o : ctx.opens)
        if (mu(space, o).is_finite()) covered |= o;
      return covered == ctx.x;
    }
    case Property::kDecomp:
      return std::all_of(ctx.opens.begin(), ctx.opens.end(), [&](std::uint32_t u) {
        for (std::uint32_t c : ctx.closed) {
          if (!within(c, u)) continue;
          for (std::uint32_t n : ctx.measurable)
            if (within(n, u) && (c | n) == u && ctx.null(n)) return true;
        }
        return false;
      });
    case Property::kNormal:
      for (std::uint32_t a : ctx.closed) {
        for (std::uint32_t b : ctx.closed) {
          if (a & b) continue;
          bool separated = false;
          for (std::uint32_t oa : ctx.opens) {
            if (!within(a, oa)) continue;
            for (std::uint32_t ob : ctx.opens)
              if (within(b, ob) && !(oa & ob)) separated = true;
          }
          if (!separated) return false;
        }
      }
      return true;
    case Property::kTietze: return tietze_like(ctx, false);
    case Property::kAlmostNormal: return tietze_like(ctx, true);
    case Property::kWeakLusin:
    case Property::kWeakLusinBorel:
    case Property::kStrongLusin:
    case Property::kStrongLusinBorel: {
      const LusinKind kind = p == Property::kWeakLusin        ? LusinKind::kWeak
                             : p == Property::kWeakLusinBorel ? LusinKind::kBorelWeak
                             : p == Property::kStrongLusin    ? LusinKind::kStrong
                                                              : LusinKind::kBorelStrong;
      for (const Blocks& u : measurable_partitions(space))
        if (!lusin_with(ctx, u, kind)) return false;
      return true;
    }
    case Property::kBorelReps:
      for (const Blocks& u : measurable_partitions(space))
        if (!rep_with(ctx, u)) return false;
      return true;
  }
  return false;
}

std::optional<std::string> fail(std::string why) { return std::optional<std::string>(std::move(why)); }

std::optional<LusinKind> lusin_kind_of(Property p) {
  switch (p) {
    case Property::kWeakLusin: return LusinKind::kWeak;
    case Property::kWeakLusinBorel: return LusinKind::kBorelWeak;
    case Property::kStrongLusin: return LusinKind::kStrong;
    case Property::kStrongLusinBorel: return LusinKind::kBorelStrong;
    default: return std::nullopt;
  }
}

bool is_measurable_function(const Context& ctx, const Blocks& u) {
  std::uint32_t seen = 0;
  for (std::uint32_t b : u) {
    if (b == 0 || (seen & b) || !contains(ctx.measurable, b)) return false;
    seen |= b;
  }
  return seen == ctx.x;
}

bool covers(const Blocks& p, std::uint32_t x) {
  std::uint32_t seen = 0;
  for (std::uint32_t b : p) {
    if (b == 0 || (seen & b)) return false;
    seen |= b;
  }
  return seen == x;
}

std::optional<std::string> recheck_lusin(const Context& ctx, LusinKind kind, const Verdict& v) {
  if (!v.witness) return fail("missing witness");
  const Evidence& e = *v.witness;
  const LabeledPartition* up = e.find_partition("u");
  if (!up) return fail("missing u");
  const Blocks u = to_blocks(*up);
  if (!is_measurable_function(ctx, u)) return fail("u is not a measurable function");
  const bool borel = kind == LusinKind::kBorelWeak || kind == LusinKind::kBorelStrong;
  const bool strong = kind == LusinKind::kStrong || kind == LusinKind::kBorelStrong;
  if (!v.holds) {
    if (lusin_with(ctx, u, kind)) return fail("counterexample u admits a witness");
    return std::nullopt;
  }
  const auto c = e.find_set(borel ? "B" : "C");
  if (!c) return fail("missing witness set");
  const std::uint32_t cs = c->bits();
  if (!contains(borel ? ctx.borel : ctx.closed, cs)) return fail("witness set has the wrong type");
  if (!ctx.null(ctx.x & ~cs)) return fail("complement of witness set is not null");
  if (!is_continuous(ctx.opens, u, cs)) return fail("u is not continuous on the witness set");
  if (strong) {
    const LabeledPartition* gp = e.find_partition("g");
    if (!gp) return fail("missing extension g");
    const Blocks g = to_blocks(*gp);
    if (!covers(g, ctx.x)) return fail("g is not a function on X");
    if (!is_continuous(ctx.opens, g, ctx.x)) return fail("g is not continuous");
    if (!same_on(g, u, cs)) return fail("g differs from u on the witness set");
  }
  return std::nullopt;
}

std::optional<std::string> recheck_reps(const Context& ctx, const Verdict& v) {
  if (!v.witness) return fail("missing witness");
  const Evidence& e = *v.witness;
  const LabeledPartition* up = e.find_partition("u");
  if (!up) return fail("missing u");
  const Blocks u = to_blocks(*up);
  if (!is_measurable_function(ctx, u)) return fail("u is not a measurable function");
  if (!v.holds) {
    if (rep_with(ctx, u)) return fail("counterexample u has a representative");
    return std::nullopt;
  }
  const auto n = e.find_set("N");
  const LabeledPartition* fp = e.find_partition("f");
  if (!n || !fp) return fail("missing N or f");
  if (!contains(ctx.borel, n->bits()) || !ctx.null(n->bits())) return fail("N is not a Borel null set");
  const Blocks f = to_blocks(*fp);
  if (!covers(f, ctx.x)) return fail("f is not a function on X");
  for (std::uint32_t b : f)
    if (!contains(ctx.borel, b)) return fail("f has a non-Borel fiber");
  if (!same_on(f, u, ctx.x & ~n->bits())) return fail("f differs from u off N");
  return std::nullopt;
}

std::optional<std::string> recheck_counterexample(const Context& ctx, Property p, const Evidence& e) {
  const Space& space = ctx.space;
  auto set = [&](const char* role) -> std::optional<std::uint32_t> {
    auto s = e.find_set(role);
    return s ? std::optional<std::uint32_t>(s->bits()) : std::nullopt;
  };
  switch (p) {
    case Property::kBorelRegular:
    case Property::kOuter:
    case Property::kInner:
    case Property::kStrong: {
      auto es = set("E");
      if (!es || !contains(ctx.measurable, *es)) return fail("missing measurable E");
      const std::uint32_t s = *es;
      const ExtValue m = mu(space, s);
      bool refuted = true;
      if (p == Property::kBorelRegular) {
        for (std::uint32_t b : ctx.borel)
          if (within(s, b) && mu(space, b) == m) refuted = false;
      } else if (p == Property::kOuter) {
        for (std::uint32_t o : ctx.opens)
          if (within(s, o) && mu(space, o) == m) refuted = false;
      } else if (p == Property::kInner) {
        for (std::uint32_t c : ctx.closed)
          if (within(c, s) && mu(space, c) == m) refuted = false;
      } else {
        for (std::uint32_t c : ctx.closed)
          for (std::uint32_t o : ctx.opens)
            if (within(c, s) && within(s, o) && ctx.null(o & ~c)) refuted = false;
      }
      return refuted ? std::nullopt : fail("E is approximable");
    }
    case Property::kSigmaFinite: {
      auto a = set("atom");
      if (!a || !mu(space, *a).is_infinite() || !measurable(space, *a)) return fail("atom is not an infinite atom");
      const int pt = std::countr_zero(*a);
      for (std::uint32_t m : ctx.measurable)
        if ((m >> pt & 1) && mu(space, m).is_finite()) return fail("atom point lies in a finite set");
      return std::nullopt;
    }
    case Property::kOsfCover: {
      auto pt = set("point");
      if (!pt || std::popcount(*pt) != 1) return fail("missing point");
      for (std::uint32_t o : ctx.opens)
        if ((o & *pt) && mu(space, o).is_finite()) return fail("point has a finite open neighbourhood");
      return std::nullopt;
    }
    case Property::kDecomp: {
      auto u = set("U");
      if (!u || !contains(ctx.opens, *u)) return fail("missing open U");
      for (std::uint32_t c : ctx.closed)
        for (std::uint32_t n : ctx.measurable)
          if (within(c, *u) && within(n, *u) && (c | n) == *u && ctx.null(n)) return fail("U decomposes");
      return std::nullopt;
    }
    case Property::kNormal: {
      auto a = set("A");
      auto b = set("B");
      if (!a || !b || !contains(ctx.closed, *a) || !contains(ctx.closed, *b) || (*a & *b)) {
        return fail("missing disjoint closed pair");
      }
      for (std::uint32_t oa : ctx.opens)
        for (std::uint32_t ob : ctx.opens)
          if (within(*a, oa) && within(*b, ob) && !(oa & ob)) return fail("pair is separable");
      return std::nullopt;
    }
    case Property::kTietze:
    case Property::kAlmostNormal: {
      auto c = set("C");
      const LabeledPartition* fp = e.find_partition("f");
      if (!c || !fp || !contains(ctx.closed, *c)) return fail("missing closed C or f");
      const Blocks f = to_blocks(*fp);
      if (!covers(f, *c) || !is_continuous(ctx.opens, f, *c)) return fail("f is not continuous on C");
      for (std::uint32_t sub : ctx.closed) {
        if (!within(sub, *c)) continue;
        if (p == Property::kTietze ? sub != *c : !ctx.null(*c & ~sub)) continue;
        if (ctx.extends_on(f, sub)) return fail("f extends");
      }
      return std::nullopt;
    }
    default: return fail("unexpected property");
  }
}

}  // namespace

std::vector<std::uint32_t> open_sets(const Space& space) {
  std::vector<std::uint32_t> out;
  for (Subset o : space.topology().opens()) out.push_back(o.bits());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> borel_sets(const Space& space) {
  const std::uint32_t x = ground(space);
  std::set<std::uint32_t> family;
  for (std::uint32_t o : open_sets(space)) family.insert(o);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(family.begin(), family.end());
    for (std::uint32_t a : cur) {
      grew |= family.insert(x & ~a).second;
      for (std::uint32_t b : cur) grew |= family.insert(a | b).second;
    }
  }
  return {family.begin(), family.end()};
}

std::vector<std::uint32_t> closed_sets(const Space& space) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t o : open_sets(space)) out.push_back(ground(space) & ~o);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Blocks> all_partitions(std::uint32_t set) {
  std::vector<int> pts;
  for (int p = 0; p < 32; ++p)
    if (set >> p & 1) pts.push_back(p);
  std::vector<Blocks> out;
  Blocks cur;
  partitions_rec(pts, 0, cur, out);
  return out;
}

std::vector<Blocks> measurable_partitions(const Space& space) {
  std::vector<Blocks> out;
  for (Blocks& p : all_partitions(ground(space))) {
    if (std::all_of(p.begin(), p.end(), [&](std::uint32_t b) { return measurable(space, b); })) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool is_continuous(std::span<const std::uint32_t> opens, const Blocks& u, std::uint32_t c) {
  const Blocks fibers = trace(u, c);
  const std::size_t k = fibers.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (pick >> i & 1) s |= fibers[i];
    const bool relatively_open =
        std::any_of(opens.begin(), opens.end(), [&](std::uint32_t o) { return (o & c) == s; });
    if (!relatively_open) return false;
  }
  return true;
}

bool is_continuous(const Space& space, const Blocks& u, std::uint32_t c) {
  const auto opens = open_sets(space);
  return is_continuous(opens, u, c);
}

bool same_on(const Blocks& a, const Blocks& b, std::uint32_t s) { return trace(a, s) == trace(b, s); }

Blocks to_blocks(const LabeledPartition& p) {
  Blocks out;
  for (Subset b : p.blocks())
    if (!b.empty()) out.push_back(b.bits());
  std::sort(out.begin(), out.end());
  return out;
}

StrongForms strong_regularity(const Space& space) {
  require_small(space);
  const auto opens = open_sets(space);
  const auto closed = closed_sets(space);
  const std::array<ExtValue, 5> grid = {ExtValue(1, 8), ExtValue(1, 4), ExtValue(1, 2), ExtValue(1), ExtValue(2)};
  StrongForms f{true, true};
  for (std::uint32_t e : measurable_sets(space)) {
    ExtValue least = ExtValue::infinity();
    for (std::uint32_t c : closed) {
      if (!within(c, e)) continue;
      for (std::uint32_t o : opens)
        if (within(e, o)) least = std::min(least, mu(space, o & ~c));
    }
    if (!least.is_zero()) f.exact = false;
    for (const ExtValue& eps : grid) {
      bool found = false;
      for (std::uint32_t c : closed) {
        if (!within(c, e)) continue;
        for (std::uint32_t o : opens)
          if (within(e, o) && mu(space, o & ~c) < eps) found = true;
      }
      if (!found) f.eps_grid = false;
    }
  }
  return f;
}

bool lusin_holds_for(const Space& space, const Blocks& u, LusinKind kind) {
  require_small(space);
  return lusin_with(Context(space), u, kind);
}

bool representative_exists_for(const Space& space, const Blocks& u) {
  require_small(space);
  return rep_with(Context(space), u);
}

bool decide(const Space& space, Property p) {
  require_small(space);
  return decide_with(Context(space), p);
}

std::array<bool, kPropertyCount> report(const Space& space) {
  require_small(space);
  const Context ctx(space);
  std::array<bool, kPropertyCount> out{};
  for (int i = 0; i < kPropertyCount; ++i) out[static_cast<std::size_t>(i)] = decide_with(ctx, property_at(i));
  return out;
}

std::optional<std::string> recheck(const Space& space, Property p, const Verdict& verdict) {
  require_small(space);
  const Context ctx(space);
  if (auto kind = lusin_kind_of(p)) return recheck_lusin(ctx, *kind, verdict);
  if (p == Property::kBorelReps) return recheck_reps(ctx, verdict);
  if (verdict.holds) {
    return decide_with(ctx, p) ? std::nullopt : fail("property fails by definition");
  }
  if (!verdict.witness) return fail("missing counterexample");
  return recheck_counterexample(ctx, p, *verdict.witness);
}

std::vector<std::vector<std::uint32_t>> topologies_by_filter(int n) {
  if (n < 1 || n > 4) throw ModelError(ErrorCode::kTooLarge, "filter enumeration supports 1..4 points");
  const std::uint32_t x = (1u << n) - 1;
  std::vector<std::uint32_t> middle;
  for (std::uint32_t s = 1; s < x; ++s) middle.push_back(s);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<std::uint32_t> fam = {0};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (pick >> i & 1) fam.push_back(middle[i]);
    if (x != 0) fam.push_back(x);
    std::sort(fam.begin(), fam.end());
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i)
      for (std::size_t j = i + 1; j < fam.size() && closed; ++j)
        closed = contains(fam, fam[i] | fam[j]) && contains(fam, fam[i] & fam[j]);
    if (closed) out.push_back(std::move(fam));
  }
  return out;
}

std::uint64_t count_orbits(const std::vector<std::vector<std::uint32_t>>& families, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<std::uint32_t>> reps;
  for (const auto& fam : families) {
    std::vector<std::uint32_t> best;
    for (const auto& p : perms) {
      std::vector<std::uint32_t> img;
      for (std::uint32_t s : fam) {
        std::uint32_t t = 0;
        for (int i = 0; i < n; ++i)
          if (s >> i & 1) t |= 1u << p[static_cast<std::size_t>(i)];
        img.push_back(t);
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
    reps.insert(std::move(best));
  }
  return reps.size();
}

}  // namespace tms::oracle
