#include "tms/registry.hpp"

#include <stdexcept>

#include "tms/lattice.hpp"
#include "tms/regularity.hpp"

namespace tms {

Space companion_model(const Space& space) {
  const Partition& atoms = space.borel_atoms();
  std::vector<ExtValue> mass(static_cast<std::size_t>(atoms.size()), ExtValue::infinity());
  return Space::make(space.points(), space.topology(), SigmaAlgebra(atoms), Measure(std::move(mass)));
}

std::array<bool, kAuxFactCount> compute_aux_facts(const Space& space) {
  const Topology& t = space.topology();
  bool finite_inner = true, outer_approx = true, inner_approx = true;
  for (Subset b : space.borel_sets()) {
    const Subset k = closed_kernel(t, b);
    const Subset h = open_hull(t, b);
    const bool inner_ok = space.is_null(b - k);
    if (space.measure_of(b).is_finite()) finite_inner = finite_inner && inner_ok;
    inner_approx = inner_approx && inner_ok;
    outer_approx = outer_approx && space.is_null(h - b);
  }
  bool fsigma = true, gdelta = true;
  for (Subset e : space.measurable_sets()) {
    fsigma = fsigma && space.is_null(e - closed_kernel(t, e));
    gdelta = gdelta && space.is_null(open_hull(t, e) - e);
  }
  const bool companion = is_almost_normal(companion_model(space)).holds;
  return {finite_inner, outer_approx, inner_approx, fsigma, gdelta, companion};
}

Facts make_facts(const PropertyReport& report, const std::array<bool, kAuxFactCount>& aux) {
  Facts f{};
  for (int i = 0; i < kPropertyCount; ++i) f[static_cast<std::size_t>(i)] = report[property_at(i)];
  for (int i = 0; i < kAuxFactCount; ++i) f[static_cast<std::size_t>(kPropertyCount + i)] = aux[static_cast<std::size_t>(i)];
  return f;
}

const std::vector<Implication>& implication_registry() {
  using D = Direction;
  static const std::vector<Implication> registry = {
      {"R1", "R1", "", "outer", "borel_regular", D::kImplies,
       "Remark (OR-BR): outer regularity implies that the measure is Borel regular"},
      {"T2.1", "T2", "osf_cover", "borel_regular & decomp", "outer", D::kIff,
       "Theorem (in-out-reg): the following conditions are equivalent, (a) <=> (b)"},
      {"T2.2", "T2", "osf_cover", "outer", "inner", D::kIff,
       "Theorem (in-out-reg): the following conditions are equivalent, (b) <=> (c)"},
      {"L25", "L25", "decomp", "", "borel_finite_inner", D::kImplies,
       "Lemma (finite-in-out-reg): there exists a closed set C_eps inside every finite-measure Borel set"},
      {"L26.1", "L26", "osf_cover", "decomp", "borel_outer_approx", D::kIff,
       "Lemma (Borel-in-out-reg): i) <=> ii), there exists an open set U_eps"},
      {"L26.2", "L26", "osf_cover", "borel_outer_approx", "borel_inner_approx", D::kIff,
       "Lemma (Borel-in-out-reg): ii) <=> iii)"},
      {"C33", "C33", "", "strong",
       "inner & outer & borel_regular & decomp & sets_fsigma_null & sets_gdelta_null", D::kImplies,
       "Corollary (str_reg_impl_Fsigma): strongly regular implies both inner regular and outer regular"},
      {"P34", "P34", "", "sigma_finite & outer", "strong", D::kImplies,
       "Proposition (out_reg_sigma_fin): sigma-finite and outer regular implies strongly regular"},
      {"C35", "C35", "osf_cover & decomp", "borel_regular", "strong", D::kImplies,
       "Corollary (Borel-in-out-reg-2): then mu is strongly regular"},
      {"T36", "T36", "", "strong", "weak_lusin", D::kIff,
       "Theorem (wLusin_equiv): strongly regular iff the weak Lusin theorem holds"},
      {"P37", "P37", "", "weak_lusin_borel", "borel_regular", D::kImplies,
       "Proposition (weak_Lus_Bor): then mu is Borel regular"},
      {"T44", "T44", "", "almost_normal & strong", "strong_lusin", D::kIff,
       "Theorem (str_Lus_equiv): almost normal and strongly regular iff the strong Lusin theorem holds"},
      {"C45", "C45", "almost_normal", "weak_lusin", "strong_lusin", D::kImplies,
       "Corollary (cor_weak_str): the weak Lusin theorem implies the strong Lusin theorem"},
      {"T51.1", "T51", "sigma_finite", "borel_regular", "borel_reps", D::kIff,
       "Theorem (rep-reg): Borel regular iff Borel representatives exist, for sigma-finite mu"},
      {"T51.2", "T51", "", "borel_reps", "borel_regular", D::kImplies,
       "Theorem (rep-reg): (2) => (1) even if mu is not sigma-finite"},
      {"TM.1", "TM", "osf_cover & decomp", "borel_regular", "borel_reps", D::kIff,
       "Theorem (main): the following statements are equivalent, (1) <=> (2)"},
      {"TM.2", "TM", "osf_cover & decomp", "borel_reps", "weak_lusin", D::kIff,
       "Theorem (main): (2) <=> (3)"},
      {"TM.3", "TM", "osf_cover & decomp", "weak_lusin", "weak_lusin_borel", D::kIff,
       "Theorem (main): (3) <=> (4)"},
      {"TM.4", "TM", "osf_cover & decomp & normal", "weak_lusin_borel", "strong_lusin", D::kIff,
       "Theorem (main): under normality (4) <=> (5)"},
      {"TM.5", "TM", "osf_cover & decomp & normal", "strong_lusin", "strong_lusin_borel", D::kIff,
       "Theorem (main): under normality (5) <=> (6)"},
      {"TT", "TT", "", "normal", "tietze", D::kIff,
       "Lemma (tietze): normal iff continuous functions on closed sets extend"},
      {"NA1", "NA1", "", "normal", "almost_normal", D::kImplies,
       "Proposition (norm_almost_Tietze): (1) => (2), for every Borel measure"},
      {"NA2", "NA2", "", "!normal", "!companion_almost_normal", D::kImplies,
       "Proposition (norm_almost_Tietze) proof: mu(E) := inf for nonempty E fails almost normality"},
      {"TRIV.1", "TRIV", "", "strong_lusin", "weak_lusin", D::kImplies, "strong Lusin restricts to weak Lusin"},
      {"TRIV.2", "TRIV", "", "weak_lusin", "weak_lusin_borel", D::kImplies, "closed sets are Borel"},
      {"TRIV.3", "TRIV", "", "strong_lusin", "strong_lusin_borel", D::kImplies, "closed sets are Borel"},
      {"TRIV.4", "TRIV", "", "strong_lusin_borel", "weak_lusin_borel", D::kImplies,
       "a continuous extension restricts to a continuous function"},
  };
  return registry;
}

namespace {

struct Compiled {
  std::optional<PropertyExpr> guard;
  std::optional<PropertyExpr> lhs;
  PropertyExpr rhs;
};

const std::vector<Compiled>& compiled_registry() {
  static const std::vector<Compiled> compiled = [] {
    std::vector<Compiled> out;
    for (const Implication& imp : implication_registry()) {
      Compiled c{std::nullopt, std::nullopt, parse_property_expr(imp.rhs, kFactNames)};
      if (!imp.guard.empty()) c.guard = parse_property_expr(imp.guard, kFactNames);
      if (!imp.lhs.empty()) c.lhs = parse_property_expr(imp.lhs, kFactNames);
      out.push_back(std::move(c));
    }
    return out;
  }();
  return compiled;
}

}  // namespace

std::vector<EntryOutcome> evaluate_registry(const Facts& facts, std::vector<ImplicationViolation>* violations) {
  const auto& registry = implication_registry();
  const auto& compiled = compiled_registry();
  std::vector<EntryOutcome> out;
  out.reserve(registry.size());
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const Compiled& c = compiled[i];
    if (c.guard && !c.guard->eval(facts)) {
      out.push_back(EntryOutcome::kVacuous);
      continue;
    }
    const bool rhs = c.rhs.eval(facts);
    bool ok = true;
    if (!c.lhs) {
      if (!rhs) {
        ok = false;
        if (violations) violations->push_back({registry[i].name, "rhs"});
      }
    } else {
      const bool lhs = c.lhs->eval(facts);
      if (lhs && !rhs) {
        ok = false;
        if (violations) violations->push_back({registry[i].name, "lhs=>rhs"});
      }
      if (registry[i].direction == Direction::kIff && rhs && !lhs) {
        ok = false;
        if (violations) violations->push_back({registry[i].name, "rhs=>lhs"});
      }
    }
    out.push_back(ok ? EntryOutcome::kHolds : EntryOutcome::kViolated);
  }
  return out;
}

std::vector<ImplicationViolation> check_implications(const Space& space, const PropertyReport& report) {
  std::vector<ImplicationViolation> violations;
  evaluate_registry(make_facts(report, compute_aux_facts(space)), &violations);
  return violations;
}

std::vector<ImplicationViolation> check_implications(const Space& space) {
  return check_implications(space, evaluate_report(space));
}

}  // namespace tms
