#ifndef TMS_REGISTRY_HPP
#define TMS_REGISTRY_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tms/expr.hpp"
#include "tms/report.hpp"
#include "tms/space.hpp"

namespace tms {

/// Facts some registry entries need beyond the fifteen report properties.
/// They are not part of the search vocabulary.
enum class AuxFact : int {
  kBorelFiniteInner,        // Borel B, mu(B) < inf: mu(B \ kernel(B)) = 0
  kBorelOuterApprox,        // Borel B: mu(hull(B) \ B) = 0
  kBorelInnerApprox,        // Borel B: mu(B \ kernel(B)) = 0
  kSetsFsigmaNull,          // every measurable E = (closed) u (null)
  kSetsGdeltaNull,          // every measurable E = (open) \ (null)
  kCompanionAlmostNormal,   // same topology, sigma = Borel, mass inf on every nonempty set
};

inline constexpr int kAuxFactCount = 6;
inline constexpr int kFactCount = kPropertyCount + kAuxFactCount;

/// Report property names followed by the auxiliary fact names.
inline constexpr std::array<std::string_view, kFactCount> kFactNames = {
    "borel_regular", "outer",  "inner",         "strong",     "sigma_finite",
    "osf_cover",     "decomp", "normal",        "tietze",     "almost_normal",
    "weak_lusin",    "weak_lusin_borel", "strong_lusin", "strong_lusin_borel", "borel_reps",
    "borel_finite_inner", "borel_outer_approx", "borel_inner_approx",
    "sets_fsigma_null", "sets_gdelta_null", "companion_almost_normal",
};

using Facts = std::array<bool, kFactCount>;

/// The 0/inf companion measure on the Borel sigma-algebra of the same topology.
Space companion_model(const Space& space);

std::array<bool, kAuxFactCount> compute_aux_facts(const Space& space);
Facts make_facts(const PropertyReport& report, const std::array<bool, kAuxFactCount>& aux);

enum class Direction { kImplies, kIff };

/// One implication or equivalence, optionally guarded. Expressions are
/// sources over kFactNames. An empty lhs asserts rhs outright (under the guard).
struct Implication {
  std::string name;
  std::string family;
  std::string guard;
  std::string lhs;
  std::string rhs;
  Direction direction = Direction::kImplies;
  std::string citation;
};

const std::vector<Implication>& implication_registry();

enum class EntryOutcome { kVacuous, kHolds, kViolated };

struct ImplicationViolation {
  std::string entry;
  /// "lhs=>rhs", "rhs=>lhs" or "rhs" (for assertions).
  std::string side;
};

/// Outcome of every registry entry, aligned with implication_registry().
std::vector<EntryOutcome> evaluate_registry(const Facts& facts, std::vector<ImplicationViolation>* violations = nullptr);

/// Violations of the registry for this space; the report supplies the
/// fifteen properties (so a corrupted report is caught), the space the
/// auxiliary facts.
std::vector<ImplicationViolation> check_implications(const Space& space, const PropertyReport& report);
std::vector<ImplicationViolation> check_implications(const Space& space);

}  // namespace tms

#endif  // TMS_REGISTRY_HPP
