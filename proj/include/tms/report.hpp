#ifndef TMS_REPORT_HPP
#define TMS_REPORT_HPP

#include <array>
#include <optional>
#include <string_view>

#include "tms/space.hpp"
#include "tms/verdict.hpp"

namespace tms {

enum class Property : int {
  kBorelRegular,
  kOuter,
  kInner,
  kStrong,
  kSigmaFinite,
  kOsfCover,
  kDecomp,
  kNormal,
  kTietze,
  kAlmostNormal,
  kWeakLusin,
  kWeakLusinBorel,
  kStrongLusin,
  kStrongLusinBorel,
  kBorelReps,
};

inline constexpr int kPropertyCount = 15;

/// Identifier namespace of the property-expression language, in report order.
inline constexpr std::array<std::string_view, kPropertyCount> kPropertyNames = {
    "borel_regular", "outer",  "inner",         "strong",     "sigma_finite",
    "osf_cover",     "decomp", "normal",        "tietze",     "almost_normal",
    "weak_lusin",    "weak_lusin_borel", "strong_lusin", "strong_lusin_borel", "borel_reps",
};

constexpr std::string_view property_name(Property p) { return kPropertyNames[static_cast<std::size_t>(p)]; }
std::optional<Property> property_from_name(std::string_view name);
constexpr Property property_at(int i) { return static_cast<Property>(i); }

/// Runs the decider for one property.
Verdict decide(const Space& space, Property p);

/// Every property verdict of one space.
struct PropertyReport {
  std::array<Verdict, kPropertyCount> verdicts;

  bool operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)].holds; }
  const Verdict& verdict(Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
  void set(Property p, bool holds) { verdicts[static_cast<std::size_t>(p)].holds = holds; }
  std::array<bool, kPropertyCount> booleans() const;
};

PropertyReport evaluate_report(const Space& space);

}  // namespace tms

#endif  // TMS_REPORT_HPP
