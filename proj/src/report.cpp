#include "tms/report.hpp"

#include "tms/lusin.hpp"
#include "tms/regularity.hpp"

namespace tms {

std::optional<Property> property_from_name(std::string_view name) {
  for (int i = 0; i < kPropertyCount; ++i)
    if (kPropertyNames[static_cast<std::size_t>(i)] == name) return property_at(i);
  return std::nullopt;
}

Verdict decide(const Space& space, Property p) {
  switch (p) {
    case Property::kBorelRegular: return is_borel_regular(space);
    case Property::kOuter: return is_outer_regular(space);
    case Property::kInner: return is_inner_regular(space);
    case Property::kStrong: return is_strongly_regular(space);
    case Property::kSigmaFinite: return is_sigma_finite(space);
    case Property::kOsfCover: return has_open_sigma_finite_cover(space);
    case Property::kDecomp: return opens_decompose(space);
    case Property::kNormal: return is_normal(space);
    case Property::kTietze: return has_tietze_property(space);
    case Property::kAlmostNormal: return is_almost_normal(space);
    case Property::kWeakLusin: return weak_lusin(space);
    case Property::kWeakLusinBorel: return weak_lusin_borel(space);
    case Property::kStrongLusin: return strong_lusin(space);
    case Property::kStrongLusinBorel: return strong_lusin_borel(space);
    case Property::kBorelReps: return has_borel_representatives(space);
  }
  return {};
}

std::array<bool, kPropertyCount> PropertyReport::booleans() const {
  std::array<bool, kPropertyCount> out{};
  for (int i = 0; i < kPropertyCount; ++i) out[static_cast<std::size_t>(i)] = verdicts[static_cast<std::size_t>(i)].holds;
  return out;
}

PropertyReport evaluate_report(const Space& space) {
  PropertyReport r;
  for (int i = 0; i < kPropertyCount; ++i) r.verdicts[static_cast<std::size_t>(i)] = decide(space, property_at(i));
  return r;
}

}  // namespace tms
