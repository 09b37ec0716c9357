#ifndef TMS_BUILTINS_HPP
#define TMS_BUILTINS_HPP

#include <array>
#include <string>
#include <vector>

#include "tms/report.hpp"
#include "tms/space.hpp"

namespace tms {

struct BuiltinExample {
  std::string name;
  std::string source;
  Space space;
  /// Full expected report in kPropertyNames order.
  std::array<bool, kPropertyCount> expected;
};

/// M_REP, M_WEAK, M_DIRAC, M_CONST and M_DISCINF.
const std::vector<BuiltinExample>& builtin_examples();

/// Two-point Sierpinski space with a Dirac mass on its closed point.
Space sierpinski_model();

/// Names of report fields where `report` differs from `expected`.
std::vector<std::string> report_mismatches(const PropertyReport& report, const std::array<bool, kPropertyCount>& expected);

}  // namespace tms

#endif  // TMS_BUILTINS_HPP
