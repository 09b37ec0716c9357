#include "tms/builtins.hpp"

#include "tms/model_io.hpp"

namespace tms {

namespace {

// Columns: borel_regular outer inner strong sigma_finite osf_cover decomp
// normal tietze almost_normal weak_lusin weak_lusin_borel strong_lusin
// strong_lusin_borel borel_reps.
constexpr bool T = true;
constexpr bool F = false;

BuiltinExample make(std::string name, std::string source, std::array<bool, kPropertyCount> expected) {
  Space space = parse_model(source);
  return {std::move(name), std::move(source), std::move(space), expected};
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples = [] {
    std::vector<BuiltinExample> v;
    v.push_back(make("M_REP",
                     "points a b c\n"
                     "open {c}\n"
                     "sigma powerset\n"
                     "mass {a} inf\n"
                     "mass {b} inf\n"
                     "mass {c} 1\n",
                     {T, T, F, F, F, F, F, T, T, T, F, F, F, F, F}));
    v.push_back(make("M_WEAK",
                     "points a b c\n"
                     "open {c}\n"
                     "open {a c}\n"
                     "open {b c}\n"
                     "sigma powerset\n"
                     "mass {a} 1\n"
                     "mass {b} 1\n"
                     "mass {c} 0\n",
                     {T, T, T, T, T, T, T, F, F, F, T, T, F, F, T}));
    v.push_back(make("M_DIRAC",
                     "points a b c\n"
                     "open {c}\n"
                     "open {a c}\n"
                     "open {b c}\n"
                     "sigma powerset\n"
                     "mass {a} 1\n"
                     "mass {b} 0\n"
                     "mass {c} 0\n",
                     {T, T, T, T, T, T, T, F, F, T, T, T, T, T, T}));
    v.push_back(make("M_CONST",
                     "points a b c\n"
                     "open {c}\n"
                     "open {a c}\n"
                     "open {b c}\n"
                     "sigma powerset\n"
                     "mass {a} 1\n"
                     "mass {b} 1\n"
                     "mass {c} 1\n",
                     {T, F, F, F, T, T, F, F, F, F, F, F, F, F, T}));
    v.push_back(make("M_DISCINF",
                     "points a b\n"
                     "open {a}\n"
                     "open {b}\n"
                     "sigma powerset\n"
                     "mass {a} inf\n"
                     "mass {b} 1\n",
                     {T, T, T, T, F, F, T, T, T, T, T, T, T, T, T}));
    return v;
  }();
  return examples;
}

Space sierpinski_model() {
  return parse_model(
      "points a b\n"
      "open {b}\n"
      "sigma powerset\n"
      "mass {a} 1\n"
      "mass {b} 0\n");
}

std::vector<std::string> report_mismatches(const PropertyReport& report, const std::array<bool, kPropertyCount>& expected) {
  std::vector<std::string> out;
  for (int i = 0; i < kPropertyCount; ++i) {
    if (report[property_at(i)] != expected[static_cast<std::size_t>(i)]) {
      out.emplace_back(kPropertyNames[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

}  // namespace tms
