#ifndef TMS_TEST_FIXTURES_HPP
#define TMS_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "tms/builtins.hpp"
#include "tms/enumerate.hpp"
#include "tms/model_io.hpp"
#include "tms/space.hpp"

namespace fx {

inline tms::Subset set(std::initializer_list<int> pts) {
  tms::Subset s;
  for (int p : pts) s = s.with(p);
  return s;
}

constexpr int a = 0, b = 1, c = 2, d = 3;

inline tms::Topology tau_a() { return tms::Topology::make(3, {set({c})}); }
inline tms::Topology tau_b() { return tms::Topology::make(3, {set({c}), set({a, c}), set({b, c})}); }

inline const tms::Space& builtin(const std::string& name) {
  for (const auto& ex : tms::builtin_examples())
    if (ex.name == name) return ex.space;
  throw std::runtime_error("no builtin " + name);
}

inline const std::string& builtin_examples_source(const std::string& name) {
  for (const auto& ex : tms::builtin_examples())
    if (ex.name == name) return ex.source;
  throw std::runtime_error("no builtin " + name);
}

inline tms::LabeledPartition labels(std::vector<tms::Subset> blocks) { return tms::LabeledPartition(std::move(blocks)); }

inline std::vector<tms::Space> family(int n, std::vector<tms::ExtValue> grid, tms::SigmaMode mode) {
  tms::EnumConfig c;
  c.n = n;
  c.mass_grid = std::move(grid);
  c.sigma_mode = mode;
  tms::SpaceStream s(c);
  std::vector<tms::Space> out;
  while (auto sp = s.next()) out.push_back(std::move(*sp));
  return out;
}

inline std::vector<tms::ExtValue> grid3() { return {tms::ExtValue(0), tms::ExtValue(1), tms::ExtValue::infinity()}; }

inline std::vector<tms::Space> small_family() {
  std::vector<tms::Space> out;
  for (int n = 1; n <= 3; ++n) {
    auto f = family(n, grid3(), tms::SigmaMode::kAllRefinements);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

}  // namespace fx

#endif
