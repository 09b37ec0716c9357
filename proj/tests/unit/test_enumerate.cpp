#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tms/enumerate.hpp"
#include "tms/lattice.hpp"
#include "tms/oracle.hpp"

using namespace tms;
using fx::a;
using fx::b;
using fx::c;

TEST_CASE("topology counts") {
  const std::size_t labeled[] = {1, 4, 29, 355, 6942};
  const std::size_t unlabeled[] = {1, 3, 9, 33, 139};
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_topologies(n).size() == labeled[n - 1]);
    CHECK(enumerate_topologies(n, true).size() == unlabeled[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_topologies(6), ModelError);
}

TEST_CASE("growth enumeration equals the direct filter") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<std::uint32_t>> grown;
    for (const Topology& t : enumerate_topologies(n)) {
      std::vector<std::uint32_t> o;
      for (Subset s : t.opens()) o.push_back(s.bits());
      CHECK(grown.insert(o).second);
      CHECK(t.lattice_violations().empty());
    }
    const auto filtered = oracle::topologies_by_filter(n);
    CHECK(std::set<std::vector<std::uint32_t>>(filtered.begin(), filtered.end()) == grown);
    CHECK(oracle::count_orbits(filtered, n) == enumerate_topologies(n, true).size());
  }
}

TEST_CASE("two point topologies") {
  const auto ts = enumerate_topologies(2);
  std::set<int> counts;
  for (const Topology& t : ts) counts.insert(t.open_count());
  CHECK(ts.size() == 4);
  CHECK(counts == std::set<int>{2, 3, 4});
}

TEST_CASE("sigma algebras between Borel and powerset") {
  CHECK(enumerate_sigma_algebras(fx::tau_b()).size() == 1);
  CHECK(enumerate_sigma_algebras(fx::tau_a()).size() == 2);
  CHECK(enumerate_sigma_algebras(Topology::indiscrete(2)).size() == 2);
  CHECK(enumerate_sigma_algebras(Topology::indiscrete(4)).size() == 15);
  for (const SigmaAlgebra& s : enumerate_sigma_algebras(fx::tau_a())) CHECK(s.atoms().refines(borel_atoms(fx::tau_a())));
}

TEST_CASE("measure grids") {
  const std::vector<ExtValue> g = fx::grid3();
  CHECK(enumerate_measures(SigmaAlgebra::powerset(3), g).size() == 27);
  CHECK(enumerate_measures(SigmaAlgebra::powerset(2), std::vector<ExtValue>{ExtValue(0)}).size() == 1);
  CHECK(enumerate_measures(SigmaAlgebra::powerset(1), std::vector<ExtValue>{ExtValue(1, 2), ExtValue::infinity()}).size() == 2);
  const auto ms = enumerate_measures(SigmaAlgebra::powerset(2), g);
  CHECK(ms.front().atom_mass(0) == ExtValue(0));
  CHECK(ms[1].atom_mass(1) == ExtValue(1));
  CHECK(ms.back().atom_mass(0) == ExtValue::infinity());
}

TEST_CASE("homeomorphism") {
  const Space s1 = parse_model("points a b\nopen {a}\nsigma powerset\nmass {a} 1\nmass {b} 1\n");
  const Space s2 = parse_model("points a b\nopen {b}\nsigma powerset\nmass {a} 1\nmass {b} 1\n");
  CHECK(are_homeomorphic(s1, s2));
  CHECK_FALSE(are_homeomorphic(fx::builtin("M_WEAK"), fx::builtin("M_DIRAC")));
  const Space ta = parse_model("points a b c\nopen {c}\nsigma powerset\nmass {a} 0\nmass {b} 0\nmass {c} 0\n");
  const Space tb = parse_model("points a b c\nopen {c}\nopen {a c}\nopen {b c}\nsigma powerset\nmass {a} 0\nmass {b} 0\nmass {c} 0\n");
  CHECK_FALSE(are_homeomorphic(ta, tb));
}

TEST_CASE("canonical form is invariant under random permutations") {
  EnumConfig c;
  c.n = 5;
  c.mass_grid = {ExtValue(0), ExtValue(1, 2), ExtValue(1), ExtValue::infinity()};
  c.sigma_mode = SigmaMode::kAllRefinements;
  c.seed = 7;
  SampledStream stream(c, 100);
  std::mt19937_64 rng(11);
  int n_seen = 0;
  while (auto s = stream.next()) {
    ++n_seen;
    CHECK(validate(*s).empty());
    std::vector<int> perm = {0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const Space p = permute(*s, perm);
    CHECK(canonical_form(p) == canonical_form(*s));
    CHECK(are_homeomorphic(p, *s));
  }
  CHECK(n_seen == 100);
}

TEST_CASE("streams are deterministic and every space validates") {
  EnumConfig c;
  c.n = 3;
  c.sigma_mode = SigmaMode::kAllRefinements;
  SpaceStream s1(c), s2(c);
  std::size_t count = 0;
  while (true) {
    auto x = s1.next();
    auto y = s2.next();
    REQUIRE(x.has_value() == y.has_value());
    if (!x) break;
    CHECK(*x == *y);
    CHECK(validate(*x).empty());
    ++count;
  }
  std::size_t expected = 0;
  for (const Topology& t : enumerate_topologies(3)) {
    for (const SigmaAlgebra& sg : enumerate_sigma_algebras(t)) {
      std::size_t m = 1;
      for (int i = 0; i < sg.atoms().size(); ++i) m *= 3;
      expected += m;
    }
  }
  CHECK(count == expected);
  CHECK(count == 894);
}

TEST_CASE("unlabeled streams dedupe homeomorphic spaces") {
  EnumConfig c;
  c.n = 3;
  c.unlabeled = true;
  SpaceStream s(c);
  std::set<CanonicalKey> keys;
  std::size_t count = 0;
  while (auto x = s.next()) {
    CHECK(keys.insert(canonical_form(*x)).second);
    ++count;
  }
  EnumConfig l = c;
  l.unlabeled = false;
  SpaceStream all(l);
  std::set<CanonicalKey> labeled_keys;
  while (auto x = all.next()) labeled_keys.insert(canonical_form(*x));
  CHECK(labeled_keys == keys);
  CHECK(count < 29 * 27);
}

TEST_CASE("sampled streams are reproducible from the seed") {
  EnumConfig c;
  c.n = 10;
  c.seed = 42;
  SampledStream x(c, 20), y(c, 20);
  for (int i = 0; i < 20; ++i) {
    auto p = x.next();
    auto q = y.next();
    REQUIRE(p);
    REQUIRE(q);
    CHECK(*p == *q);
  }
  CHECK_FALSE(x.next());
  c.n = 17;
  CHECK_THROWS_AS(SampledStream(c, 1), ModelError);
}

TEST_CASE("built-in models") {
  const auto& ex = builtin_examples();
  REQUIRE(ex.size() == 5);
  for (const auto& e : ex) {
    CHECK(validate(e.space).empty());
    CHECK(report_mismatches(evaluate_report(e.space), e.expected).empty());
  }
}
