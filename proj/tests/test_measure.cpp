#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "coverlab/covering.hpp"
#include "coverlab/measure.hpp"

using namespace coverlab;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("measure validation") {
  Poset p = Poset::antichain({1, 2});
  CHECK_THROWS_AS(Measure(p, {rat(1, 2), rat(1, 3)}), ValidationError);   // sums to 5/6
  CHECK_THROWS_AS(Measure(p, {rat(3, 2), rat(-1, 2)}), ValidationError);  // negative mass
  CHECK_THROWS_AS(Measure(p, {rat(1)}), ValidationError);                 // wrong arity
  Measure ok(p, {rat(1, 3), rat(2, 3)});
  CHECK(ok.mass_of_id(1) == rat(1, 3));
}

TEST_CASE("interpolation endpoints and midpoint") {
  for (int k = 3; k <= 6; ++k) {
    CoveringPoset cov = build_covering(k);
    Interpolation interp = cov.interpolation();
    CHECK(interp.at(rat(0)) == cov.mu0);
    CHECK(interp.at(rat(1)) == cov.mu1);
    Measure half = interp.at(rat(1, 2));
    for (int i = 0; i < cov.poset.size(); ++i) CHECK(half.mass_at(i) == rat(1, 2 * k));
  }
}

TEST_CASE("interpolation is exactly convex at interior times") {
  CoveringPoset cov = build_covering(3);
  Measure m = cov.interpolation().at(rat(1, 3));
  // bottom mass (2/3)(1/3), top mass (1/3)(1/3)
  CHECK(m.mass_of_id(0b001) == rat(2, 9));
  CHECK(m.mass_of_id(0b011) == rat(1, 9));
}

TEST_CASE("interpolation rejects t outside [0,1]") {
  CoveringPoset cov = build_covering(3);
  CHECK_THROWS_AS(cov.interpolation().at(rat(-1, 10)), ValidationError);
  CHECK_THROWS_AS(cov.interpolation().at(rat(11, 10)), ValidationError);
}

TEST_CASE("interpolation endpoints must share a host") {
  Poset a = Poset::antichain({1, 2});
  Poset b = Poset::chain({1, 2});
  CHECK_THROWS_AS(Interpolation(Measure::uniform_on(a, 3), Measure::uniform_on(b, 3)),
                  ValidationError);
}

TEST_CASE("domination strength of the covering poset is 1/k") {
  for (int k = 3; k <= 6; ++k) {
    CoveringPoset cov = build_covering(k);
    DominationReport report = domination_strength(cov.poset, cov.mu0, cov.mu1);
    CHECK(report.strength == rat(1, k));
    // the witness is a proper nontrivial up-set attaining the minimum
    CHECK(cov.poset.is_up_set(report.witness_bits));
    CHECK(report.witness_bits != 0);
    CHECK(report.witness_bits != cov.poset.full_subset());
    Rat direct = cov.mu1.mass_of_subset(report.witness_bits) -
                 cov.mu0.mass_of_subset(report.witness_bits);
    CHECK(direct == report.strength);
  }
}

TEST_CASE("W_3 has 16 proper nontrivial up-sets, W_4 has 33") {
  CoveringPoset c3 = build_covering(3);
  CHECK(domination_strength(c3.poset, c3.mu0, c3.mu1).count_proper_nontrivial == 16);
  CoveringPoset c4 = build_covering(4);
  CHECK(domination_strength(c4.poset, c4.mu0, c4.mu1).count_proper_nontrivial == 33);
}

TEST_CASE("star up-sets evaluate to exactly 1 - 2/k") {
  for (int k = 3; k <= 6; ++k) {
    CoveringPoset cov = build_covering(k);
    const int full = cov.full_mask();
    // star at element 1: {1} plus every co-singleton except [k] \ {1}
    std::vector<int> members{0b001};
    for (int i = 1; i < k; ++i) members.push_back(full ^ (1 << i));
    std::uint64_t star = cov.poset.subset_from_ids(members);
    REQUIRE(cov.poset.is_up_set(star));
    Rat value = cov.mu1.mass_of_subset(star) - cov.mu0.mass_of_subset(star);
    CHECK(value == Rat(1) - rat(2, k));
  }
}

TEST_CASE("two-element chain with point masses has strength 1") {
  Poset chain = Poset::chain({1, 2});
  Measure at_bottom = Measure::point_mass(chain, 1);
  Measure at_top = Measure::point_mass(chain, 2);
  DominationReport report = domination_strength(chain, at_bottom, at_top);
  CHECK(report.strength == rat(1));
  CHECK(report.count_proper_nontrivial == 1);
  CHECK(report.witness_ids == std::vector<int>{2});
}

TEST_CASE("coinciding layers give strength 0 (the k = 2 situation)") {
  // for k = 2 singletons and co-singletons coincide, so the structure is a
  // two-element antichain carrying the same uniform measure twice
  Poset p = Poset::antichain({1, 2});
  Measure uniform = Measure::uniform_on(p, 3);
  CHECK(domination_strength(p, uniform, uniform).strength == rat(0));
}

TEST_CASE("layer-uniform strength follows min(1/k, 1 - 2/k)") {
  for (int k = 3; k <= 8; ++k) {
    CoveringPoset cov = build_covering(k);
    Rat expected = std::min(rat(1, k), Rat(Rat(1) - rat(2, k)));
    CHECK(domination_strength(cov.poset, cov.mu0, cov.mu1).strength == expected);
    CHECK(expected == rat(1, k));  // k >= 3 keeps the singleton-top witness minimal
  }
}

TEST_CASE("degenerate posets are rejected") {
  Poset single = Poset::antichain({1});
  Measure m = Measure::point_mass(single, 1);
  CHECK_THROWS_AS(domination_strength(single, m, m), DegenerateError);
}

TEST_CASE("host mismatch is a validation error") {
  Poset a = Poset::antichain({1, 2});
  Poset b = Poset::chain({1, 2});
  Measure ma = Measure::uniform_on(a, 3);
  Measure mb = Measure::uniform_on(b, 3);
  CHECK_THROWS_AS(domination_strength(a, ma, mb), ValidationError);
}

TEST_CASE("difference is antisymmetric on a fixed witness") {
  CoveringPoset cov = build_covering(4);
  DominationReport report = domination_strength(cov.poset, cov.mu0, cov.mu1);
  Rat forward = cov.mu1.mass_of_subset(report.witness_bits) -
                cov.mu0.mass_of_subset(report.witness_bits);
  Rat backward = cov.mu0.mass_of_subset(report.witness_bits) -
                 cov.mu1.mass_of_subset(report.witness_bits);
  CHECK(forward == -backward);
}

TEST_CASE("domination respects the budget") {
  std::vector<int> ids(30);
  for (int i = 0; i < 30; ++i) ids[i] = i;
  Poset p = Poset::antichain(ids);
  Measure u = Measure::uniform_on(p, (std::uint64_t{1} << 30) - 1);
  CHECK_THROWS_AS(domination_strength(p, u, u, 1 << 16), BudgetError);
}

TEST_CASE("measure file round trip") {
  CoveringPoset cov = build_covering(3);
  const std::string poset_path = temp_path("coverlab_w3m.poset");
  const std::string measure_path = temp_path("coverlab_w3m.measure");
  save_poset(cov.poset, poset_path);
  save_measure(cov.mu0, measure_path, poset_path);
  Measure reloaded = load_measure(measure_path);
  CHECK(reloaded == cov.mu0);
  // host check against an unrelated poset fails
  Poset chain = Poset::chain({1, 2});
  CHECK_THROWS_AS(load_measure(measure_path, &chain), ValidationError);
  std::remove(poset_path.c_str());
  std::remove(measure_path.c_str());
}

TEST_CASE("measure files reject bad masses") {
  const std::string poset_path = temp_path("coverlab_c2.poset");
  const std::string measure_path = temp_path("coverlab_c2.measure");
  save_poset(Poset::chain({1, 2}), poset_path);
  {
    std::ofstream out(measure_path);
    out << "measure " << poset_path << " ; 1=1/2 ; 2=1/3\n";
  }
  CHECK_THROWS_AS(load_measure(measure_path), ValidationError);  // sums to 5/6
  {
    std::ofstream out(measure_path);
    out << "measure " << poset_path << " ; 1=1/2 ; 1=1/2\n";
  }
  CHECK_THROWS_AS(load_measure(measure_path), ValidationError);  // repeated element
  std::remove(poset_path.c_str());
  std::remove(measure_path.c_str());
}
