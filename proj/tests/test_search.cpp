#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coverlab/covering.hpp"
#include "coverlab/search.hpp"

using namespace coverlab;

namespace {

// Burnside oracle: enumerate the generated permutation group by closure under
// composition, then average the fixed-point counts k^{cycles(g)}.
std::size_t burnside_orbit_count(int k, int n, const PermutationGroupSpec& spec) {
  std::set<std::vector<int>> group;
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  group.insert(identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(group.begin(), group.end());
    for (const auto& g : snapshot)
      for (const auto& h : spec.generators) {
        std::vector<int> composed(n);
        for (int i = 0; i < n; ++i) composed[i] = g[h[i]];
        if (group.insert(composed).second) grew = true;
      }
    REQUIRE(group.size() <= 10080);  // guard against runaway groups in tests
  }
  unsigned long long fixed_total = 0;
  for (const auto& g : group) {
    int cycles = 0;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = g[j]) seen[j] = true;
    }
    unsigned long long fixed = 1;
    for (int c = 0; c < cycles; ++c) fixed *= static_cast<unsigned long long>(k);
    fixed_total += fixed;
  }
  return static_cast<std::size_t>(fixed_total / group.size());
}

void check_partition(int k, int n, const OrbitDecomposition& dec) {
  std::set<std::uint64_t> seen;
  std::uint64_t total = 0;
  ProductFamily shape(Space::base, k, n, base_poset(k));
  for (const auto& orbit : dec.orbits) {
    CHECK(!orbit.members.empty());
    CHECK(orbit.representative == orbit.members.front());
    CHECK(std::is_sorted(orbit.members.begin(), orbit.members.end()));
    for (std::uint64_t code : orbit.members) CHECK(seen.insert(code).second);
    total += orbit.members.size();
    // closed under every generator
    for (const auto& perm : dec.group.generators)
      for (std::uint64_t code : orbit.members)
        CHECK(std::binary_search(orbit.members.begin(), orbit.members.end(),
                                 shape.encode(permute_tuple(perm, shape.decode(code)))));
  }
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) space *= static_cast<std::uint64_t>(k);
  CHECK(total == space);
}

}  // namespace

TEST_CASE("orbit counts match Burnside on the named instances") {
  struct Case {
    int k, n;
    PermutationGroupSpec group;
    std::size_t expected;
  };
  std::vector<Case> cases{
      {3, 3, cyclic_group(3), 11},
      {3, 2, cyclic_group(2), 6},
      {3, 7, cyclic_group(7), 315},
  };
  for (const auto& c : cases) {
    OrbitDecomposition dec = decompose_orbits(c.k, c.n, c.group);
    CHECK(dec.orbits.size() == c.expected);
    CHECK(burnside_orbit_count(c.k, c.n, c.group) == c.expected);
    check_partition(c.k, c.n, dec);
  }
}

TEST_CASE("orbit decomposition under the full symmetric group") {
  OrbitDecomposition dec = decompose_orbits(3, 3, symmetric_group(3));
  CHECK(dec.orbits.size() == burnside_orbit_count(3, 3, symmetric_group(3)));
  CHECK(dec.orbits.size() == 10);  // multisets of size 3 over 3 symbols
  check_partition(3, 3, dec);
}

TEST_CASE("intransitive groups are rejected unless permitted") {
  PermutationGroupSpec swap01{3, {{1, 0, 2}}};
  CHECK_THROWS_AS(decompose_orbits(3, 3, swap01), ValidationError);
  OrbitDecomposition dec = decompose_orbits(3, 3, swap01, kDefaultBudget,
                                            /*require_transitive=*/false);
  check_partition(3, 3, dec);
}

TEST_CASE("orbit budget fails fast") {
  CHECK_THROWS_AS(decompose_orbits(3, 20, cyclic_group(20), 1 << 20), BudgetError);
}

TEST_CASE("conflict graph for the swap action on [3]^2") {
  OrbitDecomposition dec = decompose_orbits(3, 2, cyclic_group(2));
  ConflictGraph graph = build_conflict_graph(dec);
  // three mixed orbits {(a,b),(b,a)} are internally non-agreeing, leaving the
  // three diagonal singletons, pairwise in conflict
  CHECK(graph.infeasible_orbits == 3);
  CHECK(graph.vertex_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(graph.weights[v] == 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(graph.edge(a, b));
}

TEST_CASE("conflict edges require a witness pair, absence means compatibility") {
  OrbitDecomposition dec = decompose_orbits(2, 3, cyclic_group(3));
  ConflictGraph graph = build_conflict_graph(dec);
  CHECK(graph.vertex_count() == 4);
  CHECK(graph.infeasible_orbits == 0);
  ProductFamily shape(Space::base, 2, 3, base_poset(2));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      bool some_pair_disagrees = false;
      for (std::uint64_t x : dec.orbits[graph.orbit_of_vertex[a]].members)
        for (std::uint64_t y : dec.orbits[graph.orbit_of_vertex[b]].members) {
          auto xt = shape.decode(x), yt = shape.decode(y);
          bool agree = false;
          for (int i = 0; i < 3; ++i)
            if (xt[i] == yt[i]) agree = true;
          if (!agree) some_pair_disagrees = true;
        }
      CHECK(graph.edge(a, b) == some_pair_disagrees);
    }
}

TEST_CASE("k=2 n=3 cyclic: maximum 4, witness is the majority family") {
  SearchResult result = max_symmetric_intersecting(2, 3, cyclic_group(3));
  CHECK(result.max_size == 4);
  CHECK(result.witness.codes() == majority_family(3).codes());
  CHECK(is_intersecting_family(result.witness));
  SymmetryCheck sym = is_symmetric(result.witness, cyclic_group(3));
  CHECK(sym.invariant);
  CHECK(sym.transitive);
}

TEST_CASE("k=3 n=2 swap: maximum 1") {
  SearchResult result = max_symmetric_intersecting(3, 2, cyclic_group(2));
  CHECK(result.max_size == 1);
  CHECK(result.witness.size() == 1);
}

TEST_CASE("k=3 n=3 cyclic: maximum 7, agreeing with the exhaustive oracle") {
  SearchResult bb = max_symmetric_intersecting(3, 3, cyclic_group(3));
  SearchResult scan = brute_force_max(3, 3, cyclic_group(3));
  CHECK(bb.max_size == 7);
  CHECK(scan.max_size == 7);
  CHECK(bb.witness.codes() == scan.witness.codes());
  CHECK(bb.chosen_orbits == scan.chosen_orbits);
}

TEST_CASE("branch and bound equals the oracle on every small instance") {
  struct Case {
    int k, n;
    PermutationGroupSpec group;
  };
  std::vector<Case> cases{
      {2, 2, cyclic_group(2)}, {2, 3, cyclic_group(3)}, {2, 4, cyclic_group(4)},
      {3, 2, cyclic_group(2)}, {3, 3, cyclic_group(3)}, {3, 3, symmetric_group(3)},
      {4, 2, cyclic_group(2)}, {3, 4, cyclic_group(4)}, {2, 5, cyclic_group(5)},
  };
  for (const auto& c : cases) {
    SearchResult bb = max_symmetric_intersecting(c.k, c.n, c.group);
    SearchResult scan = brute_force_max(c.k, c.n, c.group);
    CHECK(bb.max_size == scan.max_size);
    CHECK(bb.witness.codes() == scan.witness.codes());
    // the witness really is invariant and intersecting
    CHECK(is_intersecting_family(bb.witness));
    if (bb.max_size > 0) {
      SymmetryCheck sym = is_symmetric(bb.witness, c.group);
      CHECK(sym.invariant);
      CHECK(sym.transitive);
    }
  }
}

TEST_CASE("brute force refuses large vertex sets") {
  CHECK_THROWS_AS(brute_force_max(3, 6, cyclic_group(6)), BudgetError);
}

TEST_CASE("adding generators never increases the maximum") {
  SearchResult cyclic4 = max_symmetric_intersecting(3, 4, cyclic_group(4));
  PermutationGroupSpec dihedral = cyclic_group(4);
  dihedral.generators.push_back({3, 2, 1, 0});  // reversal
  SearchResult dihedral4 = max_symmetric_intersecting(3, 4, dihedral);
  CHECK(dihedral4.max_size <= cyclic4.max_size);

  SearchResult cyclic3 = max_symmetric_intersecting(3, 3, cyclic_group(3));
  SearchResult sym3 = max_symmetric_intersecting(3, 3, symmetric_group(3));
  CHECK(sym3.max_size <= cyclic3.max_size);
}

TEST_CASE("strict gap below the trivial bound at small scale") {
  for (int n : {2, 3}) {
    SearchResult result = max_symmetric_intersecting(3, n, cyclic_group(n));
    std::uint64_t trivial_bound = 1;
    for (int i = 0; i < n - 1; ++i) trivial_bound *= 3;
    CHECK(result.max_size < trivial_bound);
  }
}

TEST_CASE("cyclic maxima for k = 3 match the recorded oracle values") {
  // frozen from an independent exhaustive orbit-subset scan
  const std::uint64_t expected[] = {1, 7, 9, 51, 121};
  for (int n = 2; n <= 6; ++n)
    CHECK(max_symmetric_intersecting(3, n, cyclic_group(n)).max_size == expected[n - 2]);
}

TEST_CASE("search results are reproducible") {
  SearchResult a = max_symmetric_intersecting(3, 3, cyclic_group(3));
  SearchResult b = max_symmetric_intersecting(3, 3, cyclic_group(3));
  CHECK(a.max_size == b.max_size);
  CHECK(a.witness.codes() == b.witness.codes());
  CHECK(a.chosen_orbits == b.chosen_orbits);
  CHECK(a.nodes_explored == b.nodes_explored);
}
