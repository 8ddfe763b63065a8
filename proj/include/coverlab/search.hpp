#pragma once

#include <cstdint>
#include <vector>

#include "coverlab/family.hpp"
#include "coverlab/family_lab.hpp"

namespace coverlab {

// One orbit of the coordinate-permutation action on [k]^n. Codes use the
// base-family encoding; the representative is the numeric (= lexicographic)
// minimum.
struct Orbit {
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> members;  // sorted
};

struct OrbitDecomposition {
  int k = 0;
  int n = 0;
  PermutationGroupSpec group;
  std::vector<Orbit> orbits;  // ascending by representative
};

// Partition of [k]^n into group orbits. Requires a transitive generated group
// unless require_transitive is cleared.
OrbitDecomposition decompose_orbits(int k, int n, const PermutationGroupSpec& group,
                                    std::uint64_t budget = kDefaultBudget,
                                    bool require_transitive = true);

// Vertices are the feasible orbits (members pairwise agree somewhere), with
// orbit sizes as weights; an edge joins two orbits containing a cross pair
// that agrees nowhere. Independent sets correspond exactly to invariant
// intersecting families.
struct ConflictGraph {
  std::vector<int> orbit_of_vertex;          // vertex -> index into the decomposition
  std::vector<std::uint64_t> weights;
  std::vector<std::vector<std::uint64_t>> adjacency;  // bitset rows over vertexes
  int infeasible_orbits = 0;

  int vertex_count() const { return static_cast<int>(weights.size()); }
  bool edge(int a, int b) const { return (adjacency[a][b >> 6] >> (b & 63)) & 1u; }
};

ConflictGraph build_conflict_graph(const OrbitDecomposition& dec);

struct SearchResult {
  std::uint64_t max_size = 0;
  ProductFamily witness;          // union of the chosen orbits, base space
  PermutationGroupSpec group;
  std::uint64_t nodes_explored = 0;
  std::vector<int> chosen_orbits;  // decomposition indexes, canonical (lex-min)
};

// Exact maximum invariant intersecting family via branch and bound over the
// conflict graph (descending-weight order, remaining-weight-sum pruning). The
// witness is re-selected deterministically as the lexicographically smallest
// orbit-index set among the maximum solutions.
SearchResult max_symmetric_intersecting(int k, int n, const PermutationGroupSpec& group,
                                        std::uint64_t budget = kDefaultBudget);

// Independent oracle: exhaustive scan over all subsets of feasible orbits.
// Requires at most 24 feasible orbits.
SearchResult brute_force_max(int k, int n, const PermutationGroupSpec& group,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace coverlab
