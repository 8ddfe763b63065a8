#include "coverlab/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace coverlab {

OrbitDecomposition decompose_orbits(int k, int n, const PermutationGroupSpec& group,
                                    std::uint64_t budget, bool require_transitive) {
  validate_group(group);
  if (group.n != n) throw ValidationError("group degree does not match n");
  if (require_transitive && !group_is_transitive(group))
    throw ValidationError("group is not transitive on coordinates (pass the permissive flag "
                          "to decompose anyway)");
  ProductFamily all = full_cube_family(k, n, budget);

  OrbitDecomposition dec{k, n, group, {}};
  std::unordered_set<std::uint64_t> assigned;
  assigned.reserve(all.size() * 2);
  for (std::uint64_t code : all.codes()) {  // ascending, so reps come out lex-min
    if (assigned.count(code)) continue;
    Orbit orbit;
    orbit.representative = code;
    std::vector<std::uint64_t> stack{code};
    assigned.insert(code);
    while (!stack.empty()) {
      std::uint64_t current = stack.back();
      stack.pop_back();
      orbit.members.push_back(current);
      for (const auto& perm : group.generators) {
        std::uint64_t image = all.encode(permute_tuple(perm, all.decode(current)));
        if (assigned.insert(image).second) stack.push_back(image);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

namespace {

// Decoded member tuples, flattened per orbit for the pairwise loops.
struct OrbitPoints {
  int n;
  std::vector<std::vector<int>> tuples;
};

bool tuples_agree(const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == y[i]) return true;
  return false;
}

bool orbit_feasible(const OrbitPoints& pts) {
  for (std::size_t a = 0; a + 1 < pts.tuples.size(); ++a)
    for (std::size_t b = a + 1; b < pts.tuples.size(); ++b)
      if (!tuples_agree(pts.tuples[a], pts.tuples[b])) return false;
  return true;
}

bool orbits_conflict(const OrbitPoints& p, const OrbitPoints& q) {
  for (const auto& x : p.tuples)
    for (const auto& y : q.tuples)
      if (!tuples_agree(x, y)) return true;
  return false;
}

}  // namespace

ConflictGraph build_conflict_graph(const OrbitDecomposition& dec) {
  ProductFamily shape(Space::base, dec.k, dec.n, base_poset(dec.k));

  std::vector<OrbitPoints> decoded;
  decoded.reserve(dec.orbits.size());
  for (const auto& orbit : dec.orbits) {
    OrbitPoints pts{dec.n, {}};
    pts.tuples.reserve(orbit.members.size());
    for (std::uint64_t code : orbit.members) pts.tuples.push_back(shape.decode(code));
    decoded.push_back(std::move(pts));
  }

  ConflictGraph graph;
  std::vector<int> vertex_orbits;
  for (std::size_t i = 0; i < dec.orbits.size(); ++i) {
    if (orbit_feasible(decoded[i]))
      vertex_orbits.push_back(static_cast<int>(i));
    else
      ++graph.infeasible_orbits;
  }
  const int v = static_cast<int>(vertex_orbits.size());
  graph.orbit_of_vertex = vertex_orbits;
  graph.weights.resize(v);
  graph.adjacency.assign(v, std::vector<std::uint64_t>((v + 63) / 64, 0));
  for (int a = 0; a < v; ++a) graph.weights[a] = dec.orbits[vertex_orbits[a]].members.size();
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (orbits_conflict(decoded[vertex_orbits[a]], decoded[vertex_orbits[b]])) {
        graph.adjacency[a][b >> 6] |= std::uint64_t{1} << (b & 63);
        graph.adjacency[b][a >> 6] |= std::uint64_t{1} << (a & 63);
      }
  return graph;
}

namespace {

using Blocks = std::vector<std::uint64_t>;

int count_bits(const Blocks& blocks) {
  int c = 0;
  for (std::uint64_t b : blocks) c += std::popcount(b);
  return c;
}

// Branch and bound for maximum weight over independent vertex sets inside
// `eligible`. Vertices are taken in `order` (precomputed descending weight);
// the bound is the plain weight sum of the still-eligible tail. Early-exits
// once `stop_at` is reached (pass UINT64_MAX to find the true maximum).
struct MwisSolver {
  const ConflictGraph& graph;
  const std::vector<int>& order;
  std::uint64_t best = 0;
  std::uint64_t nodes = 0;
  std::uint64_t stop_at;

  MwisSolver(const ConflictGraph& g, const std::vector<int>& ord, std::uint64_t stop)
      : graph(g), order(ord), stop_at(stop) {}

  bool eligible_test(const Blocks& eligible, int v) const {
    return (eligible[v >> 6] >> (v & 63)) & 1u;
  }

  std::uint64_t eligible_weight(const Blocks& eligible, std::size_t from_pos) const {
    std::uint64_t sum = 0;
    for (std::size_t p = from_pos; p < order.size(); ++p)
      if (eligible_test(eligible, order[p])) sum += graph.weights[order[p]];
    return sum;
  }

  void run(Blocks eligible, std::size_t pos, std::uint64_t weight) {
    ++nodes;
    if (weight > best) best = weight;
    if (best >= stop_at) return;
    while (pos < order.size() && !eligible_test(eligible, order[pos])) ++pos;
    if (pos == order.size()) return;
    if (weight + eligible_weight(eligible, pos) <= best) return;

    const int v = order[pos];
    // include v
    Blocks included = eligible;
    included[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    for (std::size_t w = 0; w < included.size(); ++w) included[w] &= ~graph.adjacency[v][w];
    run(std::move(included), pos + 1, weight + graph.weights[v]);
    if (best >= stop_at) return;
    // exclude v
    eligible[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    run(std::move(eligible), pos + 1, weight);
  }
};

std::vector<int> descending_weight_order(const ConflictGraph& graph) {
  std::vector<int> degree(graph.vertex_count(), 0);
  for (int a = 0; a < graph.vertex_count(); ++a) degree[a] = count_bits(graph.adjacency[a]);
  std::vector<int> order(graph.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (graph.weights[a] != graph.weights[b]) return graph.weights[a] > graph.weights[b];
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    return a < b;
  });
  return order;
}

Blocks all_vertices(const ConflictGraph& graph) {
  Blocks blocks((graph.vertex_count() + 63) / 64, 0);
  for (int v = 0; v < graph.vertex_count(); ++v) blocks[v >> 6] |= std::uint64_t{1} << (v & 63);
  return blocks;
}

std::uint64_t solve_max(const ConflictGraph& graph, const Blocks& eligible, std::uint64_t stop_at,
                        std::uint64_t* nodes_out) {
  std::vector<int> order = descending_weight_order(graph);
  MwisSolver solver(graph, order, stop_at);
  solver.run(eligible, 0, 0);
  if (nodes_out) *nodes_out += solver.nodes;
  return solver.best;
}

// Lexicographically smallest vertex set (by ascending vertex index, which is
// ascending orbit representative) achieving exactly `target`. Deterministic
// final pass shared by both search routes.
std::vector<int> lex_min_witness(const ConflictGraph& graph, std::uint64_t target,
                                 std::uint64_t* nodes_out) {
  Blocks eligible = all_vertices(graph);
  std::vector<int> chosen;
  std::uint64_t have = 0;
  for (int v = 0; v < graph.vertex_count() && have < target; ++v) {
    if (!((eligible[v >> 6] >> (v & 63)) & 1u)) continue;
    if (have + graph.weights[v] > target) continue;  // cannot be part of a maximum solution
    Blocks after = eligible;
    after[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    for (std::size_t w = 0; w < after.size(); ++w) after[w] &= ~graph.adjacency[v][w];
    for (int u = 0; u < v; ++u) after[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    const std::uint64_t needed = target - have - graph.weights[v];
    if (solve_max(graph, after, needed, nodes_out) >= needed) {
      chosen.push_back(v);
      have += graph.weights[v];
      eligible = std::move(after);
    } else {
      eligible[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }
  if (have != target) throw Error("internal: witness re-selection failed to reach the maximum");
  return chosen;
}

SearchResult assemble_result(const OrbitDecomposition& dec, const ConflictGraph& graph,
                             std::uint64_t max_size, std::uint64_t nodes,
                             const std::vector<int>& chosen_vertices) {
  std::vector<std::uint64_t> codes;
  std::vector<int> chosen_orbits;
  for (int v : chosen_vertices) {
    const Orbit& orbit = dec.orbits[graph.orbit_of_vertex[v]];
    chosen_orbits.push_back(graph.orbit_of_vertex[v]);
    codes.insert(codes.end(), orbit.members.begin(), orbit.members.end());
  }
  ProductFamily witness = ProductFamily::from_codes(Space::base, dec.k, dec.n,
                                                    base_poset(dec.k), std::move(codes));
  if (witness.size() != max_size)
    throw Error("internal: witness size disagrees with the search maximum");
  return SearchResult{max_size, std::move(witness), dec.group, nodes, std::move(chosen_orbits)};
}

}  // namespace

SearchResult max_symmetric_intersecting(int k, int n, const PermutationGroupSpec& group,
                                        std::uint64_t budget) {
  OrbitDecomposition dec = decompose_orbits(k, n, group, budget);
  ConflictGraph graph = build_conflict_graph(dec);
  std::uint64_t nodes = 0;
  const std::uint64_t max_size =
      solve_max(graph, all_vertices(graph), ~std::uint64_t{0}, &nodes);
  std::vector<int> chosen = lex_min_witness(graph, max_size, &nodes);
  return assemble_result(dec, graph, max_size, nodes, chosen);
}

SearchResult brute_force_max(int k, int n, const PermutationGroupSpec& group,
                             std::uint64_t budget) {
  OrbitDecomposition dec = decompose_orbits(k, n, group, budget);
  ConflictGraph graph = build_conflict_graph(dec);
  const int v = graph.vertex_count();
  if (v > 24)
    throw BudgetError("brute-force oracle limited to 24 feasible orbits, got " + std::to_string(v));

  std::vector<std::uint32_t> adjacency(v, 0);
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (a != b && graph.edge(a, b)) adjacency[a] |= std::uint32_t{1} << b;

  std::uint64_t best = 0;
  std::uint64_t nodes = 0;
  const std::uint32_t end = std::uint32_t{1} << v;
  for (std::uint32_t subset = 0; subset < end; ++subset) {
    ++nodes;
    bool independent = true;
    std::uint64_t weight = 0;
    for (std::uint32_t rest = subset; rest;) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      if (adjacency[a] & subset) {
        independent = false;
        break;
      }
      weight += graph.weights[a];
    }
    if (independent && weight > best) best = weight;
  }
  std::vector<int> chosen = lex_min_witness(graph, best, &nodes);
  return assemble_result(dec, graph, best, nodes, chosen);
}

}  // namespace coverlab
