#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coverlab/covering.hpp"
#include "coverlab/family.hpp"
#include "coverlab/rational.hpp"

namespace coverlab {

// Coordinate-permutation group given by generators. Images are stored
// 0-based: generators[g][i] is the image of coordinate i. The group acts on
// points by (sigma(x))_i = x_{sigma(i)}.
struct PermutationGroupSpec {
  int n = 0;
  std::vector<std::vector<int>> generators;
};

void validate_group(const PermutationGroupSpec& group);          // bijection check
bool group_is_transitive(const PermutationGroupSpec& group);     // orbit of coordinate 0 is everything
PermutationGroupSpec cyclic_group(int n);                        // full n-cycle
PermutationGroupSpec symmetric_group(int n);                     // n-cycle plus a transposition
std::vector<int> permute_tuple(const std::vector<int>& perm, const std::vector<int>& tuple);

// Text form "2 3 1" (1-based images), generators separated by ';'.
PermutationGroupSpec parse_generators(const std::string& text, int n);
std::string format_generator(const std::vector<int>& perm);      // 1-based

// Family of blocks (subsets of coordinates {0,...,n-1}) used to build
// set-intersecting vector families.
struct SetFamily {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // each sorted, 0-based
};

void validate_set_family(const SetFamily& fam);
bool set_family_intersecting(const SetFamily& fam);

// Lines of PG(2,q) as cyclic shifts of a hard-coded perfect difference set
// modulo n = q^2+q+1; supported q: 2, 3, 4. The perfect-difference property
// is re-verified on construction.
SetFamily singer_difference_set(int q);

// File format: header "blocks n=<n>", one block per line (1-based points).
SetFamily load_set_family(const std::string& path);
void save_set_family(const SetFamily& fam, const std::string& path);

// {x in [k]^n : x_coord = symbol}; coord 0-based, symbol in 1..k.
ProductFamily dictator_family(int k, int n, int coord, int symbol,
                              std::uint64_t budget = kDefaultBudget);

// k = 2, odd n: vectors with more 1's than 2's.
ProductFamily majority_family(int n, std::uint64_t budget = kDefaultBudget);

ProductFamily full_cube_family(int k, int n, std::uint64_t budget = kDefaultBudget);

// {x in [k]^n : some block of `blocks` has x constantly equal to `symbol`}.
// With strict set, a non-intersecting block family is rejected. Materializes
// by scanning [k]^n when that fits the budget, otherwise by generating from
// the blocks; both paths produce identical families.
ProductFamily set_intersecting_family(const SetFamily& blocks, int symbol, int k,
                                      std::uint64_t budget = kDefaultBudget, bool strict = true);

std::pair<std::uint64_t, Rat> family_size_and_density(const ProductFamily& fam);

struct SymmetryCheck {
  bool invariant = false;   // every generator maps the family onto itself
  bool transitive = false;  // the generated group is transitive on coordinates
};

SymmetryCheck is_symmetric(const ProductFamily& fam, const PermutationGroupSpec& group);

ProductFamily apply_permutation_to_family(const ProductFamily& fam, const std::vector<int>& perm);

// n - log_k |fam|; 0 for the full cube, 1 for a dictatorship.
double log_k_deficiency(const ProductFamily& fam);

}  // namespace coverlab
