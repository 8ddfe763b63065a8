#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverlab/family.hpp"
#include "coverlab/measure.hpp"

namespace coverlab {

// The doubled poset W_k: the k singletons and k co-singletons (complements of
// singletons) of [k], ordered by inclusion, with the layer-uniform measures.
// Element identifiers are the subset-masks; singletons come first, each layer
// in ascending mask order.
struct CoveringPoset {
  int k = 0;
  Poset poset;
  Measure mu0;  // uniform on the singleton layer
  Measure mu1;  // uniform on the co-singleton layer

  int full_mask() const { return (1 << k) - 1; }
  bool is_singleton_index(int index) const { return index < k; }
  Interpolation interpolation() const { return Interpolation(mu0, mu1); }
  Measure mu_half() const;
};

// k <= 2 is rejected: the two layers coincide for k = 2 and domination
// strength degenerates to 0.
CoveringPoset build_covering(int k);

// The base alphabet [k] as a standalone antichain of singleton masks; host
// poset of every base-space family.
Poset base_poset(int k);

ProductFamily empty_family(const CoveringPoset& cov, Space space, int n);

// Coordinate-wise l -> {l}. Base singleton indexes equal cover singleton
// indexes, so only the packing width changes.
ProductFamily embed(const CoveringPoset& cov, const ProductFamily& base_fam);

// Inverse of embed on families supported on the singleton layer.
ProductFamily project_to_base(const ProductFamily& cover_fam);

// Coordinate-wise set complement within [k]; swaps the two layers.
std::vector<int> complement_point_ids(int k, const std::vector<int>& mask_ids);
std::uint64_t complement_code(const ProductFamily& cover_fam, std::uint64_t code);
ProductFamily complement_family(const ProductFamily& cover_fam);

// Nonempty mask intersection in some coordinate. For embedded points this is
// exactly "agree on at least one coordinate".
bool points_intersect(const std::vector<int>& x_mask_ids, const std::vector<int>& y_mask_ids);

// All unordered pairs intersect. Works in either space.
bool is_intersecting_family(const ProductFamily& fam);

struct HalfMeasureCheck {
  Rat measure;              // mu_{1/2}^n(fam), exact
  bool ok = false;          // measure <= 1/2
  bool complement_free = false;
  bool pairwise_validated = false;  // full O(|F|^2) intersection check ran
};

// Verifies the uniform-measure bound for intersecting families in W_k^n.
// Complement-freeness (no point together with its pointwise complement) is
// always checked and already certifies measure <= 1/2 on its own; the full
// pairwise intersection validation additionally runs when |F|^2 * n fits the
// budget. Non-intersecting input raises ValidationError.
HalfMeasureCheck half_measure_check(const ProductFamily& cover_fam,
                                    std::uint64_t budget = kDefaultBudget);

// Maximal intersecting family grown greedily along a seeded deterministic
// shuffle of all of W_k^n. Reproducible across platforms for a fixed seed.
ProductFamily greedy_maximal_intersecting(const CoveringPoset& cov, int n, std::uint64_t seed,
                                          std::uint64_t budget = kDefaultBudget);

// Seeded random up-set of W_k^n: a sparse random seed set, closed upward.
// Density varies with the seed.
ProductFamily random_up_set_family(const CoveringPoset& cov, int n, std::uint64_t seed,
                                   std::uint64_t budget = kDefaultBudget);

// Family file format. Header "family k=<k> n=<n> space=<base|cover>", one
// point per line: base coordinates are integers 1..k; cover coordinates are
// comma-joined subsets of [k] ("1 2,3" is ({1},{2,3})), each a singleton or
// co-singleton.
ProductFamily load_family(const std::string& path);
void save_family(const ProductFamily& fam, const std::string& path);
std::string format_point(const ProductFamily& fam, std::uint64_t code);

}  // namespace coverlab
