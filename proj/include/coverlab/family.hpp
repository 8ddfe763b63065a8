#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverlab/poset.hpp"

namespace coverlab {

// Which product space a family lives in. Base families sit in [k]^n; cover
// families sit in W_k^n for the doubled poset W_k. In both cases the host
// poset's element identifiers are subset-masks of [k], so "x and y intersect
// in coordinate i" is a mask AND in either space.
enum class Space { base, cover };

std::string space_name(Space space);
Space parse_space(const std::string& name);

// Finite set of points in the n-fold product of a host poset. Points are kept
// as sorted, deduplicated codes: coordinate element-indexes packed big-endian
// (first coordinate in the highest bits), so numeric order on codes equals
// lexicographic order on index tuples.
class ProductFamily {
 public:
  ProductFamily(Space space, int k, int n, Poset host);  // empty family
  static ProductFamily from_codes(Space space, int k, int n, Poset host,
                                  std::vector<std::uint64_t> codes);
  static ProductFamily from_index_tuples(Space space, int k, int n, Poset host,
                                         const std::vector<std::vector<int>>& tuples);
  static ProductFamily full_space(Space space, int k, int n, Poset host,
                                  std::uint64_t budget = kDefaultBudget);

  Space space() const { return space_; }
  int k() const { return k_; }
  int n() const { return n_; }
  const Poset& host() const { return host_; }
  std::uint64_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  const std::vector<std::uint64_t>& codes() const { return codes_; }

  bool contains(std::uint64_t code) const;

  int coord_bits() const { return coord_bits_; }
  std::uint64_t encode(const std::vector<int>& index_tuple) const;
  std::vector<int> decode(std::uint64_t code) const;
  int coord_index(std::uint64_t code, int coord) const;
  std::uint64_t with_coord(std::uint64_t code, int coord, int new_index) const;

  // Element identifiers (masks) along a point, in coordinate order.
  std::vector<int> point_ids(std::uint64_t code) const;

  // Same space, k, n and host poset.
  bool same_context(const ProductFamily& other) const;

  std::uint64_t space_size() const;  // |host|^n, as uint64 (guarded at construction)

 private:
  Space space_;
  int k_;
  int n_;
  Poset host_;
  int coord_bits_;
  std::vector<std::uint64_t> codes_;
};

// Smallest up-set of the product order containing the family: closes each
// point upward coordinate-wise. The budget caps the number of points visited.
ProductFamily family_up_closure(const ProductFamily& fam, std::uint64_t budget = kDefaultBudget);

// Closed under raising any single coordinate.
bool family_is_up_set(const ProductFamily& fam);

}  // namespace coverlab
