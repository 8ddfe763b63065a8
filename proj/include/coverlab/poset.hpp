#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coverlab/error.hpp"

namespace coverlab {

// Enumeration ceiling shared by all exhaustive operations. Exceeding it is a
// BudgetError, never a silent approximation.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Finite poset on at most 63 elements. Elements carry distinct integer
// identifiers; the order is stored as one comparability bitrow per element
// (bit j of up_[i] set iff element i precedes element j). Subsets of the
// ground set are index bitmasks throughout.
class Poset {
 public:
  static constexpr int kMaxElements = 63;

  Poset() = default;

  // Identifiers are set-masks, ordered by mask inclusion.
  static Poset subset_order(const std::vector<int>& mask_ids);
  static Poset antichain(const std::vector<int>& ids);
  // Listed order, bottom first.
  static Poset chain(const std::vector<int>& ids);
  // Arbitrary generating relations a <= b; reflexive-transitive closure is
  // applied, then antisymmetry is validated.
  static Poset from_relations(const std::vector<int>& ids,
                              const std::vector<std::pair<int, int>>& below_above);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& ids() const { return ids_; }
  int id_at(int index) const;
  int index_of(int id) const;  // ValidationError for unknown identifiers
  bool has_id(int id) const { return index_.count(id) != 0; }

  bool leq_index(int i, int j) const { return (up_[i] >> j) & std::uint64_t{1}; }
  bool leq(int id_a, int id_b) const { return leq_index(index_of(id_a), index_of(id_b)); }
  std::uint64_t up_row(int index) const { return up_[index]; }
  std::uint64_t full_subset() const;

  bool operator==(const Poset& other) const { return ids_ == other.ids_ && up_ == other.up_; }
  bool operator!=(const Poset& other) const { return !(*this == other); }

  std::uint64_t subset_from_ids(const std::vector<int>& members) const;
  std::vector<int> ids_from_subset(std::uint64_t bits) const;

  bool is_up_set(std::uint64_t bits) const;
  std::uint64_t up_closure(std::uint64_t bits) const;

  // Every up-set, including the empty set and the full ground set, each
  // exactly once, in ascending bitmask order. Requires 2^size <= budget.
  std::vector<std::uint64_t> enumerate_up_sets(std::uint64_t budget = kDefaultBudget) const;

 private:
  Poset(std::vector<int> ids, std::vector<std::uint64_t> up);
  void validate() const;

  std::vector<int> ids_;
  std::vector<std::uint64_t> up_;
  std::unordered_map<int, int> index_;
};

// Text format. Header "poset <m>", then one line per element:
//   id <int> mask <hex>     bitmask-encoded element, order is mask inclusion
//   id <int>                bare element (useful with rel lines)
// plus any number of "rel <a> <b>" lines meaning a <= b. Mask-style and
// rel-style may not be mixed. Transitive closure is applied on load.
Poset parse_poset(std::istream& in, const std::string& origin);
Poset load_poset(const std::string& path);
void save_poset(const Poset& poset, const std::string& path);

}  // namespace coverlab
