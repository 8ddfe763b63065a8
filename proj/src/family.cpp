#include "coverlab/family.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace coverlab {

std::string space_name(Space space) { return space == Space::base ? "base" : "cover"; }

Space parse_space(const std::string& name) {
  if (name == "base") return Space::base;
  if (name == "cover") return Space::cover;
  throw ValidationError("unknown space '" + name + "' (expected base or cover)");
}

namespace {

int bits_for(int m) {
  int b = 1;
  while ((1 << b) < m) ++b;
  return b;
}

}  // namespace

ProductFamily::ProductFamily(Space space, int k, int n, Poset host)
    : space_(space), k_(k), n_(n), host_(std::move(host)), coord_bits_(bits_for(host_.size())) {
  if (k < 1) throw ValidationError("family alphabet size k must be positive");
  if (n < 1) throw ValidationError("family dimension n must be positive");
  if (host_.size() < 1) throw ValidationError("family host poset is empty");
  if (n_ * coord_bits_ > 62)
    throw BudgetError("product space too wide to encode: n * ceil(log2 |W|) exceeds 62 bits");
}

ProductFamily ProductFamily::from_codes(Space space, int k, int n, Poset host,
                                        std::vector<std::uint64_t> codes) {
  ProductFamily fam(space, k, n, std::move(host));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  for (std::uint64_t code : codes) fam.decode(code);  // range-validate every coordinate
  fam.codes_ = std::move(codes);
  return fam;
}

ProductFamily ProductFamily::from_index_tuples(Space space, int k, int n, Poset host,
                                               const std::vector<std::vector<int>>& tuples) {
  ProductFamily fam(space, k, n, std::move(host));
  std::vector<std::uint64_t> codes;
  codes.reserve(tuples.size());
  for (const auto& t : tuples) codes.push_back(fam.encode(t));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  fam.codes_ = std::move(codes);
  return fam;
}

ProductFamily ProductFamily::full_space(Space space, int k, int n, Poset host,
                                        std::uint64_t budget) {
  ProductFamily fam(space, k, n, std::move(host));
  const std::uint64_t total = fam.space_size();
  if (total > budget)
    throw BudgetError("full product space of " + std::to_string(total) +
                      " points exceeds budget " + std::to_string(budget));
  std::vector<std::uint64_t> codes;
  codes.reserve(total);
  const int m = fam.host().size();
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  while (true) {
    codes.push_back(fam.encode(tuple));
    int pos = n - 1;
    while (pos >= 0 && ++tuple[pos] == m) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(codes.begin(), codes.end());
  fam.codes_ = std::move(codes);
  return fam;
}

bool ProductFamily::contains(std::uint64_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::uint64_t ProductFamily::encode(const std::vector<int>& index_tuple) const {
  if (static_cast<int>(index_tuple.size()) != n_)
    throw ValidationError("point has " + std::to_string(index_tuple.size()) +
                          " coordinates, expected " + std::to_string(n_));
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i) {
    int idx = index_tuple[i];
    if (idx < 0 || idx >= host_.size()) throw ValidationError("coordinate element index out of range");
    code = (code << coord_bits_) | static_cast<std::uint64_t>(idx);
  }
  return code;
}

std::vector<int> ProductFamily::decode(std::uint64_t code) const {
  std::vector<int> tuple(static_cast<std::size_t>(n_));
  const std::uint64_t mask = (std::uint64_t{1} << coord_bits_) - 1;
  for (int i = n_ - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(code & mask);
    if (tuple[i] >= host_.size()) throw ValidationError("family code holds an out-of-range coordinate");
    code >>= coord_bits_;
  }
  if (code != 0) throw ValidationError("family code wider than n coordinates");
  return tuple;
}

int ProductFamily::coord_index(std::uint64_t code, int coord) const {
  const std::uint64_t mask = (std::uint64_t{1} << coord_bits_) - 1;
  return static_cast<int>((code >> (coord_bits_ * (n_ - 1 - coord))) & mask);
}

std::uint64_t ProductFamily::with_coord(std::uint64_t code, int coord, int new_index) const {
  const int shift = coord_bits_ * (n_ - 1 - coord);
  const std::uint64_t mask = ((std::uint64_t{1} << coord_bits_) - 1) << shift;
  return (code & ~mask) | (static_cast<std::uint64_t>(new_index) << shift);
}

std::vector<int> ProductFamily::point_ids(std::uint64_t code) const {
  std::vector<int> tuple = decode(code);
  std::vector<int> ids(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) ids[i] = host_.id_at(tuple[i]);
  return ids;
}

bool ProductFamily::same_context(const ProductFamily& other) const {
  return space_ == other.space_ && k_ == other.k_ && n_ == other.n_ && host_ == other.host_;
}

std::uint64_t ProductFamily::space_size() const {
  std::uint64_t total = 1;
  for (int i = 0; i < n_; ++i) total *= static_cast<std::uint64_t>(host_.size());
  return total;
}

ProductFamily family_up_closure(const ProductFamily& fam, std::uint64_t budget) {
  if (fam.size() > budget)
    throw BudgetError("up-closure exceeds budget " + std::to_string(budget));
  std::unordered_set<std::uint64_t> closed(fam.codes().begin(), fam.codes().end());
  std::vector<std::uint64_t> frontier(fam.codes());
  const Poset& host = fam.host();
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : frontier) {
      for (int coord = 0; coord < fam.n(); ++coord) {
        const int idx = fam.coord_index(code, coord);
        std::uint64_t ups = host.up_row(idx) & ~(std::uint64_t{1} << idx);
        while (ups) {
          const int j = std::countr_zero(ups);
          ups &= ups - 1;
          const std::uint64_t raised = fam.with_coord(code, coord, j);
          if (closed.insert(raised).second) {
            if (closed.size() > budget)
              throw BudgetError("up-closure exceeds budget " + std::to_string(budget));
            next.push_back(raised);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return ProductFamily::from_codes(fam.space(), fam.k(), fam.n(),
                                   fam.host(), {closed.begin(), closed.end()});
}

bool family_is_up_set(const ProductFamily& fam) {
  const Poset& host = fam.host();
  for (std::uint64_t code : fam.codes()) {
    for (int coord = 0; coord < fam.n(); ++coord) {
      const int idx = fam.coord_index(code, coord);
      std::uint64_t ups = host.up_row(idx) & ~(std::uint64_t{1} << idx);
      while (ups) {
        const int j = std::countr_zero(ups);
        ups &= ups - 1;
        if (!fam.contains(fam.with_coord(code, coord, j))) return false;
      }
    }
  }
  return true;
}

}  // namespace coverlab
