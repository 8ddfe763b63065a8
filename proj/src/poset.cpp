#include "coverlab/poset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace coverlab {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

Poset::Poset(std::vector<int> ids, std::vector<std::uint64_t> up)
    : ids_(std::move(ids)), up_(std::move(up)) {
  for (int i = 0; i < size(); ++i) index_.emplace(ids_[i], i);
  validate();
}

void Poset::validate() const {
  const int m = size();
  if (m > kMaxElements) throw ValidationError("poset exceeds " + std::to_string(kMaxElements) + " elements");
  if (static_cast<int>(index_.size()) != m) throw ValidationError("poset has duplicate element identifiers");
  for (int i = 0; i < m; ++i) {
    if (!leq_index(i, i)) throw ValidationError("poset order is not reflexive");
    if (up_[i] >> m) throw ValidationError("poset bitrow refers to a missing element");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i != j && leq_index(i, j) && leq_index(j, i))
        throw ValidationError("poset order is not antisymmetric");
      // transitivity: everything above j must already be above i
      if (leq_index(i, j) && (up_[j] & ~up_[i]))
        throw ValidationError("poset order is not transitive");
    }
}

Poset Poset::subset_order(const std::vector<int>& mask_ids) {
  const int m = static_cast<int>(mask_ids.size());
  if (m > kMaxElements) throw ValidationError("poset exceeds 63 elements");
  std::vector<std::uint64_t> up(m, 0);
  for (int i = 0; i < m; ++i) {
    if (mask_ids[i] < 0) throw ValidationError("subset-order identifiers must be nonnegative masks");
    for (int j = 0; j < m; ++j)
      if ((mask_ids[i] & ~mask_ids[j]) == 0) up[i] |= bit(j);
  }
  return Poset(mask_ids, std::move(up));
}

Poset Poset::antichain(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  std::vector<std::uint64_t> up(m, 0);
  for (int i = 0; i < m; ++i) up[i] = bit(i);
  return Poset(ids, std::move(up));
}

Poset Poset::chain(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  std::vector<std::uint64_t> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) up[i] |= bit(j);
  return Poset(ids, std::move(up));
}

Poset Poset::from_relations(const std::vector<int>& ids,
                            const std::vector<std::pair<int, int>>& below_above) {
  const int m = static_cast<int>(ids.size());
  if (m > kMaxElements) throw ValidationError("poset exceeds 63 elements");
  std::unordered_map<int, int> index;
  for (int i = 0; i < m; ++i)
    if (!index.emplace(ids[i], i).second) throw ValidationError("poset has duplicate element identifiers");
  std::vector<std::uint64_t> up(m, 0);
  for (int i = 0; i < m; ++i) up[i] = bit(i);
  for (const auto& [a, b] : below_above) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw ValidationError("relation refers to an undeclared element");
    up[ia->second] |= bit(ib->second);
  }
  // Warshall-style transitive closure over the bitrows.
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if ((up[i] >> j) & 1u) up[i] |= up[j];
  return Poset(ids, std::move(up));
}

int Poset::id_at(int index) const {
  if (index < 0 || index >= size()) throw ValidationError("element index out of range");
  return ids_[index];
}

int Poset::index_of(int id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw ValidationError("element " + std::to_string(id) + " is not in the poset");
  return it->second;
}

std::uint64_t Poset::full_subset() const {
  return size() == 0 ? 0 : (size() == 64 ? ~std::uint64_t{0} : (bit(size()) - 1));
}

std::uint64_t Poset::subset_from_ids(const std::vector<int>& members) const {
  std::uint64_t bits = 0;
  for (int id : members) bits |= bit(index_of(id));
  return bits;
}

std::vector<int> Poset::ids_from_subset(std::uint64_t bits) const {
  if (bits & ~full_subset()) throw ValidationError("subset mask refers to a missing element");
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if ((bits >> i) & 1u) out.push_back(ids_[i]);
  return out;
}

bool Poset::is_up_set(std::uint64_t bits) const {
  if (bits & ~full_subset()) throw ValidationError("subset mask refers to a missing element");
  for (int i = 0; i < size(); ++i)
    if (((bits >> i) & 1u) && (up_[i] & ~bits)) return false;
  return true;
}

std::uint64_t Poset::up_closure(std::uint64_t bits) const {
  if (bits & ~full_subset()) throw ValidationError("subset mask refers to a missing element");
  std::uint64_t out = 0;
  for (int i = 0; i < size(); ++i)
    if ((bits >> i) & 1u) out |= up_[i];
  return out;
}

std::vector<std::uint64_t> Poset::enumerate_up_sets(std::uint64_t budget) const {
  const int m = size();
  if (m > 62 || (std::uint64_t{1} << m) > budget)
    throw BudgetError("up-set enumeration over 2^" + std::to_string(m) +
                      " subsets exceeds budget " + std::to_string(budget));
  std::vector<std::uint64_t> out;
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < end; ++s)
    if (is_up_set(s)) out.push_back(s);
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Poset parse_poset(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(origin + ": empty poset file");
  auto header = tokenize(line);
  if (header.size() != 2 || header[0] != "poset")
    throw ValidationError(origin + ": expected header 'poset <m>'");
  const int m = std::stoi(header[1]);

  std::vector<int> ids;
  std::vector<int> masks;
  bool has_masks = false;
  std::vector<std::pair<int, int>> rels;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "id") {
      if (toks.size() == 4 && toks[2] == "mask") {
        ids.push_back(std::stoi(toks[1]));
        masks.push_back(static_cast<int>(std::stol(toks[3], nullptr, 16)));
        has_masks = true;
      } else if (toks.size() == 2) {
        ids.push_back(std::stoi(toks[1]));
        masks.push_back(-1);
      } else {
        throw ValidationError(origin + ": malformed id line: " + line);
      }
    } else if (toks.size() == 3 && toks[0] == "rel") {
      rels.emplace_back(std::stoi(toks[1]), std::stoi(toks[2]));
    } else {
      throw ValidationError(origin + ": unrecognized line: " + line);
    }
  }
  // rel lines may mention undeclared elements; declare them in order of appearance
  for (const auto& [a, b] : rels)
    for (int id : {a, b})
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        ids.push_back(id);
        masks.push_back(-1);
      }
  if (static_cast<int>(ids.size()) != m)
    throw ValidationError(origin + ": header count " + std::to_string(m) + " does not match " +
                          std::to_string(ids.size()) + " declared elements");
  if (has_masks) {
    if (!rels.empty()) throw ValidationError(origin + ": mask-encoded posets cannot carry rel lines");
    for (int mk : masks)
      if (mk < 0) throw ValidationError(origin + ": mask-encoded posets need a mask on every element");
    // order by mask inclusion, keep declared ids
    Poset by_mask = Poset::subset_order(masks);
    if (ids == masks) return by_mask;
    std::vector<std::uint64_t> up(m);
    for (int i = 0; i < m; ++i) up[i] = by_mask.up_row(i);
    return Poset::from_relations(ids, [&] {
      std::vector<std::pair<int, int>> r;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if ((up[i] >> j) & 1u) r.emplace_back(ids[i], ids[j]);
      return r;
    }());
  }
  return Poset::from_relations(ids, rels);
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open poset file: " + path);
  return parse_poset(in, path);
}

void save_poset(const Poset& poset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write poset file: " + path);
  const int m = poset.size();
  // use mask encoding when the identifiers themselves reproduce the order
  bool ids_are_masks = true;
  for (int i = 0; i < m && ids_are_masks; ++i) {
    if (poset.id_at(i) < 0) ids_are_masks = false;
    for (int j = 0; j < m && ids_are_masks; ++j)
      if (poset.leq_index(i, j) != ((poset.id_at(i) & ~poset.id_at(j)) == 0)) ids_are_masks = false;
  }
  out << "poset " << m << "\n";
  if (ids_are_masks) {
    for (int i = 0; i < m; ++i) {
      out << "id " << poset.id_at(i) << " mask " << std::hex << poset.id_at(i) << std::dec << "\n";
    }
  } else {
    for (int i = 0; i < m; ++i) out << "id " << poset.id_at(i) << "\n";
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && poset.leq_index(i, j))
          out << "rel " << poset.id_at(i) << " " << poset.id_at(j) << "\n";
  }
  if (!out) throw ValidationError("failed writing poset file: " + path);
}

}  // namespace coverlab
