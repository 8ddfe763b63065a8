#include "coverlab/family_lab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace coverlab {

void validate_group(const PermutationGroupSpec& group) {
  if (group.n < 1) throw ValidationError("permutation group needs n >= 1");
  for (const auto& perm : group.generators) {
    if (static_cast<int>(perm.size()) != group.n)
      throw ValidationError("generator has wrong length");
    std::vector<bool> hit(static_cast<std::size_t>(group.n), false);
    for (int image : perm) {
      if (image < 0 || image >= group.n || hit[image])
        throw ValidationError("generator is not a bijection on {1,...,n}");
      hit[image] = true;
    }
  }
}

bool group_is_transitive(const PermutationGroupSpec& group) {
  validate_group(group);
  // each generator has finite order, so closing under the generators alone
  // reaches the full group orbit
  std::vector<bool> reached(static_cast<std::size_t>(group.n), false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (const auto& perm : group.generators) {
      for (int next : {perm[c], static_cast<int>(std::find(perm.begin(), perm.end(), c) - perm.begin())}) {
        if (!reached[next]) {
          reached[next] = true;
          ++count;
          stack.push_back(next);
        }
      }
    }
  }
  return count == group.n;
}

PermutationGroupSpec cyclic_group(int n) {
  PermutationGroupSpec g{n, {{}}};
  g.generators[0].resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.generators[0][i] = (i + 1) % n;
  return g;
}

PermutationGroupSpec symmetric_group(int n) {
  PermutationGroupSpec g = cyclic_group(n);
  if (n >= 2) {
    std::vector<int> swap01(static_cast<std::size_t>(n));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    g.generators.push_back(std::move(swap01));
  }
  return g;
}

std::vector<int> permute_tuple(const std::vector<int>& perm, const std::vector<int>& tuple) {
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = tuple[perm[i]];
  return out;
}

PermutationGroupSpec parse_generators(const std::string& text, int n) {
  PermutationGroupSpec group{n, {}};
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::istringstream ps(part);
    std::vector<int> perm;
    int image;
    while (ps >> image) perm.push_back(image - 1);
    if (!perm.empty()) group.generators.push_back(std::move(perm));
  }
  validate_group(group);
  return group;
}

std::string format_generator(const std::vector<int>& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(perm[i] + 1);
  }
  return out;
}

void validate_set_family(const SetFamily& fam) {
  if (fam.n < 1) throw ValidationError("block family needs n >= 1");
  for (const auto& block : fam.blocks) {
    if (block.empty()) throw ValidationError("block family has an empty block");
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= fam.n) throw ValidationError("block point out of range");
      if (i > 0 && block[i] <= block[i - 1]) throw ValidationError("block must be strictly sorted");
    }
  }
}

bool set_family_intersecting(const SetFamily& fam) {
  validate_set_family(fam);
  for (std::size_t a = 0; a + 1 < fam.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < fam.blocks.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(fam.blocks[a].begin(), fam.blocks[a].end(), fam.blocks[b].begin(),
                            fam.blocks[b].end(), std::back_inserter(common));
      if (common.empty()) return false;
    }
  return true;
}

SetFamily singer_difference_set(int q) {
  std::vector<int> base;
  switch (q) {
    case 2: base = {1, 2, 4}; break;          // mod 7
    case 3: base = {0, 1, 3, 9}; break;       // mod 13
    case 4: base = {0, 1, 4, 14, 16}; break;  // mod 21
    default:
      throw ValidationError("perfect difference sets are provided for q in {2, 3, 4}");
  }
  const int n = q * q + q + 1;

  // every nonzero residue mod n must arise exactly once as a difference
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int a : base)
    for (int b : base)
      if (a != b) ++hits[((a - b) % n + n) % n];
  for (int r = 1; r < n; ++r)
    if (hits[r] != 1) throw Error("internal: difference-set table for q=" + std::to_string(q) + " is broken");

  SetFamily fam{n, {}};
  for (int shift = 0; shift < n; ++shift) {
    std::vector<int> block;
    for (int d : base) block.push_back((d + shift) % n);
    std::sort(block.begin(), block.end());
    fam.blocks.push_back(std::move(block));
  }
  validate_set_family(fam);
  return fam;
}

SetFamily load_set_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open block file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty block file");
  std::istringstream hs(line);
  std::string tag, nf;
  hs >> tag >> nf;
  if (tag != "blocks" || nf.rfind("n=", 0) != 0)
    throw ValidationError(path + ": expected header 'blocks n=<n>'");
  SetFamily fam{std::stoi(nf.substr(2)), {}};
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> block;
    int v;
    while (ls >> v) block.push_back(v - 1);
    if (block.empty()) continue;
    std::sort(block.begin(), block.end());
    fam.blocks.push_back(std::move(block));
  }
  validate_set_family(fam);
  return fam;
}

void save_set_family(const SetFamily& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write block file: " + path);
  out << "blocks n=" << fam.n << "\n";
  for (const auto& block : fam.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i] + 1;
    out << "\n";
  }
  if (!out) throw ValidationError("failed writing block file: " + path);
}

namespace {

std::uint64_t checked_power(int k, int n, std::uint64_t budget, const char* what) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > budget)
      throw BudgetError(std::string(what) + " needs k^n <= budget " + std::to_string(budget));
  }
  return total;
}

}  // namespace

ProductFamily dictator_family(int k, int n, int coord, int symbol, std::uint64_t budget) {
  if (coord < 0 || coord >= n) throw ValidationError("dictator coordinate out of range");
  if (symbol < 1 || symbol > k) throw ValidationError("dictator symbol out of range");
  checked_power(k, n - 1, budget, "dictator construction");
  Poset host = base_poset(k);
  ProductFamily shape(Space::base, k, n, host);
  std::vector<std::uint64_t> codes;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  tuple[coord] = symbol - 1;
  while (true) {
    codes.push_back(shape.encode(tuple));
    int pos = n - 1;
    if (pos == coord) --pos;
    while (pos >= 0) {
      if (++tuple[pos] < k) break;
      tuple[pos] = 0;
      --pos;
      if (pos == coord) --pos;
    }
    if (pos < 0) break;
  }
  return ProductFamily::from_codes(Space::base, k, n, std::move(host), std::move(codes));
}

ProductFamily majority_family(int n, std::uint64_t budget) {
  if (n % 2 == 0) throw ValidationError("majority family needs odd n (ties are undefined)");
  checked_power(2, n, budget, "majority construction");
  Poset host = base_poset(2);
  ProductFamily shape(Space::base, 2, n, host);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<int> tuple(static_cast<std::size_t>(n));
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      tuple[i] = static_cast<int>((bits >> i) & 1u);  // index 0 is symbol 1
      if (tuple[i] == 0) ++ones;
    }
    if (2 * ones > n) codes.push_back(shape.encode(tuple));
  }
  return ProductFamily::from_codes(Space::base, 2, n, std::move(host), std::move(codes));
}

ProductFamily full_cube_family(int k, int n, std::uint64_t budget) {
  return ProductFamily::full_space(Space::base, k, n, base_poset(k), budget);
}

ProductFamily set_intersecting_family(const SetFamily& blocks, int symbol, int k,
                                      std::uint64_t budget, bool strict) {
  validate_set_family(blocks);
  if (symbol < 1 || symbol > k) throw ValidationError("symbol out of range");
  if (strict && !set_family_intersecting(blocks))
    throw ValidationError("block family is not intersecting");
  const int n = blocks.n;
  Poset host = base_poset(k);
  ProductFamily shape(Space::base, k, n, host);
  const int target = symbol - 1;

  std::vector<std::uint64_t> codes;
  std::uint64_t scan_cost = 1;
  bool scan_fits = true;
  for (int i = 0; i < n && scan_fits; ++i) {
    scan_cost *= static_cast<std::uint64_t>(k);
    if (scan_cost > budget) scan_fits = false;
  }
  if (scan_fits) {
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    while (true) {
      for (const auto& block : blocks.blocks) {
        bool constant = true;
        for (int i : block)
          if (tuple[i] != target) {
            constant = false;
            break;
          }
        if (constant) {
          codes.push_back(shape.encode(tuple));
          break;
        }
      }
      int pos = n - 1;
      while (pos >= 0 && ++tuple[pos] == k) tuple[pos--] = 0;
      if (pos < 0) break;
    }
  } else {
    // generate per block: fix the block to the symbol, run free coordinates
    std::set<std::uint64_t> seen;
    for (const auto& block : blocks.blocks) {
      std::vector<int> free_coords;
      for (int i = 0; i < n; ++i)
        if (std::find(block.begin(), block.end(), i) == block.end()) free_coords.push_back(i);
      std::uint64_t block_points = 1;
      for (std::size_t i = 0; i < free_coords.size(); ++i) {
        block_points *= static_cast<std::uint64_t>(k);
        if (block_points > budget || seen.size() + block_points > budget)
          throw BudgetError("set-intersecting construction exceeds budget");
      }
      std::vector<int> tuple(static_cast<std::size_t>(n), 0);
      for (int i : block) tuple[i] = target;
      while (true) {
        seen.insert(shape.encode(tuple));
        if (seen.size() > budget) throw BudgetError("set-intersecting construction exceeds budget");
        int pos = static_cast<int>(free_coords.size()) - 1;
        while (pos >= 0 && ++tuple[free_coords[pos]] == k) tuple[free_coords[pos--]] = 0;
        if (pos < 0) break;
      }
    }
    codes.assign(seen.begin(), seen.end());
  }
  return ProductFamily::from_codes(Space::base, k, n, std::move(host), std::move(codes));
}

std::pair<std::uint64_t, Rat> family_size_and_density(const ProductFamily& fam) {
  Int space = int_pow(static_cast<unsigned long>(fam.host().size()), static_cast<unsigned>(fam.n()));
  Rat density(Int(static_cast<unsigned long>(fam.size())), space);
  density.canonicalize();
  return {fam.size(), density};
}

ProductFamily apply_permutation_to_family(const ProductFamily& fam, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != fam.n())
    throw ValidationError("permutation length does not match family dimension");
  std::vector<std::uint64_t> codes;
  codes.reserve(fam.size());
  for (std::uint64_t code : fam.codes())
    codes.push_back(fam.encode(permute_tuple(perm, fam.decode(code))));
  return ProductFamily::from_codes(fam.space(), fam.k(), fam.n(), fam.host(), std::move(codes));
}

SymmetryCheck is_symmetric(const ProductFamily& fam, const PermutationGroupSpec& group) {
  validate_group(group);
  if (group.n != fam.n())
    throw ValidationError("group degree does not match family dimension");
  SymmetryCheck out;
  out.invariant = true;
  for (const auto& perm : group.generators) {
    for (std::uint64_t code : fam.codes()) {
      if (!fam.contains(fam.encode(permute_tuple(perm, fam.decode(code))))) {
        out.invariant = false;
        break;
      }
    }
    if (!out.invariant) break;
  }
  out.transitive = group_is_transitive(group);
  return out;
}

double log_k_deficiency(const ProductFamily& fam) {
  if (fam.empty()) throw ValidationError("deficiency undefined for the empty family");
  // measured against the full alphabet size of the family's own space
  const double logk = std::log(static_cast<double>(fam.host().size()));
  return static_cast<double>(fam.n()) - std::log(static_cast<double>(fam.size())) / logk;
}

}  // namespace coverlab
