#include "coverlab/covering.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "coverlab/rng.hpp"

namespace coverlab {

Measure CoveringPoset::mu_half() const { return interpolation().at(rat(1, 2)); }

CoveringPoset build_covering(int k) {
  if (k <= 2)
    throw DegenerateError("covering poset needs k >= 3 (for k = 2 the layers coincide and "
                          "domination strength is 0)");
  if (k > 20) throw ValidationError("covering poset limited to k <= 20");
  std::vector<int> masks;
  masks.reserve(2 * k);
  const int full = (1 << k) - 1;
  for (int i = 0; i < k; ++i) masks.push_back(1 << i);           // singletons, ascending
  std::vector<int> tops;
  for (int i = 0; i < k; ++i) tops.push_back(full ^ (1 << i));   // co-singletons
  std::sort(tops.begin(), tops.end());
  masks.insert(masks.end(), tops.begin(), tops.end());

  Poset poset = Poset::subset_order(masks);
  const std::uint64_t bottom_layer = (std::uint64_t{1} << k) - 1;  // indexes 0..k-1
  const std::uint64_t top_layer = bottom_layer << k;
  Measure mu0 = Measure::uniform_on(poset, bottom_layer);
  Measure mu1 = Measure::uniform_on(poset, top_layer);
  return CoveringPoset{k, std::move(poset), std::move(mu0), std::move(mu1)};
}

Poset base_poset(int k) {
  if (k < 1) throw ValidationError("base alphabet needs k >= 1");
  if (k > 20) throw ValidationError("base alphabet limited to k <= 20");
  std::vector<int> masks;
  for (int i = 0; i < k; ++i) masks.push_back(1 << i);
  return Poset::subset_order(masks);
}

ProductFamily empty_family(const CoveringPoset& cov, Space space, int n) {
  return ProductFamily(space, cov.k, n,
                       space == Space::base ? base_poset(cov.k) : cov.poset);
}

ProductFamily embed(const CoveringPoset& cov, const ProductFamily& base_fam) {
  if (base_fam.space() != Space::base)
    throw ValidationError("embed expects a base-space family");
  if (base_fam.k() != cov.k)
    throw ValidationError("embed: family alphabet k does not match the covering poset");
  ProductFamily out(Space::cover, cov.k, base_fam.n(), cov.poset);
  std::vector<std::uint64_t> codes;
  codes.reserve(base_fam.size());
  // singleton i sits at index i in both hosts
  for (std::uint64_t code : base_fam.codes()) codes.push_back(out.encode(base_fam.decode(code)));
  return ProductFamily::from_codes(Space::cover, cov.k, base_fam.n(), cov.poset, std::move(codes));
}

ProductFamily project_to_base(const ProductFamily& cover_fam) {
  if (cover_fam.space() != Space::cover)
    throw ValidationError("project_to_base expects a cover-space family");
  const int k = cover_fam.k();
  Poset base = base_poset(k);
  ProductFamily out(Space::base, k, cover_fam.n(), base);
  std::vector<std::uint64_t> codes;
  codes.reserve(cover_fam.size());
  for (std::uint64_t code : cover_fam.codes()) {
    std::vector<int> tuple = cover_fam.decode(code);
    for (int idx : tuple)
      if (idx >= k)
        throw ValidationError("projection hit a co-singleton coordinate; family is not embedded");
    codes.push_back(out.encode(tuple));
  }
  return ProductFamily::from_codes(Space::base, k, cover_fam.n(), std::move(base), std::move(codes));
}

std::vector<int> complement_point_ids(int k, const std::vector<int>& mask_ids) {
  const int full = (1 << k) - 1;
  std::vector<int> out(mask_ids.size());
  for (std::size_t i = 0; i < mask_ids.size(); ++i) out[i] = full ^ mask_ids[i];
  return out;
}

std::uint64_t complement_code(const ProductFamily& cover_fam, std::uint64_t code) {
  const Poset& host = cover_fam.host();
  const int full = (1 << cover_fam.k()) - 1;
  std::vector<int> tuple = cover_fam.decode(code);
  for (int& idx : tuple) idx = host.index_of(full ^ host.id_at(idx));
  return cover_fam.encode(tuple);
}

ProductFamily complement_family(const ProductFamily& cover_fam) {
  if (cover_fam.space() != Space::cover)
    throw ValidationError("complement expects a cover-space family");
  std::vector<std::uint64_t> codes;
  codes.reserve(cover_fam.size());
  for (std::uint64_t code : cover_fam.codes()) codes.push_back(complement_code(cover_fam, code));
  return ProductFamily::from_codes(cover_fam.space(), cover_fam.k(), cover_fam.n(),
                                   cover_fam.host(), std::move(codes));
}

bool points_intersect(const std::vector<int>& x_mask_ids, const std::vector<int>& y_mask_ids) {
  if (x_mask_ids.size() != y_mask_ids.size())
    throw ValidationError("intersection test on points of different dimension");
  for (std::size_t i = 0; i < x_mask_ids.size(); ++i)
    if (x_mask_ids[i] & y_mask_ids[i]) return true;
  return false;
}

namespace {

// Flat per-point mask arrays for the pairwise loops.
std::vector<int> flatten_masks(const ProductFamily& fam) {
  std::vector<int> flat;
  flat.reserve(fam.size() * fam.n());
  for (std::uint64_t code : fam.codes())
    for (int id : fam.point_ids(code)) flat.push_back(id);
  return flat;
}

bool rows_intersect(const std::vector<int>& flat, int n, std::size_t a, std::size_t b) {
  const int* x = flat.data() + a * n;
  const int* y = flat.data() + b * n;
  for (int i = 0; i < n; ++i)
    if (x[i] & y[i]) return true;
  return false;
}

}  // namespace

bool is_intersecting_family(const ProductFamily& fam) {
  const std::size_t count = fam.size();
  if (count < 2) return true;
  const std::vector<int> flat = flatten_masks(fam);
  for (std::size_t a = 0; a + 1 < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (!rows_intersect(flat, fam.n(), a, b)) return false;
  return true;
}

HalfMeasureCheck half_measure_check(const ProductFamily& cover_fam, std::uint64_t budget) {
  if (cover_fam.space() != Space::cover)
    throw ValidationError("half-measure check expects a cover-space family");
  HalfMeasureCheck result;

  // A point and its pointwise complement are coordinate-disjoint, so an
  // intersecting family can contain at most one of each pair; this alone
  // certifies uniform measure <= 1/2.
  for (std::uint64_t code : cover_fam.codes())
    if (cover_fam.contains(complement_code(cover_fam, code)))
      throw ValidationError("family is not intersecting: contains a point and its complement");
  result.complement_free = true;

  const std::uint64_t pair_cost =
      cover_fam.size() * cover_fam.size() * static_cast<std::uint64_t>(cover_fam.n());
  if (cover_fam.size() < 2 || pair_cost <= budget) {
    if (!is_intersecting_family(cover_fam))
      throw ValidationError("family is not intersecting");
    result.pairwise_validated = true;
  }

  // mu_{1/2} is uniform on W_k, so the product measure of the family is
  // |F| / (2k)^n
  CoveringPoset cov = build_covering(cover_fam.k());
  Measure half = cov.mu_half();
  for (int i = 0; i < cov.poset.size(); ++i)
    if (half.mass_at(i) != half.mass_at(0))
      throw Error("internal: midpoint measure is not uniform");
  Rat point_mass = 1;
  for (int i = 0; i < cover_fam.n(); ++i) point_mass *= half.mass_at(0);
  result.measure = Rat(static_cast<unsigned long>(cover_fam.size())) * point_mass;
  result.ok = result.measure <= rat(1, 2);
  return result;
}

ProductFamily greedy_maximal_intersecting(const CoveringPoset& cov, int n, std::uint64_t seed,
                                          std::uint64_t budget) {
  ProductFamily all = ProductFamily::full_space(Space::cover, cov.k, n, cov.poset, budget);
  std::vector<std::uint64_t> order(all.codes());
  SplitMix64 rng(seed);
  deterministic_shuffle(order, rng);

  std::vector<std::uint64_t> chosen;
  std::vector<std::vector<int>> chosen_masks;
  for (std::uint64_t code : order) {
    std::vector<int> masks = all.point_ids(code);
    bool compatible = true;
    for (const auto& other : chosen_masks)
      if (!points_intersect(masks, other)) {
        compatible = false;
        break;
      }
    if (compatible) {
      chosen.push_back(code);
      chosen_masks.push_back(std::move(masks));
    }
  }
  return ProductFamily::from_codes(Space::cover, cov.k, n, cov.poset, std::move(chosen));
}

ProductFamily random_up_set_family(const CoveringPoset& cov, int n, std::uint64_t seed,
                                   std::uint64_t budget) {
  ProductFamily all = ProductFamily::full_space(Space::cover, cov.k, n, cov.poset, budget);
  static constexpr double kDensities[] = {0.02, 0.05, 0.10, 0.20, 0.35};
  SplitMix64 rng(seed);
  const double density = kDensities[seed % 5];
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t code : all.codes())
    if (rng.next_unit() < density) seeds.push_back(code);
  ProductFamily seeded =
      ProductFamily::from_codes(Space::cover, cov.k, n, cov.poset, std::move(seeds));
  return family_up_closure(seeded, budget);
}

namespace {

int parse_cover_coordinate(const std::string& token, int k, const std::string& origin) {
  int mask = 0;
  std::stringstream ss(token);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int v = std::stoi(part);
    if (v < 1 || v > k) throw ValidationError(origin + ": coordinate symbol out of range: " + part);
    mask |= 1 << (v - 1);
  }
  const int pc = std::popcount(static_cast<unsigned>(mask));
  if (pc != 1 && pc != k - 1)
    throw ValidationError(origin + ": cover coordinate must be a singleton or co-singleton: " + token);
  return mask;
}

std::string format_mask(int mask) {
  std::string out;
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1) {
      if (!out.empty()) out += ',';
      out += std::to_string(i + 1);
    }
  return out;
}

}  // namespace

ProductFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open family file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty family file");
  std::istringstream hs(line);
  std::string tag, kf, nf, sf;
  hs >> tag >> kf >> nf >> sf;
  if (tag != "family" || kf.rfind("k=", 0) != 0 || nf.rfind("n=", 0) != 0 ||
      sf.rfind("space=", 0) != 0)
    throw ValidationError(path + ": expected header 'family k=<k> n=<n> space=<base|cover>'");
  const int k = std::stoi(kf.substr(2));
  const int n = std::stoi(nf.substr(2));
  const Space space = parse_space(sf.substr(6));

  Poset host = space == Space::base ? base_poset(k) : build_covering(k).poset;
  ProductFamily shape(space, k, n, host);
  std::vector<std::uint64_t> codes;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (static_cast<int>(toks.size()) != n)
      throw ValidationError(path + ": point has " + std::to_string(toks.size()) +
                            " coordinates, expected " + std::to_string(n));
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int mask;
      if (space == Space::base) {
        const int v = std::stoi(toks[i]);
        if (v < 1 || v > k) throw ValidationError(path + ": base coordinate out of range: " + toks[i]);
        mask = 1 << (v - 1);
      } else {
        mask = parse_cover_coordinate(toks[i], k, path);
      }
      tuple[i] = host.index_of(mask);
    }
    codes.push_back(shape.encode(tuple));
  }
  return ProductFamily::from_codes(space, k, n, std::move(host), std::move(codes));
}

std::string format_point(const ProductFamily& fam, std::uint64_t code) {
  std::vector<int> ids = fam.point_ids(code);
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    if (fam.space() == Space::base)
      out += std::to_string(std::countr_zero(static_cast<unsigned>(ids[i])) + 1);
    else
      out += format_mask(ids[i]);
  }
  return out;
}

void save_family(const ProductFamily& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write family file: " + path);
  out << "family k=" << fam.k() << " n=" << fam.n() << " space=" << space_name(fam.space())
      << "\n";
  for (std::uint64_t code : fam.codes()) out << format_point(fam, code) << "\n";
  if (!out) throw ValidationError("failed writing family file: " + path);
}

}  // namespace coverlab
