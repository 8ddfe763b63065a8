#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coverlab/covering.hpp"
#include "coverlab/family.hpp"
#include "coverlab/rng.hpp"

using namespace coverlab;

namespace {

ProductFamily random_cover_subset(const CoveringPoset& cov, int n, SplitMix64& rng,
                                  double density) {
  ProductFamily all = ProductFamily::full_space(Space::cover, cov.k, n, cov.poset);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code : all.codes())
    if (rng.next_unit() < density) codes.push_back(code);
  return ProductFamily::from_codes(Space::cover, cov.k, n, cov.poset, std::move(codes));
}

}  // namespace

TEST_CASE("encode/decode round trip covers the whole space") {
  CoveringPoset cov = build_covering(3);
  ProductFamily all = ProductFamily::full_space(Space::cover, 3, 2, cov.poset);
  CHECK(all.size() == 36);
  for (std::uint64_t code : all.codes()) {
    CHECK(all.encode(all.decode(code)) == code);
    CHECK(all.contains(code));
  }
}

TEST_CASE("codes sort lexicographically by coordinate tuples") {
  CoveringPoset cov = build_covering(3);
  ProductFamily all = ProductFamily::full_space(Space::cover, 3, 2, cov.poset);
  std::vector<int> previous;
  for (std::uint64_t code : all.codes()) {
    std::vector<int> tuple = all.decode(code);
    if (!previous.empty()) CHECK(std::lexicographical_compare(previous.begin(), previous.end(),
                                                              tuple.begin(), tuple.end()));
    previous = tuple;
  }
}

TEST_CASE("from_index_tuples dedupes and validates") {
  Poset host = base_poset(3);
  ProductFamily fam = ProductFamily::from_index_tuples(Space::base, 3, 2, host,
                                                       {{0, 1}, {0, 1}, {2, 2}});
  CHECK(fam.size() == 2);
  CHECK_THROWS_AS(ProductFamily::from_index_tuples(Space::base, 3, 2, host, {{0, 3}}),
                  ValidationError);
  CHECK_THROWS_AS(ProductFamily::from_index_tuples(Space::base, 3, 2, host, {{0}}),
                  ValidationError);
}

TEST_CASE("coordinate accessors agree with decode") {
  CoveringPoset cov = build_covering(4);
  ProductFamily all = ProductFamily::full_space(Space::cover, 4, 2, cov.poset);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t code = all.codes()[rng.next_below(all.size())];
    std::vector<int> tuple = all.decode(code);
    for (int i = 0; i < all.n(); ++i) {
      CHECK(all.coord_index(code, i) == tuple[i]);
      const int replacement = static_cast<int>(rng.next_below(cov.poset.size()));
      std::vector<int> changed = tuple;
      changed[i] = replacement;
      CHECK(all.with_coord(code, i, replacement) == all.encode(changed));
    }
  }
}

TEST_CASE("product up-closure: idempotent, extensive, monotone") {
  CoveringPoset cov = build_covering(3);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    ProductFamily fam = random_cover_subset(cov, 2, rng, 0.15);
    ProductFamily closed = family_up_closure(fam);
    CHECK(family_is_up_set(closed));
    CHECK(closed.size() >= fam.size());
    for (std::uint64_t code : fam.codes()) CHECK(closed.contains(code));
    ProductFamily twice = family_up_closure(closed);
    CHECK(twice.codes() == closed.codes());
    // monotone: closing a subfamily stays inside
    std::vector<std::uint64_t> half(fam.codes().begin(),
                                    fam.codes().begin() + fam.codes().size() / 2);
    ProductFamily sub = ProductFamily::from_codes(Space::cover, 3, 2, cov.poset, half);
    ProductFamily sub_closed = family_up_closure(sub);
    for (std::uint64_t code : sub_closed.codes()) CHECK(closed.contains(code));
  }
}

TEST_CASE("family_is_up_set detects closure fixed points exactly") {
  CoveringPoset cov = build_covering(3);
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    ProductFamily fam = random_cover_subset(cov, 2, rng, 0.3);
    ProductFamily closed = family_up_closure(fam);
    CHECK(family_is_up_set(fam) == (closed.codes() == fam.codes()));
  }
}

TEST_CASE("closure of the embedded dictator family in W_3^2 has 18 points") {
  CoveringPoset cov = build_covering(3);
  // base dictator x_1 = 1 embeds to x_1 = {1}; closure frees x_2 over all of
  // W and lifts x_1 over the three elements above {1}
  std::vector<std::vector<int>> tuples;
  for (int second = 0; second < 3; ++second) tuples.push_back({0, second});
  ProductFamily base = ProductFamily::from_index_tuples(Space::base, 3, 2, base_poset(3), tuples);
  ProductFamily closed = family_up_closure(embed(cov, base));
  CHECK(closed.size() == 18);
}

TEST_CASE("up-closure budget fails fast") {
  CoveringPoset cov = build_covering(3);
  ProductFamily all = ProductFamily::full_space(Space::cover, 3, 2, cov.poset);
  CHECK_THROWS_AS(family_up_closure(all, 10), BudgetError);
}

TEST_CASE("context checks") {
  CoveringPoset cov = build_covering(3);
  ProductFamily a(Space::cover, 3, 2, cov.poset);
  ProductFamily b(Space::cover, 3, 3, cov.poset);
  ProductFamily c(Space::base, 3, 2, base_poset(3));
  CHECK(a.same_context(a));
  CHECK_FALSE(a.same_context(b));
  CHECK_FALSE(a.same_context(c));
}

TEST_CASE("space parsing") {
  CHECK(parse_space("base") == Space::base);
  CHECK(parse_space("cover") == Space::cover);
  CHECK_THROWS_AS(parse_space("middle"), ValidationError);
}
