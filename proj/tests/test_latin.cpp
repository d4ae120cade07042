#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/latin.hpp"
#include "test_util.hpp"

using namespace gdd;

TEST_CASE("idempotent squares across small orders") {
  CHECK(idempotent_ls(1).cells == std::vector<std::vector<int>>{{0}});
  CHECK_THROWS_AS(idempotent_ls(2), Error);
  auto l3 = idempotent_ls(3);
  CHECK(l3.cells == std::vector<std::vector<int>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  for (int t : {4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15}) {
    auto L = idempotent_ls(t);
    CHECK(L.is_latin());
    CHECK(L.is_idempotent());
  }
}

TEST_CASE("MOLS triples are orthogonal where supported") {
  for (int t : {4, 5, 7, 8, 9, 11, 12}) {
    auto m = three_mols(t);
    for (int i = 0; i < 3; ++i) CHECK(m[i].is_latin());
    CHECK(orthogonal(m[0], m[1]));
    CHECK(orthogonal(m[0], m[2]));
    CHECK(orthogonal(m[1], m[2]));
  }
  CHECK_THROWS_AS(three_mols(6), Error);
  CHECK_THROWS_AS(three_mols(10), Error);
}

TEST_CASE("MOLS pair exists at order 10") {
  auto [a, b] = mols_pair(10);
  CHECK(a.is_latin());
  CHECK(b.is_latin());
  CHECK(orthogonal(a, b));
  CHECK_THROWS_AS(mols_pair(6), Error);
}

TEST_CASE("disjoint idempotent pairs disagree off the diagonal") {
  for (int t : {4, 5, 6, 7, 9, 12}) {
    auto [a, b] = disjoint_idempotent_ls_pair(t);
    CHECK(a.is_idempotent());
    CHECK(b.is_idempotent());
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (i != j) CHECK(a.cells[i][j] != b.cells[i][j]);
  }
  CHECK_THROWS_AS(disjoint_idempotent_ls_pair(3), Error);
}

TEST_CASE("disjoint ITD pairs") {
  for (int t = 4; t <= 12; ++t) {
    auto [a, b] = disjoint_itd_pair(t, false);
    CHECK(a.base.blocks.size() == (size_t)(t * t - t));
    CHECK(blocks_disjoint(a.base, b.base));
    auto repa = verify_partial_gdd(a.base);
    CHECK(repa.valid);
    // The leave is exactly the idempotent class's pair set.
    CHECK(repa.leave.edges.size() == (size_t)(3 * t));
  }
  CHECK_THROWS_AS(disjoint_itd_pair(3, false), Error);

  auto [a, b] = disjoint_itd_pair(4, true);
  CHECK(verify_gdd(a.base, GroupType::of(4, 3, 0)).valid);
  CHECK(gdd::testutil::brute_force_gdd(b.base));
  Block shared;
  CHECK(!blocks_disjoint(a.base, b.base, &shared));
  std::set<Block> inter;
  std::set<Block> sa(a.base.blocks.begin(), a.base.blocks.end());
  for (auto& blk : b.base.blocks)
    if (sa.count(blk)) inter.insert(blk);
  CHECK(inter.size() == 4);  // exactly the idempotent class
}

TEST_CASE("disjoint RITD pairs resolve with a shared idempotent class") {
  for (int t : {4, 5, 7, 8, 9, 11, 12}) {
    auto [a, b] = disjoint_ritd_pair(t);
    REQUIRE(a.parallel_classes.size() == (size_t)t);
    REQUIRE(b.parallel_classes.size() == (size_t)t);
    CHECK(a.parallel_classes[0] == b.parallel_classes[0]);
    std::set<Block> all_a;
    for (int k = 0; k < t; ++k) {
      std::set<int> pts;
      for (auto& blk : a.parallel_classes[k])
        for (int p : blk) CHECK(pts.insert(p).second);
      CHECK(pts.size() == (size_t)(3 * t));
      for (auto& blk : a.parallel_classes[k]) CHECK(all_a.insert(blk).second);
      if (k > 0) {
        std::set<Block> ka(a.parallel_classes[k].begin(), a.parallel_classes[k].end());
        for (auto& blk : b.parallel_classes[k]) CHECK(!ka.count(blk));
      }
    }
    CHECK(all_a.size() == (size_t)(t * t));
    CHECK(verify_gdd(a.base, GroupType::of(t, 3, 0)).valid);
    CHECK(verify_gdd(b.base, GroupType::of(t, 3, 0)).valid);
  }
  CHECK_THROWS_AS(disjoint_ritd_pair(6), Error);
  CHECK_THROWS_AS(disjoint_ritd_pair(10), Error);
}
