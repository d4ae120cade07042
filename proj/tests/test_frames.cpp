#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/dispatcher.hpp"
#include "gdd/frames.hpp"

using namespace gdd;

TEST_CASE("frame pair construction across a small grid") {
  // The constructor machine-checks the three conditions internally and
  // throws when any fails; here we sweep a small grid.
  for (int g = 4; g <= 8; g += 2)
    for (int u = 0; u <= 2 * g; u += 2) {
      if (u == 0 && g == 6) continue;
      auto fp = frame_pair(g, u);
      CHECK(fp.pair_classes1.size() == (size_t)u);
      CHECK(fp.triple_classes1.size() == (size_t)(g - u / 2));
    }
  CHECK_THROWS_AS(frame_pair(2, 0), Error);
  CHECK_THROWS_AS(frame_pair(6, 0), Error);
}

TEST_CASE("common-class frame pairs share exactly one triple class") {
  auto fp = frame_pair_common_pc(2, 2);
  CHECK(fp.common_class.size() == 2);
  for (int g = 4; g <= 8; g += 2)
    for (int u = 2; u <= 2 * g - 2; u += 2) {
      auto f = frame_pair_common_pc(g, u);
      CHECK(f.common_class.size() == (size_t)g);
    }
}

TEST_CASE("three-group assembly via the one-factor extension") {
  Oracle o;
  Dispatcher disp(o);
  for (auto [g, u] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {2, 4}, {4, 8}, {6, 4}}) {
    auto p = construct_t3(g, 3, u, disp);
    CHECK(verify_disjoint_pair(p, GroupType::of(g, 3, u)).valid);
  }
}

TEST_CASE("kirkman-backed assembly for larger group counts") {
  Oracle o;
  Dispatcher disp(o);
  auto p = construct_t3(4, 9, 2, disp);
  CHECK(verify_disjoint_pair(p, GroupType::of(4, 9, 2)).valid);
  auto q = construct_t3(2, 9, 4, disp);
  CHECK(verify_disjoint_pair(q, GroupType::of(2, 9, 4)).valid);
}

TEST_CASE("pairs sharing one parallel class") {
  Oracle o;
  Dispatcher disp(o);
  for (auto [g, u] : std::vector<std::pair<int, int>>{{4, 0}, {4, 2}, {6, 4}, {4, 6}}) {
    auto gp = gdd_pair_common_pc(g, u, disp);
    CHECK(gp.common.size() == (size_t)g);
    // Both designs valid, and the intersection is exactly the common class.
    GroupType ty = GroupType::of(g, 3, u);
    CHECK(verify_gdd(gp.pair.first, ty).valid);
    CHECK(verify_gdd(gp.pair.second, ty).valid);
    std::set<Block> sa(gp.pair.first.blocks.begin(), gp.pair.first.blocks.end());
    std::set<Block> inter;
    for (auto& b : gp.pair.second.blocks)
      if (sa.count(b)) inter.insert(b);
    CHECK(inter == std::set<Block>(gp.common.begin(), gp.common.end()));
    // The common class partitions the frame points.
    std::set<int> pts;
    for (auto& b : gp.common)
      for (int p : b) CHECK(pts.insert(p).second);
    CHECK(pts.size() == (size_t)(3 * g));
  }
  CHECK_THROWS_AS(gdd_pair_common_pc(2, 0, disp), Error);
}
