#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "gdd/oracle.hpp"
#include "gdd/io.hpp"
#include "test_util.hpp"

using namespace gdd;

namespace {
std::string tmpdir() {
  auto p = std::filesystem::temp_directory_path() / "gdd-oracle-test";
  std::filesystem::remove_all(p);
  return p.string();
}
}  // namespace

TEST_CASE("steiner systems: direct constructions verify") {
  Oracle o;
  for (int v : {3, 7, 9, 13, 15, 19, 21, 25, 27}) {
    Design d = o.sts(v);
    CHECK(verify_gdd(d, GroupType::of(1, v, 0)).valid);
  }
  CHECK_THROWS_AS(o.sts(8), Error);
}

TEST_CASE("unique small system comes back verified via brute force") {
  Oracle o;
  Design d = o.sts(9);
  CHECK(testutil::brute_force_gdd(d));
  CHECK(d.blocks.size() == 12);
}

TEST_CASE("kirkman systems resolve") {
  Oracle o;
  for (int v : {3, 9, 15, 27}) {
    auto r = o.kts(v);
    CHECK(r.classes.size() == (size_t)((v - 1) / 2));
    CHECK(verify_gdd(r.design, GroupType::of(1, v, 0)).valid);
    for (auto& cls : r.classes) {
      std::set<int> pts;
      for (auto& b : cls) pts.insert(b.begin(), b.end());
      CHECK((int)pts.size() == v);
    }
  }
  CHECK_THROWS_AS(o.kts(7), Error);
}

TEST_CASE("disjoint pair of the smallest type refuses") {
  Oracle o;
  CHECK_THROWS_AS(o.pair_leaf(1, 3, 0), Error);
}

TEST_CASE("u = 0 pairs at several shapes") {
  Oracle o;
  for (auto [g, t] : std::vector<std::pair<int, int>>{{1, 7}, {1, 9}, {2, 3}, {3, 3},
                                                      {2, 4}, {2, 6}, {4, 4}, {3, 7}, {5, 7}}) {
    auto p = o.pair_leaf(g, t, 0);
    CHECK(verify_disjoint_pair(p, GroupType::of(g, t, 0)).valid);
  }
}

TEST_CASE("u = g pairs canonicalize to the extended type") {
  Oracle o;
  auto p = o.pair_leaf(4, 3, 4);  // the 4^4 split as 4^3 4^1
  CHECK(verify_disjoint_pair(p, GroupType::of(4, 3, 4)).valid);
  CHECK(p.first.groups.size() == 4);
}

TEST_CASE("small one-per-row families") {
  Oracle o;
  auto p = o.pair_leaf(1, 4, 3);
  CHECK(verify_disjoint_pair(p, GroupType::of(1, 4, 3)).valid);
  auto q = o.pair_leaf(1, 12, 7);
  CHECK(verify_disjoint_pair(q, GroupType::of(1, 12, 7)).valid);
}

TEST_CASE("transversal designs from fields") {
  Oracle o;
  auto d = o.td(4, 3);
  CHECK(verify_gdd(d, GroupType::from_sizes({3, 3, 3, 3}), {4}).valid);
  auto d7 = o.td(7, 7);
  CHECK(verify_gdd(d7, GroupType::from_sizes(std::vector<int>(7, 7)), {7}).valid);
}

TEST_CASE("pairwise balanced designs over both block-size menus") {
  Oracle o;
  for (int v : {5, 11, 17, 23}) {
    Design d = o.pbd(v, {3, 5});
    CHECK(verify_gdd(d, GroupType::of(1, v, 0), {3, 5}).valid);
  }
  for (int v : {4, 6, 10, 12, 16, 18, 22, 24}) {
    Design d = o.pbd(v, {3, 4, 6});
    CHECK(verify_gdd(d, GroupType::of(1, v, 0), {3, 4, 6}).valid);
  }
}

TEST_CASE("master families carry their certificates") {
  Oracle o;
  auto m1 = o.kgdd_master(1, 3);
  CHECK(verify_gdd(m1.design, GroupType::from_sizes({3, 3, 3, 3}), {4}).valid);
  auto m3 = o.kgdd_master(3, 0);
  CHECK(verify_gdd(m3.design, GroupType::from_sizes({3, 3, 3, 3, 3}), {4}).valid);
  auto m4 = o.kgdd_master(4, 4);
  CHECK(verify_gdd(m4.design, m4.design.type(), {3, 4}).valid);
  std::set<int> in3;
  for (auto& b : m4.design.blocks)
    if (b.size() == 3)
      for (int p : b)
        if (p >= 12) in3.insert(p);
  CHECK(in3 == std::set<int>{12, 13, 14});
}

TEST_CASE("cache round-trips and corrupted entries are evicted") {
  std::string dir = tmpdir();
  {
    Oracle o(dir);
    Design d = o.sts(13);
    CHECK(d.blocks.size() == 26);
  }
  {
    Oracle o(dir);
    Design d = o.sts(13);  // from disk
    CHECK(verify_gdd(d, GroupType::of(1, 13, 0)).valid);
    CHECK(o.stats().hits >= 1);
  }
  // Corrupt the entry: the oracle must evict and re-search.
  for (auto& e : std::filesystem::directory_iterator(dir))
    write_file(e.path().string(), "GDD n=13 type=1^13\nB: 0 1 2\n");
  {
    Oracle o(dir);
    Design d = o.sts(13);
    CHECK(verify_gdd(d, GroupType::of(1, 13, 0)).valid);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("search determinism across fresh oracles") {
  Oracle a, b;
  auto p1 = a.pair_leaf(2, 6, 0);
  auto p2 = b.pair_leaf(2, 6, 0);
  CHECK(write_pair(p1) == write_pair(p2));
}
