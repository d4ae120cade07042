#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/data.hpp"
#include "gdd/design.hpp"
#include "gdd/io.hpp"
#include "test_util.hpp"

using namespace gdd;

TEST_CASE("smallest design verifies") {
  Design d = make_shell({1, 1, 1});
  d.blocks.push_back({0, 1, 2});
  auto rep = verify_gdd(d, GroupType::of(1, 3, 0));
  CHECK(rep.valid);
  CHECK(testutil::brute_force_gdd(d));
}

TEST_CASE("appendix data verifies and matches the block-count formula") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  CHECK(verify_disjoint_pair(p, GroupType::of(3, 4, 1)).valid);
  CHECK((long long)p.first.blocks.size() == block_count(3, 4, 1));
  CHECK(block_count(3, 4, 1) == 22);
  CHECK(testutil::brute_force_gdd(p.first));
  CHECK(testutil::brute_force_gdd(p.second));

  REQUIRE(embedded_pair(3, 4, 5, p));
  CHECK(verify_disjoint_pair(p, GroupType::of(3, 4, 5)).valid);
  CHECK((long long)p.first.blocks.size() == 38);
  REQUIRE(embedded_pair(3, 4, 7, p));
  CHECK(verify_disjoint_pair(p, GroupType::of(3, 4, 7)).valid);
  CHECK((long long)p.first.blocks.size() == 46);
}

TEST_CASE("mutated appendix block breaks coverage both ways") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  Design d = p.first;
  for (auto& b : d.blocks)
    if (b == Block{0, 1, 12}) b = Block{0, 2, 12};
  auto rep = verify_gdd(d, GroupType::of(3, 4, 1));
  CHECK(!rep.valid);
  bool uncovered = false, twice = false;
  for (auto& v : rep.violations) {
    if (v.rule == "pair-uncovered" && v.witness == "(0,1)") uncovered = true;
    if (v.rule.rfind("pair-covered-2", 0) == 0 && v.witness == "(0,2)") twice = true;
  }
  CHECK(uncovered);
  CHECK(twice);
  CHECK(!testutil::brute_force_gdd(d));
}

TEST_CASE("partial verification carries the leave") {
  Design d = make_shell({2, 2, 2});
  auto rep = verify_partial_gdd(d);
  CHECK(rep.valid);
  CHECK(rep.leave.edges.size() == 12);

  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  auto full = verify_partial_gdd(p.first);
  CHECK(full.valid);
  CHECK(full.leave.edges.empty());
}

TEST_CASE("self-pair is rejected") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  DesignPair self{p.first, p.first};
  auto rep = verify_disjoint_pair(self, GroupType::of(3, 4, 1));
  CHECK(!rep.valid);
}

TEST_CASE("canonicalize is idempotent and permutation-invariant") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  Design c1 = canonicalize(p.first);
  CHECK(canonicalize(c1).blocks == c1.blocks);
  Design shuffled = p.first;
  std::reverse(shuffled.blocks.begin(), shuffled.blocks.end());
  std::swap(shuffled.groups[0], shuffled.groups[3]);
  Design c2 = canonicalize(shuffled);
  CHECK(write_design(c2) == write_design(c1));
}

TEST_CASE("structural errors are distinct from invalidity") {
  Design d = make_shell({1, 1, 1});
  d.blocks.push_back({2, 1, 0});  // unsorted
  auto rep = verify_gdd(d, GroupType::of(1, 3, 0));
  CHECK(!rep.valid);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].rule == "structural");
}

TEST_CASE("text format round-trips") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 5, p));
  std::string text = write_pair(p);
  auto secs = read_sections_str(text);
  REQUIRE(secs.size() == 2);
  CHECK(write_design(secs[0].design) == write_design(p.first));
  CHECK(write_design(secs[1].design) == write_design(p.second));
}

TEST_CASE("group type canonical form merges u = g") {
  CHECK(GroupType::of(3, 4, 3).str() == "3^5");
  CHECK(GroupType::of(3, 4, 1).str() == "3^4 1^1");
  CHECK(GroupType::of(2, 3, 0).str() == "2^3");
  CHECK(GroupType::of(0, 5, 4).str() == "4^1");
}
