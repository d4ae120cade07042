#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/dispatcher.hpp"
#include "gdd/mgdd.hpp"

using namespace gdd;

namespace {
Oracle& oracle() {
  static Oracle o;
  return o;
}
Dispatcher& disp() {
  static Dispatcher d(oracle());
  return d;
}
}  // namespace

TEST_CASE("embedded modified pair at (5,4)") {
  auto p = mgdd_data_5_4();
  CHECK(p.first.base.blocks.size() == 40);
  CHECK(p.second.base.blocks.size() == 40);
  CHECK(verify_mgdd(p.first).valid);
  CHECK(verify_mgdd(p.second).valid);
  CHECK(blocks_disjoint(p.first.base, p.second.base));
}

TEST_CASE("embedded modified pair at (5,6)") {
  auto p = mgdd_data_5_6();
  CHECK(p.first.base.blocks.size() == 100);
  CHECK(verify_mgdd(p.first).valid);
  CHECK(verify_mgdd(p.second).valid);
  CHECK(blocks_disjoint(p.first.base, p.second.base));
}

TEST_CASE("mutating the embedded data breaks coverage") {
  auto p = mgdd_data_5_4();
  p.first.base.blocks.pop_back();
  auto rep = verify_mgdd(p.first);
  CHECK(!rep.valid);
  int uncovered = 0;
  for (auto& v : rep.violations)
    if (v.rule == "pair-uncovered") uncovered++;
  CHECK(uncovered == 3);
}

TEST_CASE("modified pair spectrum construction and refusals") {
  CHECK_THROWS_AS(mgdd_pair(3, 3, disp()), Error);
  for (auto [g, t] : std::vector<std::pair<int, int>>{
           {3, 4}, {4, 3}, {3, 7}, {7, 3}, {4, 4}, {5, 4}, {4, 5}, {5, 5},
           {9, 4}, {7, 4}, {5, 6}, {9, 5}, {6, 5}, {7, 6}, {5, 9}}) {
    long long gg = g, tt = t;
    bool feasible = g >= 3 && t >= 3 && !(g == 3 && t == 3) &&
                    (gg - 1) * (tt - 1) % 2 == 0 && gg * tt * (gg - 1) * (tt - 1) % 6 == 0;
    if (!feasible) {
      CHECK_THROWS_AS(mgdd_pair(g, t, disp()), Error);
      continue;
    }
    auto p = mgdd_pair(g, t, disp());
    CHECK(verify_mgdd(p.first).valid);
    CHECK(verify_mgdd(p.second).valid);
    CHECK(blocks_disjoint(p.first.base, p.second.base));
    CHECK(p.first.holes == p.second.holes);
    CHECK(p.first.base.groups == p.second.base.groups);
  }
}

TEST_CASE("block count of the modified design matches the closed form") {
  auto p = mgdd_pair(5, 4, disp());
  long long g = 5, t = 4;
  long long pairs = g * t * (g * t - 1) / 2 - t * g * (g - 1) / 2 - g * t * (t - 1) / 2;
  CHECK((long long)p.first.base.blocks.size() == pairs / 3);
  CHECK(pairs / 3 == 40);
}

TEST_CASE("hole filling produces long-group designs") {
  auto p = construct_goddt04(5, 4, 3, disp());
  CHECK(verify_disjoint_pair(p, GroupType::of(5, 4, 3)).valid);
  auto q = construct_goddt04(5, 6, 1, disp());
  CHECK(verify_disjoint_pair(q, GroupType::of(5, 6, 1)).valid);
  auto r = construct_goddt04(7, 4, 3, disp());
  CHECK(verify_disjoint_pair(r, GroupType::of(7, 4, 3)).valid);
}

TEST_CASE("special list routes") {
  CHECK(g5_special_covers(11, 4, 3));
  CHECK(g5_special_covers(11, 8, 5));
  CHECK(!g5_special_covers(11, 4, 5));
  auto p = construct_g5_special(5, 4, 3, disp());
  CHECK(verify_disjoint_pair(p, GroupType::of(5, 4, 3)).valid);
  auto q = construct_g5_special(11, 4, 9, disp());
  CHECK(verify_disjoint_pair(q, GroupType::of(11, 4, 9)).valid);
}

TEST_CASE("both routes to the overlapping triple agree with the verifier") {
  disp().set_route_override("goddt04");
  auto a = disp().construct(5, 4, 3);
  disp().set_route_override("special");
  // A fresh dispatcher to avoid the memo.
  Dispatcher d2(oracle());
  d2.set_route_override("special");
  auto b = d2.construct(5, 4, 3);
  disp().set_route_override("");
  CHECK(verify_disjoint_pair(a.pair, GroupType::of(5, 4, 3)).valid);
  CHECK(verify_disjoint_pair(b.pair, GroupType::of(5, 4, 3)).valid);
}
