#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/dispatcher.hpp"

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

TEST_CASE("excluded triple names its condition") {
  try {
    disp().construct(1, 3, 0);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_admissible);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("embedded base case served at depth one") {
  auto r = disp().construct(3, 4, 5);
  CHECK(r.blocks == 38);
  CHECK(r.trace.label.rfind("Appendix", 0) == 0);
  CHECK(r.trace.children.empty());
}

TEST_CASE("difference route for the order-50 instance") {
  auto r = disp().construct(10, 5, 4);
  CHECK(r.trace.label.rfind("Lemma 7.1", 0) == 0);
  CHECK(verify_disjoint_pair(r.pair, GroupType::of(10, 5, 4)).valid);
}

TEST_CASE("small-group ladders") {
  for (auto [g, t, u] : std::vector<std::array<int, 3>>{
           {1, 6, 5},  {1, 4, 3},  {1, 12, 7}, {1, 13, 1}, {2, 4, 2},  {2, 5, 8},
           {2, 7, 6},  {2, 6, 4},  {2, 9, 2},  {2, 12, 6}, {3, 4, 1},  {3, 4, 9},
           {3, 6, 1},  {3, 6, 5},  {3, 8, 1},  {3, 10, 1}, {3, 8, 7},  {4, 4, 6},
           {4, 5, 4},  {4, 6, 2},  {4, 6, 6},  {4, 9, 8},  {5, 4, 3},  {5, 6, 1},
           {5, 6, 7},  {6, 4, 2},  {6, 5, 8},  {6, 6, 4},  {6, 7, 4},  {7, 4, 3},
           {7, 4, 9},  {7, 6, 5},  {8, 4, 2},  {8, 4, 8},  {8, 5, 4},  {9, 4, 1},
           {9, 4, 7},  {10, 4, 6}, {11, 4, 3}, {12, 4, 2}, {13, 4, 3}, {5, 8, 11},
           {2, 15, 4}, {6, 8, 2},  {6, 9, 4},  {4, 12, 2}, {9, 6, 1},  {10, 5, 16}})
    CAPTURE(g, t, u);
  // The list above is exercised one by one to get precise failure reports.
  std::vector<std::array<int, 3>> triples = {
      {1, 6, 5},  {1, 4, 3},  {1, 12, 7}, {1, 13, 1}, {2, 4, 2},  {2, 5, 8},
      {2, 7, 6},  {2, 6, 4},  {2, 9, 2},  {2, 12, 6}, {3, 4, 1},  {3, 4, 9},
      {3, 6, 1},  {3, 6, 5},  {3, 8, 1},  {3, 10, 1}, {3, 8, 7},  {4, 4, 6},
      {4, 5, 4},  {4, 6, 2},  {4, 6, 6},  {4, 9, 8},  {5, 4, 3},  {5, 6, 1},
      {5, 6, 7},  {6, 4, 2},  {6, 5, 8},  {6, 6, 4},  {6, 7, 4},  {7, 4, 3},
      {7, 4, 9},  {7, 6, 5},  {8, 4, 2},  {8, 4, 8},  {8, 5, 4},  {9, 4, 1},
      {9, 4, 7},  {10, 4, 6}, {11, 4, 3}, {12, 4, 2}, {13, 4, 3}, {5, 8, 11},
      {2, 15, 4}, {6, 8, 2},  {6, 9, 4},  {4, 12, 2}, {9, 6, 1},  {10, 5, 16}};
  for (auto [g, t, u] : triples) {
    CAPTURE(g);
    CAPTURE(t);
    CAPTURE(u);
    auto r = disp().construct(g, t, u);
    CHECK(verify_disjoint_pair(r.pair, GroupType::of(g, t, u)).valid);
  }
}

TEST_CASE("degenerate shapes construct as empty designs") {
  auto r = disp().construct(0, 5, 4);
  CHECK(r.pair.first.blocks.empty());
  auto s = disp().construct(3, 0, 7);
  CHECK(s.pair.first.blocks.empty());
  auto q = disp().construct(2, 2, 2);
  CHECK(verify_disjoint_pair(q.pair, GroupType::of(2, 2, 2)).valid);
}

TEST_CASE("memoization returns identical objects") {
  auto a = disp().construct(3, 4, 1);
  auto b = disp().construct(3, 4, 1);
  CHECK(a.pair.first.blocks == b.pair.first.blocks);
  Dispatcher fresh(oracle());
  auto c = fresh.construct(3, 4, 1);
  CHECK(a.pair.first.blocks == c.pair.first.blocks);
}

TEST_CASE("explain needs no materialization") {
  auto t = disp().explain(26, 8, 2);
  CHECK(t.label.find("Lemma 6.6/(1)") != std::string::npos);
  auto t2 = disp().explain(3, 4, 1);
  CHECK(t2.label.rfind("Appendix", 0) == 0);
  CHECK_THROWS_AS(disp().explain(1, 3, 0), Error);
  auto t3 = disp().explain(35, 4, 3);
  CHECK(t3.label.find("Lemma 8.10") != std::string::npos);
}

TEST_CASE("scan at a small bound is clean and consistent with membership") {
  auto rows = disp().scan(14, 1);
  CHECK(!rows.empty());
  for (auto& r : rows) {
    CAPTURE(r.g);
    CAPTURE(r.t);
    CAPTURE(r.u);
    CHECK(r.ok);
  }
}
