#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gdd/factorization.hpp"

using namespace gdd;

namespace {

std::vector<Edge> circulant_edges(int v, const std::set<int>& D) {
  std::set<Edge> es;
  for (int d : D)
    for (int x = 0; x < v; ++x) {
      int y = (x + d) % v;
      es.insert({std::min(x, y), std::max(x, y)});
    }
  return {es.begin(), es.end()};
}

}  // namespace

TEST_CASE("good differences") {
  CHECK(is_good_difference(2, 12));
  CHECK(!is_good_difference(4, 12));
  for (int v = 4; v <= 24; v += 2) CHECK(is_good_difference(v / 2, v));
}

TEST_CASE("half difference gives one factor") {
  auto f = circulant_one_factorization({6, {3}});
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].edges == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("single good difference splits the cycle") {
  auto f = circulant_one_factorization({8, {1}});
  REQUIRE(f.factors.size() == 2);
  std::vector<int> verts(8);
  std::iota(verts.begin(), verts.end(), 0);
  CHECK(check_one_factorization(f, verts, circulant_edges(8, {1})));
}

TEST_CASE("non-good difference leans on a good one") {
  auto f = circulant_one_factorization({12, {3, 4}});
  CHECK(f.factors.size() == 4);
  std::vector<int> verts(12);
  std::iota(verts.begin(), verts.end(), 0);
  CHECK(check_one_factorization(f, verts, circulant_edges(12, {3, 4})));
}

TEST_CASE("no good difference is refused") {
  CHECK_THROWS_AS(circulant_one_factorization({12, {4}}), Error);
}

TEST_CASE("factor count formula holds across the small range") {
  for (int v = 4; v <= 24; v += 2) {
    // A few representative difference sets per v.
    std::vector<std::set<int>> cases = {{1}, {1, 2}, {v / 2}, {1, v / 2}};
    if (v >= 10) cases.push_back({2, 3, v / 2});
    for (auto& D : cases) {
      bool good = false;
      for (int d : D) good |= is_good_difference(d, v);
      if (!good) continue;
      auto f = circulant_one_factorization({v, D});
      int expect = 0;
      for (int d : D) expect += (2 * d == v) ? 1 : 2;
      CHECK((int)f.factors.size() == expect);
      std::vector<int> verts(v);
      std::iota(verts.begin(), verts.end(), 0);
      CHECK(check_one_factorization(f, verts, circulant_edges(v, D)));
    }
  }
}

TEST_CASE("cayley factorization handles a connected even-order graph") {
  auto f = cayley_one_factorization({2, 3}, {{1, 0}, {0, 1}, {0, 2}});
  std::vector<int> verts(6);
  std::iota(verts.begin(), verts.end(), 0);
  size_t total = 0;
  for (auto& fac : f.factors) total += fac.edges.size();
  CHECK(total * 1 == f.factors.size() * 3);
}

TEST_CASE("cayley refuses odd order") {
  CHECK_THROWS_AS(cayley_one_factorization({3, 3}, {{1, 0}}), Error);
}

TEST_CASE("cross group factors cover all non-aligned pairs") {
  std::vector<int> a{0, 1, 2, 3}, b{4, 5, 6, 7};
  auto fs = cross_group_factors(a, b, 4);
  REQUIRE(fs.size() == 3);
  std::set<Edge> all;
  for (auto& f : fs) {
    CHECK(f.edges.size() == 4);
    for (auto& e : f.edges) CHECK(all.insert(e).second);
  }
  CHECK(all.size() == 12);
  for (int i = 0; i < 4; ++i) CHECK(!all.count({a[i], b[i]}));
  auto f6 = cross_group_factors({0, 1}, {2, 3}, 2);
  CHECK(f6.size() == 1);
}

TEST_CASE("generic factorizer peels a complete bipartite graph") {
  std::vector<int> verts(10);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<Edge> edges;
  for (int a = 0; a < 5; ++a)
    for (int b = 5; b < 10; ++b) edges.push_back({a, b});
  auto f = one_factorize(verts, edges, "k55");
  CHECK(f.factors.size() == 5);
  CHECK(check_one_factorization(f, verts, edges));
}
