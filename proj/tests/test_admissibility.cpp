#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/admissibility.hpp"

using namespace gdd;

namespace {

// Independent literal evaluation of the five conditions on the grid.
bool brute_pair(long long g, long long t, long long u) {
  bool c1;
  if (g == 0)
    c1 = true;
  else if (t >= 3)
    c1 = !(g == 1 && t == 3 && u == 0);
  else if (t == 2 && u == g)
    c1 = g != 1;
  else
    c1 = (t == 1 && u == 0) || t == 0;
  bool c2 = u <= g * (t - 1) || g * t == 0;
  bool c3 = (g * (t - 1) + u) % 2 == 0 || g * t == 0;
  bool c4 = (g * t) % 2 == 0 || u == 0;
  bool c5 = (g * g * t * (t - 1) / 2 + g * t * u) % 3 == 0;
  return c1 && c2 && c3 && c4 && c5;
}

}  // namespace

TEST_CASE("known membership decisions") {
  CHECK(!pair_admissible(1, 3, 0).admissible);
  CHECK(pair_admissible(1, 3, 0).failed_conditions == std::vector<int>{1});
  CHECK(pair_admissible(5, 4, 3).admissible);
  auto d = pair_admissible(2, 4, 2);
  CHECK(!d.admissible);
  CHECK(d.failed_conditions == std::vector<int>{5});
  CHECK(!pair_admissible(1, 2, 1).admissible);  // alias of (1,3,0)
  CHECK(pair_admissible(2, 2, 2).admissible);
  CHECK(pair_admissible(3, 4, 1).admissible);
  CHECK(pair_admissible(10, 5, 4).admissible);
}

TEST_CASE("single spectrum differs only at the excluded triple") {
  CHECK(gdd_exists(1, 3, 0).admissible);
  CHECK(gdd_exists(3, 2, 3).admissible);
  CHECK(!gdd_exists(2, 3, 5).admissible);  // u > g(t-1)
  for (int g = 0; g <= 20; ++g)
    for (int t = 0; t <= 20; ++t)
      for (int u = 0; u <= 20; ++u) {
        bool p = pair_admissible(g, t, u).admissible;
        bool s = gdd_exists(g, t, u).admissible;
        if (p) CHECK(s);
        if (s && !p) {
          bool excluded = (g == 1 && t == 3 && u == 0) || (g == 1 && t == 2 && u == 1);
          CHECK(excluded);
        }
      }
}

TEST_CASE("condition arithmetic matches a direct brute force") {
  for (int g = 0; g <= 60; ++g)
    for (int t = 0; t <= 60; ++t)
      for (int u = 0; u <= 60; ++u)
        CHECK(pair_admissible(g, t, u).admissible == brute_pair(g, t, u));
}

TEST_CASE("enumeration is sorted, bounded and monotone") {
  auto small = enumerate_admissible(13);
  CHECK(std::is_sorted(small.begin(), small.end()));
  bool has341 = false;
  for (auto& p : small) {
    CHECK(p.g * p.t + p.u <= 13);
    if (p.g == 3 && p.t == 4 && p.u == 1) has341 = true;
  }
  CHECK(has341);
  auto bigger = enumerate_admissible(20);
  for (auto& p : small) {
    CHECK(std::binary_search(bigger.begin(), bigger.end(), p));
  }
  auto tiny = enumerate_admissible(3);
  for (auto& p : tiny) CHECK((p.g * p.t == 0 || p.u == 0 || (p.t == 2 && p.u == p.g)));
}
