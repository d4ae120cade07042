#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdd/codes.hpp"
#include "gdd/data.hpp"

using namespace gdd;

TEST_CASE("export sizes and distances for the embedded pairs") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  auto code = export_code(p, GroupType::of(3, 4, 1));
  CHECK(code.n == 13);
  CHECK(code.words.size() == 44);
  CHECK(verify_code(code, 4));

  REQUIRE(embedded_pair(3, 4, 7, p));
  auto big = export_code(p, GroupType::of(3, 4, 7));
  CHECK(big.n == 19);
  CHECK(big.words.size() == 92);
  CHECK(verify_code(big, 4));
}

TEST_CASE("duplicate words fail the distance check") {
  TernaryCode c;
  c.n = 5;
  c.words = {{1, 1, 1, 0, 0}, {1, 1, 1, 0, 0}};
  CHECK(!verify_code(c, 4));
}

TEST_CASE("two blocks sharing two points sit at distance four") {
  TernaryCode c;
  c.n = 6;
  c.words = {{1, 1, 1, 0, 0, 0}, {2, 2, 0, 2, 0, 0}};
  CHECK(verify_code(c, 4));
  int dist = 0;
  for (int k = 0; k < 6; ++k)
    if (c.words[0][k] != c.words[1][k]) dist++;
  CHECK(dist == 4);
}

TEST_CASE("unverified input is rejected") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  DesignPair self{p.first, p.first};
  CHECK_THROWS_AS(export_code(self, GroupType::of(3, 4, 1)), Error);
}

TEST_CASE("file format header") {
  DesignPair p;
  REQUIRE(embedded_pair(3, 4, 1, p));
  auto code = export_code(p, GroupType::of(3, 4, 1));
  auto text = code.str();
  CHECK(text.rfind("CODE n=13 q=3 w=3 d=4 size=44\n", 0) == 0);
}
