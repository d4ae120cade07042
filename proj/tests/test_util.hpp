#pragma once

#include <map>

#include "gdd/design.hpp"

namespace gdd::testutil {

// Brute-force pair tally, independent of the bitmap verifier.
inline bool brute_force_gdd(const Design& d, const std::set<int>& K = {3}) {
  std::map<std::pair<int, int>, int> tally;
  for (const Block& b : d.blocks) {
    if (!K.count((int)b.size())) return false;
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j)
        tally[{std::min(b[i], b[j]), std::max(b[i], b[j])}]++;
  }
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b) {
      int want = d.same_group(a, b) ? 0 : 1;
      auto it = tally.find({a, b});
      int got = it == tally.end() ? 0 : it->second;
      if (got != want) return false;
    }
  return true;
}

}  // namespace gdd::testutil
