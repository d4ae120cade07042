#pragma once

#include <vector>

#include "gdd/design.hpp"

namespace gdd {

class Oracle;

// Uniform contract for every "suppose there exists" hypothesis: recursive
// requests go back to the dispatcher, cited designs come from the oracle.
struct Provider {
  virtual ~Provider() = default;

  // Disjoint pair of 3-GDDs of type g^t u^1 in make_gtu_shell layout
  // (u = 0 and u = g included).
  virtual DesignPair pair(int g, int t, int u) = 0;

  virtual Oracle& oracle() = 0;

  // Pair by size multiset (all-equal or all-but-one-equal); groups of the
  // result are ordered to match `sizes`, points laid out in group runs.
  DesignPair pair_by_sizes(const std::vector<int>& sizes);
};

}  // namespace gdd
