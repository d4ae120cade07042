#pragma once

#include <vector>

#include "gdd/design.hpp"
#include "gdd/provider.hpp"

namespace gdd {

// Resolvable {2,3}-GDD pair of type g^3 on Z_g x I_3 (point (x,i) = i*g+x):
// u parallel classes of pairs, g - u/2 of triples, with the indexed
// pair-class disjointness baked into the stored order.
struct ResolvableFramePair {
  int g = 0, u = 0;
  Design first, second;  // block sets including both pair and triple blocks
  std::vector<std::vector<Block>> pair_classes1, pair_classes2;    // aligned: P_i^1 cap P_i^2 empty
  std::vector<std::vector<Block>> triple_classes1, triple_classes2;
  std::vector<Block> common_class;  // nonempty only for the common-pc variant
};

// No blocks of size 3 in common. g,u even, 0 <= u <= 2g, (g,u) not (2,0),(6,0).
ResolvableFramePair frame_pair(int g, int u);

// Exactly one common parallel class of triples. g,u even, 2 <= u <= 2g-2.
ResolvableFramePair frame_pair_common_pc(int g, int u);

// t = 3 (mod 6) assembly: t = 3 via the frame pair plus the 1-factor
// extension, larger t via a Kirkman triple system on t points.
DesignPair construct_t3(int g, int t, int u, Provider& prov);

// Pair of 3-GDDs of type g^3 u^1 sharing exactly one parallel class of g
// blocks on the union of the three g-groups. g,u even, 0 <= u <= 2g-2,
// (g,u) != (2,0).
struct GddPairWithClass {
  DesignPair pair;
  std::vector<Block> common;
};
GddPairWithClass gdd_pair_common_pc(int g, int u, Provider& prov);

}  // namespace gdd
