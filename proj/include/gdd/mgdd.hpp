#pragma once

#include <functional>

#include "gdd/design.hpp"
#include "gdd/provider.hpp"

namespace gdd {

// Modified group divisible design: groups plus a transverse hole partition.
// Point x_{i,j} (group i of t, hole j of g) has index i*g + j.
struct MgddDesign {
  Design base;                          // groups = the t groups of size g
  std::vector<std::vector<int>> holes;  // g holes of size t
};

struct MgddPair {
  MgddDesign first, second;
};

// Valid iff every pair from distinct groups and distinct holes is covered
// exactly once and no block repeats a group or hole.
VerificationReport verify_mgdd(const MgddDesign& m);

// Disjoint pair spectrum: g,t >= 3, (g-1)(t-1) even, gt(g-1)(t-1) = 0 (mod 6),
// (g,t) != (3,3).
MgddPair mgdd_pair(int g, int t, Provider& prov);

// Product construction over a pairwise balanced design.
MgddPair pbd_closure_mgdd(int g, const Design& pbd,
                          const std::function<MgddPair(int, int)>& base_pairs);

// g = 1,5 (mod 6), t = 0,4 (mod 6), u <= t-1: hole-filled MGDD pair.
DesignPair construct_goddt04(int g, int t, int u, Provider& prov);

// The finite special list: difference-partition triples, the TD(7,7)
// weighting cases, and the 23^6 completion family.
DesignPair construct_g5_special(int g, int t, int u, Provider& prov);
bool g5_special_covers(int g, int t, int u);

// Full g = 5 (mod 6) router (assumes the triple is admissible and earlier
// branches declined).
DesignPair construct_g5mod6(int g, int t, int u, Provider& prov);

// Embedded explicit pairs.
MgddPair mgdd_data_5_4();
MgddPair mgdd_data_5_6();

}  // namespace gdd
