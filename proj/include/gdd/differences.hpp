#pragma once

#include <array>
#include <set>
#include <vector>

#include "gdd/design.hpp"
#include "gdd/factorization.hpp"

namespace gdd {

// Difference triple normalized so the developed base blocks are {x, x+a, x+a+b};
// c = the third difference as an element of [1, v/2].
struct DifferenceTriple {
  int a = 0, b = 0, c = 0;
  int span = 0;  // (a+b) mod v, the offset of the third point
};

struct DifferencePartition {
  int v = 0;
  std::vector<DifferenceTriple> d1;
  std::set<int> d2;
};

struct CyclicPartialSts {
  int v = 0;
  int r = 0;                              // leave regularity
  std::vector<std::array<int, 3>> starters;  // base blocks {0, a, a+b}
  std::vector<DifferenceTriple> triples;     // matching difference triples
};

struct TripleSearchOptions {
  bool forbid_half_in_triples = true;   // v/2 never sits in a triple
  bool need_good_in_leave = false;      // leftover must contain a good difference
  bool need_good_in_triples = false;    // some triple must contain a good difference
  bool pair_safe = false;               // developed A1/A2 orbits must be disjoint
};

// Partition `target` into `triple_count` difference triples plus a residual
// set D2, under the given side conditions. Complete backtracking; throws
// does_not_exist when no partition satisfies the constraints.
DifferencePartition find_difference_partition(int v, const std::set<int>& target,
                                              int triple_count,
                                              const TripleSearchOptions& opt);

// The base-block development of Lemma-style difference families:
// design 1 develops {x, a+x, (a+b)+x}, design 2 develops {x, b+x, (a+b)+x},
// and the D2 leave is factored and hung on the u ideal points with the
// rotated factor pairing. Requires u >= 2 and g(t-1)-u = 0 (mod 6).
DesignPair construct_dif(int g, int t, int u, const DifferencePartition& part);

// u = g(t-1): empty D1, full D2.
DesignPair construct_u_max(int g, int t);

// Cyclic partial S(2,3,v) without short orbits, r-regular leave.
CyclicPartialSts cyclic_partial_sts(int v, int r, bool pair_safe = false);

// Feasible leave regularity r' for cyclic partial S(2,3,v).
int cps_base_regularity(int v);

// Large-u direct construction: derives D1/D2 from a cyclic partial STS on
// Z_{gt} and delegates to construct_dif.
DesignPair construct_u_large(int g, int t, int u);
bool u_large_applicable(int g, int t, int u);

// Two disjoint partial designs of type g^t (u-1)^1 sharing one leave equal to
// a 1-factor; the factor pairs up the t groups when g = 1.
struct PartialWithLeave {
  Design first, second;
  OneFactor leave;
};
PartialWithLeave construct_partial_with_onefactor_leave(int g, int t, int u);

}  // namespace gdd
