#pragma once

#include <set>
#include <vector>

#include "gdd/design.hpp"
#include "gdd/factorization.hpp"
#include "gdd/provider.hpp"

namespace gdd {

struct WeightAssignment {
  std::vector<int> weights;  // indexed by master point
};

// Inflates a K-GDD master: every block of weight multiset W gets a disjoint
// ingredient pair of that type; output type is the weight sum per group.
DesignPair weighting(const Design& master, const WeightAssignment& w, Provider& prov);

// Filling Construction I: splits every group but the last into s-subsets and
// fills each with a pair of type s^{g_i/s} u_fill^1 sharing the adjoined Y.
DesignPair fill_all_groups(const DesignPair& outer, int s, int u_fill, Provider& prov);

// Filling Construction II: u = s_cnt*g + x; fills the long group with a pair
// of type g^{s_cnt} x^1, producing g^{s_cnt+t} x^1.
DesignPair fill_long_group(const DesignPair& outer, int s_cnt, int x, Provider& prov);

// Inflation by I_t: base single 3-GDD of type {g_1..g_s}; blocks carry
// disjoint ITD(3,t) pairs minus the idempotent class, groups carry pairs of
// type g_i^t u^1 sharing the adjoined U. t >= 4.
DesignPair inflate_by_t(const Design& base, int t, int u, Provider& prov);

// 1-factor extension: adds one ideal point per aligned factor pair.
// Requires f1[i] and f2[i] edge-disjoint after the optional automatic
// realignment (bipartite matching); factors must all cover the same vertex
// set, which must be a union of groups excluding at most one group (the long
// group that grows).
DesignPair extend_by_onefactors(const Design& d1, const Design& d2,
                                const std::vector<OneFactor>& f1,
                                const std::vector<OneFactor>& f2,
                                bool auto_align = true);

// Leave completion, even-group flavor: type g^t ((r-1)(t-1)+6m+v)^1 from a
// cyclic partial STS on Z_g with r-regular leave (r = g-1 uses the trivial
// one and forces m = 0). g even, t >= 4 and t not 6 or 10.
DesignPair leave_complete_even_g(int g, int t, int r, int m, int v_ing, Provider& prov);

// Leave completion, odd-group flavor: type g^t (r(t-1)+6m+v)^1; rows carry
// 1^t v^1 pairs. t >= 4 even; r = g-1 forces m = 0.
DesignPair leave_complete_odd_g(int g, int t, int r, int m, int v_ing, Provider& prov);

struct MostPlan {
  bool ok = false;
  bool even_side = false;  // even-side: 2^t x^1 rows; odd-side: 1^t x^1 rows
  int r = 0, m = 0, x = 0;
  int condition = 0;  // which clause of the spectrum lemma matched
};

// Parameter selection for the catch-all spectrum lemma (g > 5, t >= 4).
MostPlan plan_most(int g, int t, int u);

DesignPair construct_most(int g, int t, int u, Provider& prov);

}  // namespace gdd
