#pragma once

#include <set>
#include <string>
#include <vector>

#include "gdd/matching.hpp"
#include "gdd/util.hpp"

namespace gdd {

struct OneFactor {
  std::vector<Edge> edges;  // sorted, each a < b
};

struct OneFactorization {
  std::vector<OneFactor> factors;
};

struct CirculantSpec {
  int v = 0;          // even modulus
  std::set<int> D;    // differences in [1, v/2]
};

bool is_good_difference(int d, int v);

// Partition of all pairs of Z_v with difference in D into 1-factors.
// Factor count: 2*|{d in D : d < v/2}| + [v/2 in D]. Deterministic.
OneFactorization circulant_one_factorization(const CirculantSpec& spec);

// 1-factorization of the Cayley graph of Z_{o1} x ... x Z_{ok} with
// connection set S (closed under negation implicitly). Requires even order
// and a connected graph.
OneFactorization cayley_one_factorization(const std::vector<int>& orders,
                                          const std::vector<std::vector<int>>& S);

// t-1 disjoint factors of a_set ∪ b_set, offset i = 1..t-1.
std::vector<OneFactor> cross_group_factors(const std::vector<int>& a_set,
                                           const std::vector<int>& b_set, int t);

// Generic engine: peel perfect matchings off a regular graph with seeded
// restarts; every result is re-checked. vertices: the exact vertex set.
OneFactorization one_factorize(const std::vector<int>& vertices,
                               const std::vector<Edge>& edges,
                               const std::string& seed_key, int max_restarts = 400);

// Independent tally: pairwise disjoint perfect matchings whose union is
// exactly `edges` over `vertices`.
bool check_one_factorization(const OneFactorization& f, const std::vector<int>& vertices,
                             const std::vector<Edge>& edges);

// Splits a disjoint union of even cycles (given as a 2-regular edge set)
// into two matchings; fails on odd cycles.
bool split_even_cycles(const std::vector<Edge>& edges, std::vector<Edge>& m0,
                       std::vector<Edge>& m1);

}  // namespace gdd
