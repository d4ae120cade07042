#pragma once

#include <utility>
#include <vector>

namespace gdd {

using Edge = std::pair<int, int>;  // endpoints, stored a < b

// Maximum matching in a general graph (blossom contraction, O(V^3)).
// Returns mate[v] or -1. Vertices are 0..n-1; isolated vertices allowed.
std::vector<int> max_matching(int n, const std::vector<Edge>& edges);

// Perfect matching over exactly the vertices incident to `edges` plus
// `vertices`; empty result when none exists.
std::vector<Edge> perfect_matching(int n, const std::vector<Edge>& edges);

}  // namespace gdd
