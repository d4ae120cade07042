#pragma once

#include <vector>

namespace gdd {

struct ParameterTriple {
  int g = 0, t = 0, u = 0;
  bool operator<(const ParameterTriple& o) const {
    if (g != o.g) return g < o.g;
    if (t != o.t) return t < o.t;
    return u < o.u;
  }
  bool operator==(const ParameterTriple& o) const {
    return g == o.g && t == o.t && u == o.u;
  }
};

struct AdmissibilityDecision {
  bool admissible = false;
  std::vector<int> failed_conditions;  // condition ids 1..5
};

// Main theorem spectrum: the five conditions with the (1,3,0) exclusion.
// The alias (g,2,g) names the same design as (g,3,0) and is folded into it,
// so (1,2,1) is rejected alongside (1,3,0).
AdmissibilityDecision pair_admissible(int g, int t, int u);
inline AdmissibilityDecision pair_admissible(const ParameterTriple& p) {
  return pair_admissible(p.g, p.t, p.u);
}

// Single-design spectrum: same conditions without the (1,3,0) exclusion.
AdmissibilityDecision gdd_exists(int g, int t, int u);

// True when gt = 0, u = 0 with t <= 2, or similar shapes whose design pair is
// empty or has no cross pairs at all.
bool degenerate_triple(int g, int t, int u);

// All pair-admissible triples with gt+u <= max_n, sorted lexicographically.
std::vector<ParameterTriple> enumerate_admissible(int max_n);

}  // namespace gdd
