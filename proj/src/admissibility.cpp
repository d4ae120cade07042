#include "gdd/admissibility.hpp"

#include <algorithm>

namespace gdd {

namespace {

// Conditions (1)-(5) of the existence theorem; exclude_130 distinguishes the
// pair spectrum from the single spectrum.
AdmissibilityDecision decide(long long g, long long t, long long u, bool exclude_130) {
  AdmissibilityDecision d;
  if (g < 0 || t < 0 || u < 0) {
    d.failed_conditions.push_back(1);
    return d;
  }
  auto cond1 = [&]() {
    if (g == 0) return true;
    if (t >= 3) {
      if (exclude_130 && g == 1 && t == 3 && u == 0) return false;
      return true;
    }
    if (t == 2 && u == g) {
      // Type g^2 g^1 is the type g^3 in disguise; (1,2,1) names the
      // nonexistent disjoint pair of type 1^3.
      if (exclude_130 && g == 1) return false;
      return true;
    }
    if (t == 1 && u == 0) return true;
    if (t == 0) return true;
    return false;
  };
  if (!cond1()) d.failed_conditions.push_back(1);
  if (!(u <= g * (t - 1) || g * t == 0)) d.failed_conditions.push_back(2);
  if (!((g * (t - 1) + u) % 2 == 0 || g * t == 0)) d.failed_conditions.push_back(3);
  if (!((g * t) % 2 == 0 || u == 0)) d.failed_conditions.push_back(4);
  if (!((g * g * t * (t - 1) / 2 + g * t * u) % 3 == 0)) d.failed_conditions.push_back(5);
  d.admissible = d.failed_conditions.empty();
  return d;
}

}  // namespace

AdmissibilityDecision pair_admissible(int g, int t, int u) {
  return decide(g, t, u, true);
}

AdmissibilityDecision gdd_exists(int g, int t, int u) {
  return decide(g, t, u, false);
}

bool degenerate_triple(int g, int t, int u) {
  (void)u;
  return g == 0 || t == 0 || (t == 1 && u == 0);
}

std::vector<ParameterTriple> enumerate_admissible(int max_n) {
  std::vector<ParameterTriple> out;
  if (max_n < 0) return out;
  for (int g = 0; g <= max_n; ++g) {
    for (int t = 0; t <= max_n && g * t <= max_n; ++t) {
      for (int u = 0; g * t + u <= max_n; ++u) {
        if (pair_admissible(g, t, u).admissible) out.push_back({g, t, u});
      }
      if (g == 0 && t == max_n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gdd
