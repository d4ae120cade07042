#include "gdd/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gdd {

namespace {

Edge mk(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<Edge> difference_class(int v, int d) {
  std::vector<Edge> out;
  if (2 * d == v) {
    for (int x = 0; x < v / 2; ++x) out.push_back(mk(x, x + d));
  } else {
    for (int x = 0; x < v; ++x) out.push_back(mk(x, (x + d) % v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_good_difference(int d, int v) {
  if (d < 1 || 2 * d > v) fail(Errc::precondition, "difference out of range");
  return (v / std::gcd(d, v)) % 2 == 0;
}

bool split_even_cycles(const std::vector<Edge>& edges, std::vector<Edge>& m0,
                       std::vector<Edge>& m1) {
  m0.clear();
  m1.clear();
  std::map<int, std::vector<int>> adj;
  for (auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2) return false;
    std::sort(nb.begin(), nb.end());
  }
  std::set<int> done;
  for (auto& [start, nb0] : adj) {
    if (done.count(start)) continue;
    int prev = start, cur = nb0[0], parity = 0;
    m0.push_back(mk(start, cur));
    done.insert(start);
    while (cur != start) {
      done.insert(cur);
      auto& nb = adj[cur];
      int nxt = (nb[0] == prev) ? nb[1] : nb[0];
      parity ^= 1;
      (parity ? m1 : m0).push_back(mk(cur, nxt));
      prev = cur;
      cur = nxt;
    }
    if (parity != 1) return false;  // odd cycle
  }
  std::sort(m0.begin(), m0.end());
  std::sort(m1.begin(), m1.end());
  return true;
}

OneFactorization one_factorize(const std::vector<int>& vertices,
                               const std::vector<Edge>& edges,
                               const std::string& seed_key, int max_restarts) {
  OneFactorization out;
  if (edges.empty()) return out;
  if (vertices.size() % 2 != 0) fail(Errc::precondition, "odd vertex count");
  std::map<int, int> deg;
  for (int v : vertices) deg[v] = 0;
  int maxv = 0;
  for (auto& [a, b] : edges) {
    deg[a]++;
    deg[b]++;
    maxv = std::max({maxv, a, b});
  }
  int delta = deg.begin()->second;
  for (auto& [v, d] : deg)
    if (d != delta) fail(Errc::precondition, "graph not regular");
  // Quick structural path: 2-regular graphs factor iff all cycles are even.
  if (delta == 2) {
    std::vector<Edge> m0, m1;
    if (!split_even_cycles(edges, m0, m1))
      fail(Errc::does_not_exist, "2-regular graph with an odd cycle");
    out.factors.push_back({m0});
    out.factors.push_back({m1});
    return out;
  }
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    auto rng = seeded_rng(seed_key + "#" + std::to_string(attempt));
    std::vector<Edge> remaining = edges;
    OneFactorization trial;
    bool ok = true;
    for (int i = 0; i < delta; ++i) {
      std::vector<Edge> shuffled = remaining;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto m = perfect_matching(maxv + 1, shuffled);
      if ((int)m.size() * 2 != (int)vertices.size()) {
        ok = false;
        break;
      }
      trial.factors.push_back({m});
      std::set<Edge> ms(m.begin(), m.end());
      std::vector<Edge> next;
      for (auto& e : remaining)
        if (!ms.count(e)) next.push_back(e);
      remaining = next;
    }
    if (ok && remaining.empty()) {
      if (!check_one_factorization(trial, vertices, edges))
        fail(Errc::internal_gap, "one_factorize produced a bad factorization");
      return trial;
    }
  }
  fail(Errc::search_exhausted, "one_factorize: no factorization found (" + seed_key + ")");
}

OneFactorization circulant_one_factorization(const CirculantSpec& spec) {
  const int v = spec.v;
  if (v <= 0 || v % 2 != 0) fail(Errc::precondition, "circulant modulus must be even");
  if (spec.D.empty()) fail(Errc::precondition, "empty difference set");
  for (int d : spec.D)
    if (d < 1 || 2 * d > v) fail(Errc::precondition, "difference out of range");
  bool any_good = false;
  for (int d : spec.D) any_good |= is_good_difference(d, v);
  if (!any_good)
    fail(Errc::good_difference_required, "circulant needs a good difference");

  std::vector<int> goods, bads;
  bool has_half = spec.D.count(v / 2) > 0;
  for (int d : spec.D) {
    if (2 * d == v) continue;
    (is_good_difference(d, v) ? goods : bads).push_back(d);
  }

  OneFactorization out;
  auto add_split = [&](int d) {
    std::vector<Edge> m0, m1;
    if (!split_even_cycles(difference_class(v, d), m0, m1))
      fail(Errc::internal_gap, "good difference produced odd cycles");
    out.factors.push_back({m0});
    out.factors.push_back({m1});
  };

  if (bads.empty()) {
    if (has_half) out.factors.push_back({difference_class(v, v / 2)});
    for (int d : goods) add_split(d);
  } else {
    // Merge the odd-cycle classes with one matching of a designated good
    // difference (or the v/2 factor) and re-split generically.
    std::vector<Edge> residual;
    for (int d : bads) {
      auto c = difference_class(v, d);
      residual.insert(residual.end(), c.begin(), c.end());
    }
    if (!goods.empty()) {
      int dstar = goods.front();
      std::vector<Edge> m0, m1;
      if (!split_even_cycles(difference_class(v, dstar), m0, m1))
        fail(Errc::internal_gap, "good difference produced odd cycles");
      out.factors.push_back({m0});
      residual.insert(residual.end(), m1.begin(), m1.end());
      if (has_half) out.factors.push_back({difference_class(v, v / 2)});
      for (size_t i = 1; i < goods.size(); ++i) add_split(goods[i]);
    } else {
      // v/2 is the only good difference; its matching joins the merge.
      auto half = difference_class(v, v / 2);
      residual.insert(residual.end(), half.begin(), half.end());
    }
    std::vector<int> verts(v);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(residual.begin(), residual.end());
    std::string key = "circulant:" + std::to_string(v);
    for (int d : spec.D) key += "," + std::to_string(d);
    auto rest = one_factorize(verts, residual, key);
    for (auto& f : rest.factors) out.factors.push_back(f);
  }

  // Post-hoc check against the requested edge set.
  std::vector<Edge> all;
  for (int d : spec.D) {
    auto c = difference_class(v, d);
    all.insert(all.end(), c.begin(), c.end());
  }
  std::vector<int> verts(v);
  std::iota(verts.begin(), verts.end(), 0);
  if (!check_one_factorization(out, verts, all))
    fail(Errc::internal_gap, "circulant factorization check failed");
  return out;
}

OneFactorization cayley_one_factorization(const std::vector<int>& orders,
                                          const std::vector<std::vector<int>>& S) {
  int n = 1;
  for (int o : orders) n *= o;
  if (n % 2 != 0) fail(Errc::precondition, "Cayley graph of odd order");
  auto index_of = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + (tup[i] % orders[i]);
    return idx;
  };
  auto add = [&](int idx, const std::vector<int>& s) {
    std::vector<int> tup(orders.size());
    int x = idx;
    for (int i = (int)orders.size() - 1; i >= 0; --i) {
      tup[i] = x % orders[i];
      x /= orders[i];
    }
    for (size_t i = 0; i < orders.size(); ++i) tup[i] = (tup[i] + s[i]) % orders[i];
    return index_of(tup);
  };
  std::set<Edge> es;
  for (int x = 0; x < n; ++x)
    for (auto& s : S) {
      int y = add(x, s);
      if (y != x) es.insert({std::min(x, y), std::max(x, y)});
    }
  std::vector<Edge> edges(es.begin(), es.end());
  // Connectivity check.
  std::vector<std::vector<int>> adj(n);
  for (auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> vis(n, false);
  std::vector<int> stack{0};
  vis[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!vis[y]) {
        vis[y] = true;
        cnt++;
        stack.push_back(y);
      }
  }
  if (cnt != n) fail(Errc::precondition, "Cayley graph disconnected");
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::string key = "cayley:" + std::to_string(n) + ":" + std::to_string(edges.size());
  return one_factorize(verts, edges, key);
}

std::vector<OneFactor> cross_group_factors(const std::vector<int>& a_set,
                                           const std::vector<int>& b_set, int t) {
  if ((int)a_set.size() != t || (int)b_set.size() != t)
    fail(Errc::precondition, "cross_group_factors: size mismatch");
  std::vector<OneFactor> out;
  for (int i = 1; i < t; ++i) {
    OneFactor f;
    for (int j = 0; j < t; ++j) f.edges.push_back(mk(a_set[j], b_set[(j + i) % t]));
    std::sort(f.edges.begin(), f.edges.end());
    out.push_back(f);
  }
  return out;
}

bool check_one_factorization(const OneFactorization& f, const std::vector<int>& vertices,
                             const std::vector<Edge>& edges) {
  std::set<int> vs(vertices.begin(), vertices.end());
  std::multiset<Edge> want(edges.begin(), edges.end());
  std::multiset<Edge> got;
  for (auto& fac : f.factors) {
    std::set<int> covered;
    for (auto& [a, b] : fac.edges) {
      if (!covered.insert(a).second || !covered.insert(b).second) return false;
      got.insert(mk(a, b));
    }
    if (covered != vs) return false;
  }
  return want == got;
}

}  // namespace gdd
