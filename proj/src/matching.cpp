#include "gdd/matching.hpp"

#include <algorithm>
#include <queue>

namespace gdd {

namespace {

struct Blossom {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, p, base;
  std::vector<bool> used, blossom;

  explicit Blossom(int n, const std::vector<Edge>& edges)
      : n(n), adj(n), match(n, -1), p(n), base(n), used(n), blossom(n) {
    for (auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }

  int lca(int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(p.begin(), p.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          q.push(match[to]);
        }
      }
    }
    return -1;
  }

  void run() {
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = p[u], ppv = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = ppv;
      }
    }
  }
};

}  // namespace

std::vector<int> max_matching(int n, const std::vector<Edge>& edges) {
  Blossom bl(n, edges);
  // Greedy seed keeps the augmenting phase short.
  for (auto& [a, b] : edges)
    if (bl.match[a] == -1 && bl.match[b] == -1) {
      bl.match[a] = b;
      bl.match[b] = a;
    }
  bl.run();
  return bl.match;
}

std::vector<Edge> perfect_matching(int n, const std::vector<Edge>& edges) {
  std::vector<bool> active(n, false);
  for (auto& [a, b] : edges) active[a] = active[b] = true;
  auto mate = max_matching(n, edges);
  std::vector<Edge> out;
  for (int v = 0; v < n; ++v) {
    if (!active[v]) continue;
    if (mate[v] == -1) return {};
    if (mate[v] > v) out.push_back({v, mate[v]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gdd
