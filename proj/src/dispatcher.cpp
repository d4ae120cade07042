#include "gdd/dispatcher.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "gdd/admissibility.hpp"
#include "gdd/data.hpp"
#include "gdd/differences.hpp"
#include "gdd/frames.hpp"
#include "gdd/latin.hpp"
#include "gdd/mgdd.hpp"
#include "gdd/recursive.hpp"

namespace gdd {

namespace {

thread_local std::vector<std::array<int, 3>> g_active;

struct ActiveGuard {
  std::array<int, 3> key;
  explicit ActiveGuard(std::array<int, 3> k) : key(k) {
    for (auto& a : g_active)
      if (a == key) fail(Errc::provider_cycle, "recursive request cycle");
    g_active.push_back(key);
  }
  ~ActiveGuard() { g_active.pop_back(); }
};

std::string triple_str(int g, int t, int u) {
  std::ostringstream os;
  os << " (" << g << "," << t << "," << u << ")";
  return os.str();
}

// Rewrites a pair into the standard g^t u^1 point layout.
DesignPair normalize_pair(const DesignPair& p, int g, int t, int u) {
  const Design& d = p.first;
  std::vector<int> shorts;
  int longg = -1;
  for (size_t i = 0; i < d.groups.size(); ++i) {
    if ((int)d.groups[i].size() == g && (int)shorts.size() < t)
      shorts.push_back((int)i);
    else if (u > 0 && (int)d.groups[i].size() == u && longg == -1)
      longg = (int)i;
    else if ((int)d.groups[i].size() == g)
      shorts.push_back((int)i);
    else
      fail(Errc::internal_gap, "normalize: unexpected group size");
  }
  if ((int)shorts.size() != t || (u > 0) != (longg != -1))
    fail(Errc::internal_gap, "normalize: group multiset mismatch");
  std::vector<int> img(d.n, -1);
  for (int j = 0; j < t; ++j) {
    auto grp = d.groups[shorts[j]];
    std::sort(grp.begin(), grp.end());
    for (int i = 0; i < g; ++i) img[grp[i]] = i * t + j;
  }
  if (longg != -1) {
    auto grp = d.groups[longg];
    std::sort(grp.begin(), grp.end());
    for (int l = 0; l < u; ++l) img[grp[l]] = g * t + l;
  }
  DesignPair out = relabel(p, img, g * t + u);
  Design shell = make_gtu_shell(g, t, u);
  out.first.groups = shell.groups;
  out.second.groups = shell.groups;
  out.first.finalize();
  out.second.finalize();
  std::sort(out.first.blocks.begin(), out.first.blocks.end());
  std::sort(out.second.blocks.begin(), out.second.blocks.end());
  return out;
}

DesignPair degenerate_pair(int g, int t, int u) {
  Design d;
  if (g == 0 || t == 0) {
    d = make_shell({u});
  } else {
    d = make_shell(std::vector<int>(t, g));
  }
  return {d, d};
}

}  // namespace

std::string trace_to_string(const TraceNode& t, int indent) {
  std::string out(indent, ' ');
  out += t.label + "\n";
  for (auto& c : t.children) out += trace_to_string(c, indent + 2);
  return out;
}

DesignPair Dispatcher::pair(int g, int t, int u) { return construct(g, t, u).pair; }

Dispatcher::Result Dispatcher::construct(int g, int t, int u) {
  std::array<int, 3> key{g, t, u};
  {
    std::lock_guard<std::mutex> lk(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ActiveGuard guard(key);
  Result res = construct_uncached(g, t, u);
  {
    std::lock_guard<std::mutex> lk(memo_mu_);
    memo_.emplace(key, res);
  }
  return res;
}

Dispatcher::Result Dispatcher::construct_uncached(int g, int t, int u) {
  auto adm = pair_admissible(g, t, u);
  if (!adm.admissible) {
    std::string msg = "not admissible; failed conditions:";
    for (int c : adm.failed_conditions) msg += " " + std::to_string(c);
    fail(Errc::not_admissible, msg + triple_str(g, t, u));
  }
  Result res;
  res.pair = route(g, t, u, res.trace);
  if (!degenerate_triple(g, t, u) && u != g)
    res.pair = normalize_pair(res.pair, g, t, u);
  // Soundness gate: enforced inline, never skipped.
  GroupType ty = GroupType::of(g, t, u);
  auto rep = verify_disjoint_pair(res.pair, ty);
  if (!rep.valid) {
    std::string msg = "verification failed at" + triple_str(g, t, u) + ":";
    for (size_t i = 0; i < rep.violations.size() && i < 4; ++i)
      msg += " [" + rep.violations[i].rule + " " + rep.violations[i].witness + "]";
    fail(Errc::internal_gap, msg);
  }
  res.blocks = (long long)res.pair.first.blocks.size();
  if (!degenerate_triple(g, t, u) && res.blocks != block_count(g, t, u))
    fail(Errc::internal_gap, "block count mismatch" + triple_str(g, t, u));
  return res;
}

DesignPair Dispatcher::route(int g, int t, int u, TraceNode& trace) {
  // Degenerate shapes: empty block sets.
  if (degenerate_triple(g, t, u)) {
    trace.label = "Theorem 1.4/degenerate" + triple_str(g, t, u);
    return degenerate_pair(g, t, u);
  }
  if (t == 2 && u == g) {
    trace.label = "Lemma 1.3" + triple_str(g, t, u);
    return oracle_.pair_leaf(g, t, u);
  }
  // Embedded golden data.
  DesignPair emb;
  if (embedded_pair(g, t, u, emb)) {
    trace.label = "Appendix" + triple_str(g, t, u);
    return emb;
  }
  // u = 0 and u = g leaves.
  if (u == 0 || u == g) {
    trace.label = "Lemma 1.3" + triple_str(g, t, u);
    return oracle_.pair_leaf(g, t, u);
  }

  // Test hook: exercise an alternative construction when it applies.
  if (!override_.empty()) {
    if (override_ == "goddt04" && (g % 6 == 1 || g % 6 == 5) && g >= 5 && t >= 4 &&
        (t % 6 == 0 || t % 6 == 4) && u <= t - 1) {
      trace.label = "Lemma 8.6" + triple_str(g, t, u);
      return construct_goddt04(g, t, u, *this);
    }
    if (override_ == "special" && g5_special_covers(g, t, u)) {
      trace.label = "Lemma 8.7" + triple_str(g, t, u);
      return construct_g5_special(g, t, u, *this);
    }
    if (override_ == "most" && plan_most(g, t, u).ok) {
      trace.label = "Lemma 6.6" + triple_str(g, t, u);
      return construct_most(g, t, u, *this);
    }
  }

  auto child = [&](int cg, int ct, int cu) {
    Result r = construct(cg, ct, cu);
    trace.children.push_back(r.trace);
    return r.pair;
  };

  if (g == 1) {
    // u odd >= 3 here.
    if (u == 3) {
      trace.label = "Lemma 3.9" + triple_str(g, t, u);
      trace.children.push_back({"Lemma 1.3/2" + triple_str(1, t, 3), {}});
      return oracle_.pair_leaf(1, t, 3);
    }
    if (u % 6 == 5) {
      if (u == t - 1) {
        trace.label = "Lemma 3.9" + triple_str(g, t, u);
        trace.children.push_back({"Corollary 3.4" + triple_str(1, t, u), {}});
        return construct_u_max(1, t);
      }
      trace.label = "Lemma 3.9" + triple_str(g, t, u);
      trace.children.push_back({"Lemma 3.6" + triple_str(1, t, u), {}});
      return construct_u_large(1, t, u);
    }
    trace.label = "Lemma 3.9" + triple_str(g, t, u);
    trace.children.push_back({"Lemma 3.8" + triple_str(1, t, u), {}});
    return oracle_.pair_leaf(1, t, u);
  }

  if (g == 2) {
    if (t % 3 != 0) {
      trace.label = "Lemma 3.10" + triple_str(g, t, u);
      auto pw = construct_partial_with_onefactor_leave(1, 2 * t, u + 1);
      // The common leave 1-factor and the long group become the new groups.
      std::vector<int> img(2 * t + u, -1);
      std::vector<Edge> edges = pw.leave.edges;
      std::sort(edges.begin(), edges.end());
      for (int j = 0; j < t; ++j) {
        img[edges[j].first] = j;
        img[edges[j].second] = t + j;
      }
      for (int l = 0; l < u; ++l) img[2 * t + l] = 2 * t + l;
      DesignPair out = relabel({pw.first, pw.second}, img, 2 * t + u);
      Design shell = make_gtu_shell(2, t, u);
      out.first.groups = shell.groups;
      out.second.groups = shell.groups;
      out.first.finalize();
      out.second.finalize();
      return out;
    }
    if (t % 6 == 3) {
      trace.label = "Lemma 5.8" + triple_str(g, t, u);
      trace.children.push_back({"Corollary 4.2" + triple_str(g, t, u), {}});
      return construct_t3(2, t, u, *this);
    }
    trace.label = "Lemma 5.8" + triple_str(g, t, u);
    DesignPair outer = child(4, t / 2, u - 2);
    trace.children.push_back({"Corollary 2.3", {}});
    return fill_all_groups(outer, 2, 2, *this);
  }

  if (g == 3) {
    trace.label = "Lemma 5.6" + triple_str(g, t, u);
    if (t == 4 && u == 9) {
      trace.children.push_back({"Corollary 3.4" + triple_str(3, 4, 9), {}});
      return construct_u_max(3, 4);
    }
    if (u >= 5 && t >= 6) {
      DesignPair outer = child(6, t / 2, u - 3);
      trace.children.push_back({"Corollary 2.3", {}});
      return fill_all_groups(outer, 3, 3, *this);
    }
    if (u == 1 && (t == 6 || t == 8)) {
      trace.children.push_back({"Lemma 1.3 rows + Lemma 1.2 columns", {}});
      Design shell = make_gtu_shell(3, t, 1);
      Design d1 = shell, d2 = shell;
      DesignPair row = oracle_.pair_leaf(1, t, 1);
      for (int j = 0; j < 3; ++j) {
        std::vector<int> img(t + 1);
        for (int i = 0; i < t; ++i) img[i] = j * t + i;
        img[t] = 3 * t;
        for (const Block& b : row.first.blocks) {
          Block nb{img[b[0]], img[b[1]], img[b[2]]};
          std::sort(nb.begin(), nb.end());
          d1.blocks.push_back(nb);
        }
        for (const Block& b : row.second.blocks) {
          Block nb{img[b[0]], img[b[1]], img[b[2]]};
          std::sort(nb.begin(), nb.end());
          d2.blocks.push_back(nb);
        }
      }
      auto itd = disjoint_itd_pair(t, false);
      for (const Block& b : itd.first.base.blocks) d1.blocks.push_back(b);
      for (const Block& b : itd.second.base.blocks) d2.blocks.push_back(b);
      return {d1, d2};
    }
    // u = 1, even t >= 10: fill the long group of 3^{t-4} 13^1.
    DesignPair outer = child(3, t - 4, 13);
    trace.children.push_back({"Construction 2.4", {}});
    return fill_long_group(outer, 4, 1, *this);
  }

  if (g == 4) {
    trace.label = "Lemma 5.7" + triple_str(g, t, u);
    bool diff_case = (t % 3 == 1 && u % 6 == 0) || (t % 3 == 2 && u % 6 == 4) ||
                     (t % 3 == 0 && u % 6 == 2);
    if (diff_case) {
      trace.children.push_back({"Lemma 3.3" + triple_str(4, t, u), {}});
      std::set<int> target;
      for (int d = 1; d <= 2 * t - 1; ++d)
        if (d != t) target.insert(d);
      TripleSearchOptions opt;
      opt.need_good_in_leave = true;
      opt.pair_safe = true;
      auto part = find_difference_partition(4 * t, target, (4 * t - 4 - u) / 6, opt);
      return construct_dif(4, t, u, part);
    }
    if (t == 6) {
      DesignPair outer = child(8, 3, u - 4);
      trace.children.push_back({"Corollary 2.3", {}});
      return fill_all_groups(outer, 4, 4, *this);
    }
    // t = 0 (mod 3), t >= 9, u = 0,4 (mod 6), u >= 6.
    DesignPair outer = child(12, t / 3, u - 4);
    trace.children.push_back({"Construction 2.2", {}});
    return fill_all_groups(outer, 4, 4, *this);
  }

  if (t % 6 == 3) {
    trace.label = "Corollary 4.2" + triple_str(g, t, u);
    return construct_t3(g, t, u, *this);
  }

  if (g % 6 == 0) {
    int x = g / 6;
    trace.label = "Corollary 5.5" + triple_str(g, t, u);
    if (t % 2 == 1) {
      trace.children.push_back({"Lemma 5.2 weighting", {}});
      auto master = oracle_.kgdd_master(1, t);
      WeightAssignment w;
      w.weights.assign(master.design.n, 2 * x);
      int m = 3 * (t - 1) / 2;
      int rem = u;
      for (int i = 0; i < m; ++i) {
        int take = std::min(rem, 4 * x);
        take -= take % 2;
        w.weights[3 * t + i] = take;
        rem -= take;
      }
      if (rem != 0) fail(Errc::internal_gap, "weight distribution failed");
      return weighting(master.design, w, *this);
    }
    if (t == 4 || t == 6) {
      int k = (t == 4) ? 3 : 1;
      int m = (t == 4) ? 6 : 8;
      if (u >= 2 * k * x) {
        trace.children.push_back({"Lemma 5.4 weighting", {}});
        auto master = oracle_.kgdd_master(4, t);
        WeightAssignment w;
        w.weights.assign(master.design.n, 2 * x);
        int rem = u - 2 * k * x;
        for (int i = k; i < m; ++i) {
          int take = std::min(rem, 4 * x);
          take -= take % 2;
          w.weights[3 * t + i] = take;
          rem -= take;
        }
        if (rem != 0) fail(Errc::internal_gap, "weight distribution failed");
        return weighting(master.design, w, *this);
      }
      if (t == 4) {
        trace.children.push_back({"Lemma 5.4 via the five-group master", {}});
        auto master = oracle_.kgdd_master(3, 0);
        WeightAssignment w;
        w.weights.assign(master.design.n, 2 * x);
        int rem = u;
        for (int i = 0; i < 3; ++i) {
          int take = std::min(rem, 4 * x);
          take -= take % 2;
          w.weights[12 + i] = take;
          rem -= take;
        }
        if (rem != 0) fail(Errc::internal_gap, "weight distribution failed");
        return weighting(master.design, w, *this);
      }
      trace.children.push_back({"Lemma 5.4 via the mixed master", {}});
      auto master = oracle_.kgdd_master(2, 6);
      WeightAssignment w;
      w.weights.assign(master.design.n, 2 * x);
      for (int i = 0; i < 6; ++i) w.weights[18 + i] = 0;
      w.weights[18 + 5] = u;
      return weighting(master.design, w, *this);
    }
    // even t >= 8
    trace.children.push_back({"Lemma 5.3 weighting", {}});
    auto master = oracle_.kgdd_master(2, t);
    int m = 3 * (t - 2) / 2;
    WeightAssignment w;
    w.weights.assign(master.design.n, 2 * x);
    int w1 = (u <= 4 * x * (m - 1)) ? 0 : 10 * x;
    w.weights[3 * t] = w1;
    int rem = u - w1;
    for (int i = 1; i < m; ++i) {
      int take = std::min(rem, 4 * x);
      take -= take % 2;
      w.weights[3 * t + i] = take;
      rem -= take;
    }
    if (rem != 0) fail(Errc::internal_gap, "weight distribution failed");
    return weighting(master.design, w, *this);
  }

  if (g % 6 == 3) {
    trace.label = "Lemma 5.9" + triple_str(g, t, u);
    auto kts = oracle_.kts(g);
    int classes = (g - 1) / 2;
    int u1 = std::min(u, 3 * (t - 1));
    if (u1 == 3) u1 = (u >= 5 && 3 * (t - 1) >= 5) ? 5 : 1;
    std::vector<int> ui(classes, 0);
    ui[0] = u1;
    int rem = u - u1;
    for (int i = 1; i < classes && rem > 0; ++i) {
      int take = std::min(rem, 2 * (t - 1));
      take -= take % 2;
      ui[i] = take;
      rem -= take;
    }
    if (rem != 0) fail(Errc::internal_gap, "class weights failed");
    Design shell = make_gtu_shell(g, t, u);
    Design d1 = shell, d2 = shell;
    std::vector<int> U(u);
    std::iota(U.begin(), U.end(), g * t);
    int uoff = 0;
    for (int c = 0; c < classes; ++c) {
      std::vector<int> Uc(U.begin() + uoff, U.begin() + uoff + ui[c]);
      uoff += ui[c];
      if (c == 0) {
        DesignPair ing = child(3, t, ui[0]);
        for (const Block& B : kts.classes[c]) {
          std::vector<int> img(ing.first.n);
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < t; ++j) img[i * t + j] = B[i] * t + j;
          for (int l = 0; l < ui[0]; ++l) img[3 * t + l] = Uc[l];
          for (const Block& b : ing.first.blocks) {
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d1.blocks.push_back(nb);
          }
          for (const Block& b : ing.second.blocks) {
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d2.blocks.push_back(nb);
          }
        }
      } else {
        auto gp = gdd_pair_common_pc(t, ui[c], *this);
        trace.children.push_back({"Corollary 4.4" + triple_str(t, 3, ui[c]), {}});
        std::set<Block> common(gp.common.begin(), gp.common.end());
        // Shift columns so the shared class becomes the aligned one.
        std::vector<int> shift(3, 0);
        {
          const Block& c0 = gp.common.front();
          // Points of the common class live on the frame part: column = p / t.
          for (int p : c0) shift[p / t] = p % t;
        }
        for (const Block& B : kts.classes[c]) {
          std::vector<int> img(gp.pair.first.n);
          for (int col = 0; col < 3; ++col)
            for (int v = 0; v < t; ++v)
              img[col * t + v] = B[col] * t + ((v - shift[col] + t) % t);
          for (int l = 0; l < ui[c]; ++l) img[3 * t + l] = Uc[l];
          for (const Block& b : gp.pair.first.blocks) {
            if (common.count(b)) continue;
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d1.blocks.push_back(nb);
          }
          for (const Block& b : gp.pair.second.blocks) {
            if (common.count(b)) continue;
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d2.blocks.push_back(nb);
          }
        }
      }
    }
    return {d1, d2};
  }

  if (g % 6 == 2 || g % 6 == 4) {
    // The catch-all spectrum branch first, then the finite case ladders.
    MostPlan mp = plan_most(g, t, u);
    if (mp.ok) {
      trace.label = "Lemma 6.6/(" + std::to_string(mp.condition) + ")" + triple_str(g, t, u);
      trace.children.push_back(
          {std::string(mp.even_side ? (mp.r == g - 1 ? "Lemma 6.2" : "Lemma 6.1")
                                    : (mp.r == g - 1 ? "Lemma 6.5" : "Lemma 6.4")) +
               " r=" + std::to_string(mp.r) + " m=" + std::to_string(mp.m) +
               " v=" + std::to_string(mp.x),
           {}});
      return construct_most(g, t, u, *this);
    }
    if (g % 6 == 4) {
      trace.label = "Lemma 7.1" + triple_str(g, t, u);
      int n = (g - 4) / 6;
      if (n >= 3 && u <= 3 * (t - 1)) {
        trace.children.push_back({"Lemma 7.1/Case 1", {}});
        std::vector<int> sizes(n, 6);
        sizes.push_back(4);
        Design base = oracle_.single_gdd(sizes);
        child(6, t, u);
        child(4, t, u);
        return inflate_by_t(base, t, u, *this);
      }
      if (n == 2 && u <= 3 * (t - 1)) {
        trace.children.push_back({"Lemma 7.1/Case 2", {}});
        Design base = oracle_.single_gdd({4, 4, 4, 4});
        child(4, t, u);
        return inflate_by_t(base, t, u, *this);
      }
      if (n == 1 && t % 3 == 2 && u < 2 * (t - 1)) {
        trace.children.push_back({"Lemma 7.1/Case 3", {}});
        if (u >= 2 * g + 2) return construct_u_large(10, t, u);
        if (t == 5 && u == 4) {
          std::set<int> target;
          for (int d = 1; d <= 25; ++d)
            if (d % 5 != 0) target.insert(d);
          TripleSearchOptions opt;
          opt.need_good_in_leave = true;
          opt.pair_safe = true;
          auto part = find_difference_partition(50, target, 6, opt);
          return construct_dif(10, 5, 4, part);
        }
        DesignPair outer = child(10, t - 3, 30 + u);
        trace.children.push_back({"Construction 2.4", {}});
        return fill_long_group(outer, 3, u, *this);
      }
      if (n == 1 && (t == 6 || t == 10) && u >= 2 * (t - 1)) {
        trace.children.push_back({"Lemma 7.1/Case 5", {}});
        if (t == 6) {
          DesignPair outer = child(20, 3, u - 10);
          return fill_all_groups(outer, 10, 10, *this);
        }
        return construct_u_large(10, 10, u);
      }
      trace.children.push_back({"Lemma 7.1/Case 4", {}});
      Design base = oracle_.single_gdd({2, 2, 2, 4});
      child(2, t, u);
      child(4, t, u);
      return inflate_by_t(base, t, u, *this);
    }
    // g = 2 (mod 6)
    if (g == 14 || g == 20) {
      trace.label = "Lemma 7.2" + triple_str(g, t, u);
      if (t >= 6 && t % 2 == 0 && u > g) {
        trace.children.push_back({"Corollary 2.3", {}});
        DesignPair outer = child(2 * g, t / 2, u - g);
        return fill_all_groups(outer, g, g, *this);
      }
      if (g == 14) {
        if (t == 4 || t == 6 || t == 7 || (t == 5 && u >= 14)) {
          trace.children.push_back({"Lemma 7.2/Case 2 weighting", {}});
          Design master = oracle_.td(t + 1, 7);
          // Spread u over the last group in admissible 2^t w^1 portions.
          std::vector<int> portions;
          {
            int rem = u;
            for (int slot = 0; slot < 7 && rem > 0; ++slot) {
              int take = 0;
              for (int w = std::min(rem, 2 * (t - 1)); w >= 2; w -= 2)
                if (pair_admissible(2, t, w).admissible &&
                    (rem - w == 0 || rem - w >= 2)) {
                  take = w;
                  break;
                }
              if (!take) break;
              portions.push_back(take);
              rem -= take;
            }
            if (std::accumulate(portions.begin(), portions.end(), 0) != u)
              fail(Errc::internal_gap, "weight split failed" + triple_str(g, t, u));
          }
          WeightAssignment w;
          w.weights.assign(master.n, 2);
          for (int l = 0; l < 7; ++l) w.weights[t * 7 + l] = 0;
          for (size_t l = 0; l < portions.size(); ++l) w.weights[t * 7 + l] = portions[l];
          return weighting(master, w, *this);
        }
        if (u < 14) {
          trace.children.push_back({"Lemma 7.2/Case 1", {}});
          Design base = oracle_.single_gdd(std::vector<int>(7, 2));
          child(2, t, u);
          return inflate_by_t(base, t, u, *this);
        }
        if (u >= 2 * g + 2) {
          trace.children.push_back({"Lemma 7.2/Case 3 large-u", {}});
          return construct_u_large(14, t, u);
        }
        trace.children.push_back({"Lemma 7.2/Case 3 filling", {}});
        DesignPair outer = child(14, t - 3, 42 + u);
        return fill_long_group(outer, 3, u, *this);
      }
      // g = 20
      if (t == 5 && u == 14) {
        trace.children.push_back({"Lemma 7.2/Case 2 difference triples", {}});
        std::set<int> target;
        for (int d = 1; d <= 50; ++d)
          if (d % 5 != 0) target.insert(d);
        TripleSearchOptions opt;
        opt.need_good_in_leave = true;
        opt.pair_safe = true;
        auto part = find_difference_partition(100, target, 11, opt);
        return construct_dif(20, 5, 14, part);
      }
      if ((t >= 10 && t % 2 == 0 && u < 20) || (t == 5 && u < 24)) {
        trace.children.push_back({"Lemma 7.2/Case 2", {}});
        Design base = oracle_.single_gdd(std::vector<int>(10, 2));
        child(2, t, u);
        return inflate_by_t(base, t, u, *this);
      }
      if (t == 4 || t == 6) {
        trace.children.push_back({"Lemma 7.2/Case 3", {}});
        Design base = oracle_.single_gdd({4, 4, 4, 8});
        child(4, t, u);
        child(8, t, u);
        return inflate_by_t(base, t, u, *this);
      }
      if (t == 8) {
        trace.children.push_back({"Lemma 7.2/Case 4", {}});
        DesignPair outer = child(20, 5, 60 + u);
        return fill_long_group(outer, 3, u, *this);
      }
      if (t == 7 && u == 30) {
        trace.children.push_back({"Lemma 7.2/Case 5", {}});
        Design six = oracle_.single_gdd(std::vector<int>(6, 4));
        // Delete the last group: its points turn blocks into labeled pairs.
        std::vector<std::vector<Edge>> pclasses(4);
        std::vector<Block> triples;
        for (const Block& b : six.blocks) {
          int del = -1;
          Block rest;
          for (int p : b)
            if (p >= 20)
              del = p - 20;
            else
              rest.push_back(p);
          if (del == -1)
            triples.push_back(rest);
          else
            pclasses[del].push_back({rest[0], rest[1]});
        }
        int T = 7;
        Design shell;
        shell.n = 20 * T + 6;
        for (int i = 0; i < T; ++i) {
          std::vector<int> col;
          for (int x = 0; x < 20; ++x) col.push_back(x * T + i);
          shell.groups.push_back(col);
        }
        std::vector<int> U(6);
        std::iota(U.begin(), U.end(), 20 * T);
        shell.groups.push_back(U);
        shell.finalize();
        Design d1 = shell, d2 = shell;
        auto ritd = disjoint_ritd_pair(T);
        for (const Block& B : triples) {
          std::vector<int> img(3 * T);
          for (int c = 0; c < 3; ++c)
            for (int v = 0; v < T; ++v) img[c * T + v] = B[c] * T + v;
          auto idemp = ritd.first.parallel_classes[0];
          std::set<Block> skip(idemp.begin(), idemp.end());
          for (const Block& b : ritd.first.base.blocks) {
            if (skip.count(b)) continue;
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d1.blocks.push_back(nb);
          }
          for (const Block& b : ritd.second.base.blocks) {
            if (skip.count(b)) continue;
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d2.blocks.push_back(nb);
          }
        }
        DesignPair ing = child(4, T, 6);
        for (int gi = 0; gi < 5; ++gi) {
          std::vector<int> img(ing.first.n);
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < T; ++j) img[i * T + j] = (4 * gi + i) * T + j;
          for (int l = 0; l < 6; ++l) img[4 * T + l] = 20 * T + l;
          for (const Block& b : ing.first.blocks) {
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d1.blocks.push_back(nb);
          }
          for (const Block& b : ing.second.blocks) {
            Block nb{img[b[0]], img[b[1]], img[b[2]]};
            std::sort(nb.begin(), nb.end());
            d2.blocks.push_back(nb);
          }
        }
        std::vector<OneFactor> f1, f2;
        for (int k = 0; k < 4; ++k) {
          std::vector<OneFactor> offs;
          for (int i = 1; i < T; ++i) {
            OneFactor f;
            for (auto& [a, b] : pclasses[k])
              for (int l = 0; l < T; ++l) {
                int p = a * T + l, q = b * T + (l + i) % T;
                f.edges.push_back({std::min(p, q), std::max(p, q)});
              }
            std::sort(f.edges.begin(), f.edges.end());
            offs.push_back(f);
          }
          for (int i = 0; i < 6; ++i) {
            f1.push_back(offs[i]);
            f2.push_back(offs[(i + 1) % 6]);
          }
        }
        return extend_by_onefactors(d1, d2, f1, f2, /*auto_align=*/false);
      }
      fail(Errc::internal_gap, "no branch in the 14/20 ladder" + triple_str(g, t, u));
    }
    // Remaining g = 2 (mod 6)
    trace.label = "Lemma 7.3" + triple_str(g, t, u);
    int g24 = g % 24;
    if (g24 == 2 || g24 == 8) {
      trace.children.push_back({"Lemma 7.3/Case 1", {}});
      int n = (g - 2) / 6;
      Design base = oracle_.single_gdd(std::vector<int>(3 * n + 1, 2));
      child(2, t, u);
      return inflate_by_t(base, t, u, *this);
    }
    if (u < 6 * (t - 1)) {
      trace.children.push_back({"Lemma 7.3/Case 2", {}});
      int l = (g - 8) / 6;
      std::vector<int> sizes(l, 6);
      sizes.push_back(8);
      Design base = oracle_.single_gdd(sizes);
      child(6, t, u);
      child(8, t, u);
      return inflate_by_t(base, t, u, *this);
    }
    if (g24 == 14) {
      trace.children.push_back({"Lemma 7.3/Case 3", {}});
      int m = (g - 14) / 24;
      std::vector<int> sizes(3 * m, 8);
      sizes.push_back(14);
      Design base = oracle_.single_gdd(sizes);
      child(8, t, u);
      child(14, t, u);
      return inflate_by_t(base, t, u, *this);
    }
    trace.children.push_back({"Lemma 7.3/Case 4", {}});
    int k = (g - 20) / 24;
    std::vector<int> sizes(3 * k + 1, 8);
    sizes.push_back(12);
    Design base = oracle_.single_gdd(sizes);
    child(8, t, u);
    child(12, t, u);
    return inflate_by_t(base, t, u, *this);
  }

  if (g % 6 == 5) {
    trace.label = "Lemma 8.10" + triple_str(g, t, u);
    if (u > 4 * (t - 1)) {
      MostPlan mp = plan_most(g, t, u);
      trace.children.push_back({"Lemma 6.6/(5) r=" + std::to_string(mp.r) +
                                    " m=" + std::to_string(mp.m) + " v=" + std::to_string(mp.x),
                                {}});
    } else if (g5_special_covers(g, t, u)) {
      trace.children.push_back({"Lemma 8.7" + triple_str(g, t, u), {}});
    } else if ((t % 6 == 0 || t % 6 == 4) && u <= t - 1) {
      trace.children.push_back({"Lemma 8.6" + triple_str(g, t, u), {}});
    } else {
      trace.children.push_back({"Lemma 8.9" + triple_str(g, t, u), {}});
    }
    return construct_g5mod6(g, t, u, *this);
  }

  // g = 1 (mod 6), g > 1
  {
    MostPlan mp = plan_most(g, t, u);
    if (mp.ok) {
      trace.label = "Lemma 6.6/(4)" + triple_str(g, t, u);
      trace.children.push_back(
          {std::string(mp.r == g - 1 ? "Lemma 6.5" : "Lemma 6.4") + " r=" +
               std::to_string(mp.r) + " m=" + std::to_string(mp.m) + " v=" + std::to_string(mp.x),
           {}});
      return construct_most(g, t, u, *this);
    }
  }
  fail(Errc::internal_gap, "no branch accepts" + triple_str(g, t, u));
}

TraceNode Dispatcher::explain(int g, int t, int u) {
  auto adm = pair_admissible(g, t, u);
  if (!adm.admissible) {
    std::string msg = "not admissible; failed conditions:";
    for (int c : adm.failed_conditions) msg += " " + std::to_string(c);
    fail(Errc::not_admissible, msg + triple_str(g, t, u));
  }
  TraceNode n;
  if (degenerate_triple(g, t, u)) {
    n.label = "Theorem 1.4/degenerate" + triple_str(g, t, u);
    return n;
  }
  if (t == 2 && u == g) {
    n.label = "Lemma 1.3" + triple_str(g, t, u);
    return n;
  }
  DesignPair emb;
  if (embedded_pair(g, t, u, emb)) {
    n.label = "Appendix" + triple_str(g, t, u);
    return n;
  }
  if (u == 0 || u == g) {
    n.label = "Lemma 1.3" + triple_str(g, t, u);
    return n;
  }
  auto sub = [&](int cg, int ct, int cu) { n.children.push_back(explain(cg, ct, cu)); };
  if (g == 1) {
    n.label = "Lemma 3.9" + triple_str(g, t, u);
    if (u == 3)
      n.children.push_back({"Lemma 1.3/2", {}});
    else if (u % 6 == 5)
      n.children.push_back({u == t - 1 ? "Corollary 3.4" : "Lemma 3.6", {}});
    else
      n.children.push_back({"Lemma 3.8", {}});
    return n;
  }
  if (g == 2) {
    if (t % 3 != 0) {
      n.label = "Lemma 3.10" + triple_str(g, t, u);
      n.children.push_back({"Remark 3.7" + triple_str(1, 2 * t, u + 1), {}});
    } else if (t % 6 == 3) {
      n.label = "Lemma 5.8" + triple_str(g, t, u);
      n.children.push_back({"Corollary 4.2", {}});
    } else {
      n.label = "Lemma 5.8" + triple_str(g, t, u);
      sub(4, t / 2, u - 2);
    }
    return n;
  }
  if (g == 3) {
    n.label = "Lemma 5.6" + triple_str(g, t, u);
    if (t == 4 && u == 9)
      n.children.push_back({"Corollary 3.4", {}});
    else if (u >= 5 && t >= 6)
      sub(6, t / 2, u - 3);
    else if (u == 1 && t >= 10)
      sub(3, t - 4, 13);
    return n;
  }
  if (g == 4) {
    n.label = "Lemma 5.7" + triple_str(g, t, u);
    bool diff_case = (t % 3 == 1 && u % 6 == 0) || (t % 3 == 2 && u % 6 == 4) ||
                     (t % 3 == 0 && u % 6 == 2);
    if (diff_case)
      n.children.push_back({"Lemma 3.3", {}});
    else if (t == 3)
      n.children.push_back({"Corollary 4.2", {}});
    else if (t == 6)
      sub(8, 3, u - 4);
    else
      sub(12, t / 3, u - 4);
    return n;
  }
  if (t % 6 == 3) {
    n.label = "Corollary 4.2" + triple_str(g, t, u);
    return n;
  }
  if (g % 6 == 0) {
    n.label = "Corollary 5.5" + triple_str(g, t, u);
    n.children.push_back({t % 2 == 1 ? "Lemma 5.2" : (t == 4 || t == 6 ? "Lemma 5.4" : "Lemma 5.3"), {}});
    return n;
  }
  if (g % 6 == 3) {
    n.label = "Lemma 5.9" + triple_str(g, t, u);
    return n;
  }
  if (g % 6 == 2 || g % 6 == 4) {
    MostPlan mp = plan_most(g, t, u);
    if (mp.ok) {
      n.label = "Lemma 6.6/(" + std::to_string(mp.condition) + ")" + triple_str(g, t, u);
      return n;
    }
    n.label = (g % 6 == 4 ? "Lemma 7.1" : (g == 14 || g == 20 ? "Lemma 7.2" : "Lemma 7.3")) +
              triple_str(g, t, u);
    return n;
  }
  if (g % 6 == 5) {
    n.label = "Lemma 8.10" + triple_str(g, t, u);
    if (u > 4 * (t - 1))
      n.children.push_back({"Lemma 6.6/(5)", {}});
    else if (g5_special_covers(g, t, u))
      n.children.push_back({"Lemma 8.7", {}});
    else if ((t % 6 == 0 || t % 6 == 4) && u <= t - 1)
      n.children.push_back({"Lemma 8.6", {}});
    else
      n.children.push_back({"Lemma 8.9", {}});
    return n;
  }
  n.label = "Lemma 6.6/(4)" + triple_str(g, t, u);
  return n;
}

std::vector<Dispatcher::ScanRow> Dispatcher::scan(int max_n, int jobs) {
  auto triples = enumerate_admissible(max_n);
  std::vector<ScanRow> rows(triples.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      auto [g, t, u] = triples[i];
      ScanRow row;
      row.g = g;
      row.t = t;
      row.u = u;
      auto start = std::chrono::steady_clock::now();
      try {
        Result r = construct(g, t, u);
        row.ok = true;
        row.blocks = r.blocks;
        row.route = r.trace.label.substr(0, r.trace.label.find(" ("));
      } catch (const Error& e) {
        row.ok = false;
        row.error = e.what();
      }
      row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
      rows[i] = row;
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace gdd
