#include "gdd/recursive.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gdd/admissibility.hpp"
#include "gdd/differences.hpp"
#include "gdd/latin.hpp"

namespace gdd {

namespace {

std::vector<int> embed_image(const Design& src, const std::vector<std::vector<int>>& target) {
  if (src.groups.size() != target.size())
    fail(Errc::precondition, "embed: group count mismatch");
  std::vector<int> img(src.n, -1);
  for (size_t gi = 0; gi < src.groups.size(); ++gi) {
    if (src.groups[gi].size() != target[gi].size())
      fail(Errc::precondition, "embed: group size mismatch");
    for (size_t k = 0; k < src.groups[gi].size(); ++k)
      img[src.groups[gi][k]] = target[gi][k];
  }
  return img;
}

void append_blocks(Design& dst, const Design& src, const std::vector<int>& img) {
  for (const Block& b : src.blocks) {
    Block nb;
    for (int p : b) nb.push_back(img[p]);
    std::sort(nb.begin(), nb.end());
    dst.blocks.push_back(nb);
  }
}

bool factors_disjoint(const OneFactor& a, const OneFactor& b) {
  std::set<Edge> ea(a.edges.begin(), a.edges.end());
  for (auto& e : b.edges)
    if (ea.count(e)) return false;
  return true;
}

// Perfect matching in the "disjointness" bipartite graph via Kuhn's.
std::vector<int> align_factors(const std::vector<OneFactor>& f1,
                               const std::vector<OneFactor>& f2) {
  int s = (int)f1.size();
  std::vector<std::vector<int>> ok(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (factors_disjoint(f1[i], f2[j])) ok[i].push_back(j);
  std::vector<int> match_r(s, -1), match_l(s, -1);
  std::function<bool(int, std::vector<bool>&)> try_kuhn = [&](int i, std::vector<bool>& used) {
    for (int j : ok[i]) {
      if (used[j]) continue;
      used[j] = true;
      if (match_r[j] == -1 || try_kuhn(match_r[j], used)) {
        match_r[j] = i;
        match_l[i] = j;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < s; ++i) {
    std::vector<bool> used(s, false);
    if (!try_kuhn(i, used))
      fail(Errc::factor_alignment, "no disjoint pairing of leave factors");
  }
  return match_l;
}

}  // namespace

DesignPair Provider::pair_by_sizes(const std::vector<int>& sizes) {
  for (int s : sizes)
    if (s <= 0) fail(Errc::precondition, "pair_by_sizes: nonpositive size");
  std::map<int, int> cnt;
  for (int s : sizes) cnt[s]++;
  int g, t, u, upos = -1;
  if (cnt.size() == 1) {
    g = sizes[0];
    t = (int)sizes.size();
    u = 0;
  } else if (cnt.size() == 2) {
    auto it = cnt.begin(), jt = std::next(it);
    if (jt->second == 1) {
      u = jt->first;
      g = it->first;
    } else if (it->second == 1) {
      u = it->first;
      g = jt->first;
    } else {
      fail(Errc::unsupported, "pair_by_sizes: ambiguous type");
    }
    t = (int)sizes.size() - 1;
    for (size_t i = 0; i < sizes.size(); ++i)
      if (sizes[i] == u) upos = (int)i;
  } else {
    fail(Errc::unsupported, "pair_by_sizes: more than two distinct sizes");
  }
  DesignPair p = pair(g, t, u);
  // Map shell layout onto group runs in the requested order.
  int total = 0;
  std::vector<int> run_start(sizes.size());
  for (size_t i = 0; i < sizes.size(); ++i) {
    run_start[i] = total;
    total += sizes[i];
  }
  std::vector<int> img(p.first.n, -1);
  int short_seen = 0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if ((int)i == upos) {
      for (int l = 0; l < u; ++l) img[g * t + l] = run_start[i] + l;
    } else {
      int j = short_seen++;
      for (int k = 0; k < g; ++k) img[k * t + j] = run_start[i] + k;
    }
  }
  DesignPair out = relabel(p, img, total);
  out.first.groups.clear();
  for (size_t i = 0; i < sizes.size(); ++i) {
    std::vector<int> grp(sizes[i]);
    std::iota(grp.begin(), grp.end(), run_start[i]);
    out.first.groups.push_back(grp);
  }
  out.second.groups = out.first.groups;
  out.first.finalize();
  out.second.finalize();
  return out;
}

DesignPair weighting(const Design& master, const WeightAssignment& w, Provider& prov) {
  if ((int)w.weights.size() != master.n)
    fail(Errc::precondition, "weighting: weight vector size mismatch");
  std::vector<int> start(master.n, 0);
  int total = 0;
  for (int x = 0; x < master.n; ++x) {
    start[x] = total;
    total += w.weights[x];
  }
  Design shell;
  shell.n = total;
  for (auto& grp : master.groups) {
    std::vector<int> ng;
    for (int x : grp)
      for (int k = 0; k < w.weights[x]; ++k) ng.push_back(start[x] + k);
    if (!ng.empty()) shell.groups.push_back(ng);
  }
  shell.finalize();
  Design d1 = shell, d2 = shell;
  for (const Block& A : master.blocks) {
    std::vector<int> nz;
    for (int x : A)
      if (w.weights[x] > 0) nz.push_back(x);
    if (nz.size() <= 1) continue;
    if (nz.size() == 2)
      fail(Errc::precondition, "weighting: block with exactly two weighted points");
    std::vector<int> sizes;
    std::vector<std::vector<int>> target;
    for (int x : nz) {
      sizes.push_back(w.weights[x]);
      std::vector<int> pts(w.weights[x]);
      std::iota(pts.begin(), pts.end(), start[x]);
      target.push_back(pts);
    }
    DesignPair ing = prov.pair_by_sizes(sizes);
    auto img = embed_image(ing.first, target);
    append_blocks(d1, ing.first, img);
    append_blocks(d2, ing.second, img);
  }
  return {d1, d2};
}

DesignPair fill_all_groups(const DesignPair& outer, int s, int u_fill, Provider& prov) {
  const Design& o = outer.first;
  if (o.groups.empty()) fail(Errc::precondition, "fill: empty outer");
  int last = (int)o.groups.size() - 1;
  int n = o.n;
  Design shell;
  shell.n = n + u_fill;
  std::vector<int> Y(u_fill);
  std::iota(Y.begin(), Y.end(), n);
  for (int i = 0; i < last; ++i) {
    const auto& H = o.groups[i];
    if ((int)H.size() % s != 0) fail(Errc::precondition, "fill: group size not divisible");
    for (size_t off = 0; off < H.size(); off += s)
      shell.groups.push_back(std::vector<int>(H.begin() + off, H.begin() + off + s));
  }
  {
    std::vector<int> lastg = o.groups[last];
    lastg.insert(lastg.end(), Y.begin(), Y.end());
    shell.groups.push_back(lastg);
  }
  shell.finalize();
  Design d1 = shell, d2 = shell;
  d1.blocks = o.blocks;
  d2.blocks = outer.second.blocks;
  for (int i = 0; i < last; ++i) {
    const auto& H = o.groups[i];
    int gi = (int)H.size();
    DesignPair ing = prov.pair(s, gi / s, u_fill);
    std::vector<std::vector<int>> target;
    for (int j = 0; j < gi / s; ++j)
      target.push_back(std::vector<int>(H.begin() + (size_t)j * s, H.begin() + (size_t)(j + 1) * s));
    if (u_fill > 0) target.push_back(Y);
    auto img = embed_image(ing.first, target);
    append_blocks(d1, ing.first, img);
    append_blocks(d2, ing.second, img);
  }
  return {d1, d2};
}

DesignPair fill_long_group(const DesignPair& outer, int s_cnt, int x, Provider& prov) {
  if (s_cnt == 0) return outer;
  const Design& o = outer.first;
  int last = (int)o.groups.size() - 1;
  int g = (int)o.groups[0].size();
  const auto& G = o.groups[last];
  if ((int)G.size() != s_cnt * g + x) fail(Errc::precondition, "fill long: size mismatch");
  Design shell;
  shell.n = o.n;
  for (int i = 0; i < last; ++i) shell.groups.push_back(o.groups[i]);
  std::vector<std::vector<int>> target;
  for (int j = 0; j < s_cnt; ++j) {
    std::vector<int> chunk(G.begin() + (size_t)j * g, G.begin() + (size_t)(j + 1) * g);
    target.push_back(chunk);
    shell.groups.push_back(chunk);
  }
  std::vector<int> xchunk(G.begin() + (size_t)s_cnt * g, G.end());
  if (x > 0) {
    target.push_back(xchunk);
    shell.groups.push_back(xchunk);
  }
  shell.finalize();
  Design d1 = shell, d2 = shell;
  d1.blocks = o.blocks;
  d2.blocks = outer.second.blocks;
  DesignPair ing = prov.pair(g, s_cnt, x);
  auto img = embed_image(ing.first, target);
  append_blocks(d1, ing.first, img);
  append_blocks(d2, ing.second, img);
  return {d1, d2};
}

DesignPair inflate_by_t(const Design& base, int t, int u, Provider& prov) {
  if (t < 4) fail(Errc::precondition, "inflation needs t >= 4");
  int N = base.n * t + u;
  Design shell;
  shell.n = N;
  for (int i = 0; i < t; ++i) {
    std::vector<int> col;
    for (int x = 0; x < base.n; ++x) col.push_back(x * t + i);
    shell.groups.push_back(col);
  }
  std::vector<int> U(u);
  std::iota(U.begin(), U.end(), base.n * t);
  if (u > 0) shell.groups.push_back(U);
  shell.finalize();
  Design d1 = shell, d2 = shell;

  auto itd = disjoint_itd_pair(t, /*keep_idempotent=*/false);
  for (const Block& B : base.blocks) {
    if (B.size() != 3) fail(Errc::precondition, "inflation master must have 3-blocks");
    std::vector<std::vector<int>> target;
    for (int c = 0; c < 3; ++c) {
      std::vector<int> row;
      for (int v = 0; v < t; ++v) row.push_back(B[c] * t + v);
      target.push_back(row);
    }
    auto img = embed_image(itd.first.base, target);
    append_blocks(d1, itd.first.base, img);
    append_blocks(d2, itd.second.base, img);
  }
  for (auto& G : base.groups) {
    DesignPair ing = prov.pair((int)G.size(), t, u);
    std::vector<std::vector<int>> target;
    for (int j = 0; j < t; ++j) {
      std::vector<int> col;
      for (int i = 0; i < (int)G.size(); ++i) col.push_back(G[i] * t + j);
      target.push_back(col);
    }
    if (u > 0) target.push_back(U);
    auto img = embed_image(ing.first, target);
    append_blocks(d1, ing.first, img);
    append_blocks(d2, ing.second, img);
  }
  return {d1, d2};
}

DesignPair extend_by_onefactors(const Design& d1, const Design& d2,
                                const std::vector<OneFactor>& f1,
                                const std::vector<OneFactor>& f2, bool auto_align) {
  if (d1.n != d2.n || d1.groups != d2.groups)
    fail(Errc::precondition, "extend: designs disagree on points or groups");
  if (f1.size() != f2.size()) fail(Errc::precondition, "extend: factor count mismatch");
  int s = (int)f1.size();
  Design a = d1, b = d2;
  if (s == 0) {
    a.finalize();
    b.finalize();
    return {a, b};
  }
  std::set<int> V;
  for (auto& e : f1[0].edges) {
    V.insert(e.first);
    V.insert(e.second);
  }
  auto covers_v = [&](const OneFactor& f) {
    std::set<int> c;
    for (auto& e : f.edges) {
      c.insert(e.first);
      c.insert(e.second);
    }
    return c == V && f.edges.size() * 2 == V.size();
  };
  for (auto& f : f1)
    if (!covers_v(f)) fail(Errc::precondition, "extend: factor is not a 1-factor of V");
  for (auto& f : f2)
    if (!covers_v(f)) fail(Errc::precondition, "extend: factor is not a 1-factor of V");

  std::vector<OneFactor> g2 = f2;
  bool aligned = true;
  for (int i = 0; i < s; ++i)
    if (!factors_disjoint(f1[i], g2[i])) aligned = false;
  if (!aligned) {
    if (!auto_align) fail(Errc::factor_alignment, "aligned factors intersect");
    auto perm = align_factors(f1, f2);
    for (int i = 0; i < s; ++i) g2[i] = f2[perm[i]];
  }

  // The long group is the one disjoint from V (created when absent).
  int longg = -1;
  for (size_t gi = 0; gi < a.groups.size(); ++gi) {
    bool hit = false;
    for (int p : a.groups[gi])
      if (V.count(p)) hit = true;
    if (!hit) {
      if (longg != -1) fail(Errc::precondition, "extend: ambiguous long group");
      longg = (int)gi;
    }
  }
  int base = a.n;
  a.n = b.n = base + s;
  std::vector<int> fresh(s);
  std::iota(fresh.begin(), fresh.end(), base);
  if (longg == -1) {
    a.groups.push_back(fresh);
    b.groups.push_back(fresh);
  } else {
    for (int p : fresh) {
      a.groups[longg].push_back(p);
      b.groups[longg].push_back(p);
    }
  }
  for (int i = 0; i < s; ++i) {
    for (auto& [x, y] : f1[i].edges) {
      Block nb{base + i, x, y};
      std::sort(nb.begin(), nb.end());
      a.blocks.push_back(nb);
    }
    for (auto& [x, y] : g2[i].edges) {
      Block nb{base + i, x, y};
      std::sort(nb.begin(), nb.end());
      b.blocks.push_back(nb);
    }
  }
  a.finalize();
  b.finalize();
  return {a, b};
}

namespace {

// Factor over offset i of the row pairs prescribed by a Z_g 1-factor.
OneFactor offset_factor(const OneFactor& zfac, int g, int t, int i) {
  OneFactor out;
  (void)g;
  for (auto& [za, zb] : zfac.edges)
    for (int l = 0; l < t; ++l) {
      int p = za * t + l, q = zb * t + (l + i) % t;
      out.edges.push_back({std::min(p, q), std::max(p, q)});
    }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

struct StarterCtx {
  int g, t;
  std::array<int, 3> pts;   // starter block values in Z_g
  std::array<int, 3> dif;   // directed differences: pts[c'] - pts[c] patterns
};

// Identify which ordered row pair realizes the edge {za,zb}; returns (c, c',
// x) with za = pts[c]+x meaning the unordered mapping.
struct RowPairHit {
  int c, cp, x;
};

RowPairHit locate_edge(const StarterCtx& sc, int za, int zb) {
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  int g = sc.g;
  for (auto& pr : pairs) {
    int d = ((sc.pts[pr[1]] - sc.pts[pr[0]]) % g + g) % g;
    if (((zb - za) % g + g) % g == d) return {pr[0], pr[1], ((za - sc.pts[pr[0]]) % g + g) % g};
    if (((za - zb) % g + g) % g == d) return {pr[0], pr[1], ((zb - sc.pts[pr[0]]) % g + g) % g};
  }
  fail(Errc::internal_gap, "leave edge not generated by the starter");
}

}  // namespace

DesignPair leave_complete_even_g(int g, int t, int r, int m, int v_ing, Provider& prov) {
  if (g % 2 != 0 || g < 4) fail(Errc::precondition, "even flavor needs even g >= 4");
  if (t < 4 || t == 6 || t == 10) fail(Errc::precondition, "t outside the RITD range");
  if (m < 0 || m > t - 1) fail(Errc::precondition, "m out of range");
  if (r == g - 1 && m != 0) fail(Errc::precondition, "trivial leave forces m = 0");
  if (v_ing < 0 || v_ing > 2 * (t - 1)) fail(Errc::precondition, "v out of range");

  Design shell = make_gtu_shell(g, t, v_ing);
  Design d1 = shell, d2 = shell;

  std::vector<std::array<int, 3>> starters;
  std::vector<DifferenceTriple> triples;
  if (r < g - 1) {
    auto cps = cyclic_partial_sts(g, r);
    starters = cps.starters;
    triples = cps.triples;
    // Put a starter holding a good difference first.
    for (size_t i = 0; i < triples.size(); ++i) {
      auto& tr = triples[i];
      bool good = false;
      for (int d : {tr.a, tr.b, tr.c})
        if ((g / std::gcd(d, g)) % 2 == 0) good = true;
      if (good) {
        std::swap(starters[0], starters[i]);
        std::swap(triples[0], triples[i]);
        break;
      }
    }
  }
  std::set<int> covered;
  for (auto& tr : triples) {
    covered.insert(tr.a);
    covered.insert(tr.b);
    covered.insert(tr.c);
  }
  CirculantSpec leave_spec;
  leave_spec.v = g;
  for (int d = 1; 2 * d <= g; ++d)
    if (!covered.count(d)) leave_spec.D.insert(d);
  OneFactorization F = circulant_one_factorization(leave_spec);
  if ((int)F.factors.size() != r)
    fail(Errc::internal_gap, "leave of the cyclic partial STS is not r-regular");

  // Edge designs along F_1.
  DesignPair ing2 = prov.pair(2, t, v_ing);
  for (auto& [za, zb] : F.factors[0].edges) {
    std::vector<std::vector<int>> target;
    for (int j = 0; j < t; ++j) target.push_back({za * t + j, zb * t + j});
    if (v_ing > 0) {
      std::vector<int> lg(v_ing);
      std::iota(lg.begin(), lg.end(), g * t);
      target.push_back(lg);
    }
    auto img = embed_image(ing2.first, target);
    append_blocks(d1, ing2.first, img);
    append_blocks(d2, ing2.second, img);
  }

  // Starter expansions.
  auto dev_itd = [&](const Design& itd_base, const std::array<int, 3>& st, Design& dst) {
    for (int x = 0; x < g; ++x) {
      std::vector<int> img(itd_base.n);
      for (int c = 0; c < 3; ++c)
        for (int v = 0; v < t; ++v) img[c * t + v] = ((st[c] + x) % g) * t + v;
      append_blocks(dst, itd_base, img);
    }
  };
  std::pair<ItdDesign, ItdDesign> ritd;
  bool have_ritd = false;
  for (size_t i = 0; i < starters.size(); ++i) {
    if (i == 0 && m > 0) {
      ritd = disjoint_ritd_pair(t);
      have_ritd = true;
      // Keep classes m+1..t-1 (class 0 is idempotent, classes 1..m deleted).
      for (int k = m + 1; k < t; ++k) {
        Design ca, cb;
        ca.n = cb.n = 3 * t;
        ca.blocks = ritd.first.parallel_classes[k];
        cb.blocks = ritd.second.parallel_classes[k];
        dev_itd(ca, starters[0], d1);
        dev_itd(cb, starters[0], d2);
      }
    } else {
      auto itd = disjoint_itd_pair(t, false);
      dev_itd(itd.first.base, starters[i], d1);
      dev_itd(itd.second.base, starters[i], d2);
    }
  }

  // Leave factors.
  std::vector<OneFactor> fac1, fac2;
  for (int j = 1; j < r; ++j)
    for (int i = 1; i < t; ++i) {
      OneFactor f = offset_factor(F.factors[j], g, t, i);
      fac1.push_back(f);
      fac2.push_back(f);
    }
  if (m > 0) {
    StarterCtx sc{g, t, starters[0], {}};
    CirculantSpec s1spec;
    s1spec.v = g;
    s1spec.D = {triples[0].a, triples[0].b, triples[0].c};
    OneFactorization H = circulant_one_factorization(s1spec);
    if ((int)H.factors.size() != 6) fail(Errc::internal_gap, "starter class should give 6 factors");
    for (int k = 1; k <= m; ++k) {
      for (int side = 0; side < 2; ++side) {
        const auto& cls = (side == 0 ? ritd.first : ritd.second).parallel_classes[k];
        // Column maps per ordered row pair.
        std::map<std::pair<int, int>, std::vector<int>> colmap;
        for (auto& rp : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}})
          colmap[rp] = std::vector<int>(t, -1);
        for (const Block& b : cls) {
          int col[3];
          for (int p : b) col[p / t] = p % t;
          colmap[{0, 1}][col[0]] = col[1];
          colmap[{0, 2}][col[0]] = col[2];
          colmap[{1, 2}][col[1]] = col[2];
        }
        for (auto& Hl : H.factors) {
          OneFactor f;
          for (auto& [za, zb] : Hl.edges) {
            auto hit = locate_edge(sc, za, zb);
            int zc = (sc.pts[hit.c] + hit.x) % g;
            int zcp = (sc.pts[hit.cp] + hit.x) % g;
            auto& cm = colmap[{hit.c, hit.cp}];
            for (int col = 0; col < t; ++col) {
              int p = zc * t + col, q = zcp * t + cm[col];
              f.edges.push_back({std::min(p, q), std::max(p, q)});
            }
          }
          std::sort(f.edges.begin(), f.edges.end());
          (side == 0 ? fac1 : fac2).push_back(f);
        }
      }
    }
  }
  if ((int)fac1.size() != (r - 1) * (t - 1) + 6 * m)
    fail(Errc::internal_gap, "unexpected leave factor count");
  return extend_by_onefactors(d1, d2, fac1, fac2);
}

namespace {

// Family of developed pairs for one deleted class, one letter pair and one
// column parity pattern (doubling construction).
OneFactor doubling_family(int g, int t, const std::array<int, 3>& st,
                          const std::vector<std::array<int, 3>>& qcols, int c, int cp,
                          int eps, int epsp) {
  OneFactor f;
  for (auto& cols : qcols)
    for (int x = 0; x < g; ++x) {
      int p = ((st[c] + x) % g) * t + (2 * cols[c] + eps) % t;
      int q = ((st[cp] + x) % g) * t + (2 * cols[cp] + epsp) % t;
      f.edges.push_back({std::min(p, q), std::max(p, q)});
    }
  std::sort(f.edges.begin(), f.edges.end());
  f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
  return f;
}

void push_mixed_families(int g, int t, const std::array<int, 3>& st,
                         const std::vector<std::array<int, 3>>& qcols,
                         std::vector<OneFactor>& out) {
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : pairs) {
    out.push_back(doubling_family(g, t, st, qcols, pr[0], pr[1], 0, 1));
    out.push_back(doubling_family(g, t, st, qcols, pr[0], pr[1], 1, 0));
  }
}

void push_pure_families(int g, int t, const std::array<int, 3>& st,
                        const std::vector<std::array<int, 3>>& qcols,
                        std::vector<OneFactor>& out) {
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : pairs) {
    OneFactor a = doubling_family(g, t, st, qcols, pr[0], pr[1], 0, 0);
    OneFactor b = doubling_family(g, t, st, qcols, pr[0], pr[1], 1, 1);
    std::vector<Edge> uni = a.edges;
    uni.insert(uni.end(), b.edges.begin(), b.edges.end());
    std::sort(uni.begin(), uni.end());
    std::vector<Edge> m0, m1;
    if (!split_even_cycles(uni, m0, m1))
      fail(Errc::internal_gap, "pure parity family has odd cycles");
    out.push_back({m0});
    out.push_back({m1});
  }
}

}  // namespace

DesignPair leave_complete_odd_g(int g, int t, int r, int m, int v_ing, Provider& prov) {
  if (t < 4 || t % 2 != 0) fail(Errc::precondition, "odd flavor needs even t >= 4");
  if (v_ing < 1 || v_ing > t - 1) fail(Errc::precondition, "v out of range");
  if (m < 0 || m > t - 1) fail(Errc::precondition, "m out of range");
  if (r == g - 1 && m != 0) fail(Errc::precondition, "trivial leave forces m = 0");

  Design shell = make_gtu_shell(g, t, v_ing);
  Design d1 = shell, d2 = shell;

  // Row designs of type 1^t v^1.
  DesignPair row = prov.pair(1, t, v_ing);
  for (int z = 0; z < g; ++z) {
    std::vector<std::vector<int>> target;
    for (int j = 0; j < t; ++j) target.push_back({z * t + j});
    std::vector<int> lg(v_ing);
    std::iota(lg.begin(), lg.end(), g * t);
    target.push_back(lg);
    auto img = embed_image(row.first, target);
    append_blocks(d1, row.first, img);
    append_blocks(d2, row.second, img);
  }

  std::vector<std::array<int, 3>> starters;
  std::vector<DifferenceTriple> triples;
  if (r < g - 1) {
    auto cps = cyclic_partial_sts(g, r);
    starters = cps.starters;
    triples = cps.triples;
  }
  if (m > 0 && starters.empty())
    fail(Errc::precondition, "m > 0 needs a starter block");

  auto dev_blocks = [&](const std::vector<Block>& blocks, const std::array<int, 3>& st,
                        Design& dst) {
    for (int x = 0; x < g; ++x)
      for (const Block& b : blocks) {
        Block nb;
        for (int p : b) nb.push_back(((st[p / t] + x) % g) * t + p % t);
        std::sort(nb.begin(), nb.end());
        dst.blocks.push_back(nb);
      }
  };

  std::vector<OneFactor> fac1, fac2;

  for (size_t i = 0; i < starters.size(); ++i) {
    if (i > 0 || m == 0) {
      auto itd = disjoint_itd_pair(t, false);
      dev_blocks(itd.first.base.blocks, starters[i], d1);
      dev_blocks(itd.second.base.blocks, starters[i], d2);
      continue;
    }
    // Starter S_1 absorbs the 6m deleted factors. Class deletion handles the
    // orders whose half does not carry an RITD; the halved-column doubling
    // handles the rest.
    const auto& st = starters[0];
    bool use_deletion = (t == 4 || t == 12 || t == 20);
    if (use_deletion) {
      // Delete m parallel classes of a disjoint RITD(3,t) pair; a class is
      // eligible when all three of its developed letter-pair families split
      // into matchings.
      auto ritd = disjoint_ritd_pair(t);
      auto family_edges = [&](const std::vector<Block>& cls, int c, int cp) {
        OneFactor f;
        for (int x = 0; x < g; ++x)
          for (const Block& b : cls) {
            int col[3];
            for (int p : b) col[p / t] = p % t;
            int p = ((st[c] + x) % g) * t + col[c];
            int q = ((st[cp] + x) % g) * t + col[cp];
            f.edges.push_back({std::min(p, q), std::max(p, q)});
          }
        std::sort(f.edges.begin(), f.edges.end());
        f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
        return f;
      };
      static const int rp[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      std::vector<int> eligible;
      for (int k = 1; k < t; ++k) {
        bool ok = true;
        for (int side = 0; side < 2 && ok; ++side) {
          const auto& cls = (side ? ritd.second : ritd.first).parallel_classes[k];
          for (auto& pr : rp) {
            std::vector<Edge> uni = family_edges(cls, pr[0], pr[1]).edges;
            std::vector<Edge> m0, m1;
            if (!split_even_cycles(uni, m0, m1)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) eligible.push_back(k);
      }
      if ((int)eligible.size() < m)
        fail(Errc::unsupported, "not enough even-cycle classes for m = " + std::to_string(m));
      std::set<int> deleted(eligible.begin(), eligible.begin() + m);
      for (int k = 1; k < t; ++k) {
        if (deleted.count(k)) continue;
        dev_blocks(ritd.first.parallel_classes[k], st, d1);
        dev_blocks(ritd.second.parallel_classes[k], st, d2);
      }
      for (int k : deleted)
        for (int side = 0; side < 2; ++side) {
          const auto& cls = (side ? ritd.second : ritd.first).parallel_classes[k];
          for (auto& pr : rp) {
            std::vector<Edge> uni = family_edges(cls, pr[0], pr[1]).edges;
            std::vector<Edge> m0, m1;
            split_even_cycles(uni, m0, m1);
            (side ? fac2 : fac1).push_back({m0});
            (side ? fac2 : fac1).push_back({m1});
          }
        }
    } else {
      // Doubling: RITD(3,t/2) on the even columns; class 0 aligned.
      auto half = disjoint_ritd_pair(t / 2).first;
      int half_t = t / 2;
      // Class column triples (a-col, b-col, c-col) per block, halved scale.
      auto class_cols = [&](int k) {
        std::vector<std::array<int, 3>> cols;
        for (const Block& b : half.parallel_classes[k]) {
          std::array<int, 3> c{};
          for (int p : b) c[p / half_t] = p % half_t;
          cols.push_back(c);
        }
        return cols;
      };
      int M = (m % 2 == 1) ? (t - m + 1) / 2 : (t - m + 2) / 2;
      int gadget_class = (m % 2 == 0 && m >= 2) ? 1 : -1;
      // Classes are indexed 0..t/2-1 with class 0 idempotent; full TD
      // expansion on classes (gadget,M-1]... indices here: 0 silent, gadget
      // (m even) at 1, full up to M-1, empty from M.
      auto td_expand = [&](const std::vector<std::array<int, 3>>& cols, int which,
                           Design& dst) {
        // which = 0: blocks of L=[[0,1],[1,0]]; which = 1: the complement.
        for (auto& c : cols)
          for (int x = 0; x < g; ++x)
            for (int ea = 0; ea < 2; ++ea)
              for (int eb = 0; eb < 2; ++eb) {
                int ec = (ea ^ eb) ^ which;
                Block nb{((st[0] + x) % g) * t + 2 * c[0] + ea,
                         ((st[1] + x) % g) * t + 2 * c[1] + eb,
                         ((st[2] + x) % g) * t + 2 * c[2] + ec};
                std::sort(nb.begin(), nb.end());
                dst.blocks.push_back(nb);
              }
      };
      for (int k = 1; k < half_t; ++k) {
        auto cols = class_cols(k);
        if (k == gadget_class) {
          // design 0: {eee, ooo}; design 1: {eoo, oee}.
          for (auto& c : cols)
            for (int x = 0; x < g; ++x) {
              auto mkblk = [&](int ea, int eb, int ec) {
                Block nb{((st[0] + x) % g) * t + 2 * c[0] + ea,
                         ((st[1] + x) % g) * t + 2 * c[1] + eb,
                         ((st[2] + x) % g) * t + 2 * c[2] + ec};
                std::sort(nb.begin(), nb.end());
                return nb;
              };
              d1.blocks.push_back(mkblk(0, 0, 0));
              d1.blocks.push_back(mkblk(1, 1, 1));
              d2.blocks.push_back(mkblk(0, 1, 1));
              d2.blocks.push_back(mkblk(1, 0, 0));
            }
        } else if (k < M) {
          td_expand(cols, 0, d1);
          td_expand(cols, 1, d2);
        }
        // k >= M: emptied entirely.
      }
      // Leave factors.
      auto aligned_cols = class_cols(0);
      push_mixed_families(g, t, st, aligned_cols, fac1);
      push_mixed_families(g, t, st, aligned_cols, fac2);
      if (gadget_class != -1) {
        auto cols = class_cols(gadget_class);
        push_mixed_families(g, t, st, cols, fac1);  // design 0 leaves mixed
        // design 1 leaves: ab pure, ac pure, bc mixed
        OneFactor fbc0 = doubling_family(g, t, st, cols, 1, 2, 0, 1);
        OneFactor fbc1 = doubling_family(g, t, st, cols, 1, 2, 1, 0);
        std::vector<OneFactor> tmp;
        push_pure_families(g, t, st, cols, tmp);  // ab, ab, ac, ac, bc, bc
        fac2.push_back(tmp[0]);
        fac2.push_back(tmp[1]);
        fac2.push_back(tmp[2]);
        fac2.push_back(tmp[3]);
        fac2.push_back(fbc0);
        fac2.push_back(fbc1);
      }
      for (int k = std::max(M, 1); k < half_t; ++k) {
        if (k == gadget_class) continue;
        auto cols = class_cols(k);
        push_mixed_families(g, t, st, cols, fac1);
        push_pure_families(g, t, st, cols, fac1);
        push_mixed_families(g, t, st, cols, fac2);
        push_pure_families(g, t, st, cols, fac2);
      }
    }
  }

  // Part III: the cyclic leave crossed with all column offsets.
  std::set<int> covered;
  for (auto& tr : triples) {
    covered.insert(tr.a);
    covered.insert(tr.b);
    covered.insert(tr.c);
  }
  std::vector<int> verts(g * t);
  std::iota(verts.begin(), verts.end(), 0);
  for (int d = 1; 2 * d <= g; ++d) {
    if (covered.count(d)) continue;
    std::set<Edge> es;
    for (int z = 0; z < g; ++z)
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
          if (i == j) continue;
          int p = z * t + i, q = ((z + d) % g) * t + j;
          if (p != q) es.insert({std::min(p, q), std::max(p, q)});
        }
    std::vector<Edge> edges(es.begin(), es.end());
    std::string key = "leave3:" + std::to_string(g) + ":" + std::to_string(t) + ":" +
                      std::to_string(d);
    OneFactorization of = one_factorize(verts, edges, key);
    for (auto& f : of.factors) {
      fac1.push_back(f);
      fac2.push_back(f);
    }
  }

  if ((int)fac1.size() != r * (t - 1) + 6 * m)
    fail(Errc::internal_gap, "factor count " + std::to_string(fac1.size()) + " != " +
                                 std::to_string(r * (t - 1) + 6 * m));
  return extend_by_onefactors(d1, d2, fac1, fac2);
}

MostPlan plan_most(int g, int t, int u) {
  MostPlan plan;
  if (g <= 5 || t < 4) return plan;
  int g6 = g % 6, g24 = g % 24;
  bool t610 = (t == 6 || t == 10);
  int cond = 0;
  if (!t610 && (g24 == 2 || g24 == 8))
    cond = 1;
  else if (!t610 && (g24 == 14 || g24 == 20) && u >= 6 * (t - 1))
    cond = 2;
  else if (!t610 && g6 == 4 && u >= 2 * (t - 1))
    cond = 3;
  else if (g6 == 1)
    cond = 4;
  else if (g6 == 5 && u > 4 * (t - 1))
    cond = 5;
  else if (t610 && ((g24 == 2 || g24 == 8) && u > t - 1))
    cond = 6;
  else if (t610 && ((g24 == 14 || g24 == 20) && u > 7 * (t - 1)))
    cond = 6;
  else if (t610 && (g6 == 4 && u > 3 * (t - 1)))
    cond = 6;
  if (cond == 0) return plan;
  bool even_side = (g % 2 == 0) && !t610;
  if (!even_side && t % 2 != 0) return plan;  // the row flavor needs even t
  int rp = cps_base_regularity(g);
  if (even_side) {
    int x = ((u - (rp - 1) * (t - 1)) % 6 + 6) % 6;
    for (int r = g - 1; r >= rp; r -= 6) {
      if (r == g - 1) {
        int w = u - (g - 2) * (t - 1);
        if (w >= 0 && w <= 2 * (t - 1) && pair_admissible(2, t, w).admissible) {
          plan.ok = true;
          plan.even_side = true;
          plan.r = r;
          plan.m = 0;
          plan.x = w;
          plan.condition = cond;
          return plan;
        }
      } else {
        long long num = u - (long long)(r - 1) * (t - 1) - x;
        if (num < 0 || num % 6 != 0) continue;
        long long mm = num / 6;
        if (mm > t - 1) continue;
        if (!pair_admissible(2, t, x).admissible) continue;
        plan.ok = true;
        plan.even_side = true;
        plan.r = r;
        plan.m = (int)mm;
        plan.x = x;
        plan.condition = cond;
        return plan;
      }
    }
  } else {
    int x = ((u - rp * (t - 1)) % 6 + 6) % 6;
    for (int r = g - 1; r >= rp; r -= 6) {
      if (r == g - 1) {
        int w = u - (g - 1) * (t - 1);
        if (w >= 1 && w <= t - 1 && pair_admissible(1, t, w).admissible) {
          plan.ok = true;
          plan.r = r;
          plan.m = 0;
          plan.x = w;
          plan.condition = cond;
          return plan;
        }
      } else {
        long long num = u - (long long)r * (t - 1) - x;
        if (num < 0 || num % 6 != 0) continue;
        long long mm = num / 6;
        if (mm > t - 1) continue;
        if (x < 1 || x > t - 1) continue;
        if (!pair_admissible(1, t, x).admissible) continue;
        plan.ok = true;
        plan.r = r;
        plan.m = (int)mm;
        plan.x = x;
        plan.condition = cond;
        return plan;
      }
    }
  }
  return plan;
}

DesignPair construct_most(int g, int t, int u, Provider& prov) {
  MostPlan plan = plan_most(g, t, u);
  if (!plan.ok) fail(Errc::unsupported, "spectrum lemma conditions not met");
  if (plan.even_side) return leave_complete_even_g(g, t, plan.r, plan.m, plan.x, prov);
  return leave_complete_odd_g(g, t, plan.r, plan.m, plan.x, prov);
}

}  // namespace gdd
