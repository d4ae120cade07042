#include "gdd/frames.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gdd/latin.hpp"
#include "gdd/oracle.hpp"
#include "gdd/recursive.hpp"

namespace gdd {

namespace {

// Point (x, col) on Z_g x I_3.
struct Frame {
  int g;
  int pt(int x, int col) const { return col * g + (((x % g) + g) % g); }
  Block pair(int x1, int c1, int x2, int c2) const {
    Block b{pt(x1, c1), pt(x2, c2)};
    std::sort(b.begin(), b.end());
    return b;
  }
  Block triple(int x1, int c1, int x2, int c2, int x3, int c3) const {
    Block b{pt(x1, c1), pt(x2, c2), pt(x3, c3)};
    std::sort(b.begin(), b.end());
    return b;
  }
};

using Class = std::vector<Block>;

Class sorted(Class c) {
  std::sort(c.begin(), c.end());
  return c;
}

// Base parallel classes.
Class class_S(const Frame& f, int i) {
  Class c;
  int g = f.g;
  for (int x = 0; x < g; ++x) {
    if (i <= g / 2 - 1)
      c.push_back(f.triple(x, 0, x + i, 1, x + 2 * i, 2));
    else
      c.push_back(f.triple(x, 0, x + i, 1, x + 2 * i + 1, 2));
  }
  return sorted(c);
}

Class class_M(const Frame& f, int which) {
  Class c;
  int g = f.g;
  int lo = which == 1 ? 0 : g / 2;
  for (int x = lo; x < lo + g / 2; ++x) {
    c.push_back(f.pair(x, 0, x - 1, 1));
    c.push_back(f.pair(x + g / 2, 0, x + g / 2 - 1, 2));
    c.push_back(f.pair(x + g / 2 - 1, 1, x - 1, 2));
  }
  return sorted(c);
}

// Transformation (A): S_{g/2-1} and M_w -> three pair classes.
std::array<Class, 3> transform_A(const Frame& f, int which) {
  int g = f.g;
  Class M = class_M(f, which);
  Class S = class_S(f, g / 2 - 1);
  Class m1, m2;
  if (which == 1) {
    for (int x = 0; x < g / 2; ++x) m1.push_back(f.pair(x, 0, x - 1, 1));
    for (int x = g / 2; x < g; ++x)
      if (x % 2 == 0) m2.push_back(f.pair(x, 0, x - 1, 2));
    for (int x = 0; x < g / 2; ++x)
      if (x % 2 == 0) m2.push_back(f.pair(x + g / 2 - 1, 1, x - 1, 2));
  } else {
    for (int x = g / 2; x < g; ++x) m1.push_back(f.pair(x, 0, x - 1, 1));
    for (int x = 0; x < g / 2; ++x)
      if (x % 2 == 1) m2.push_back(f.pair(x, 0, x - 1, 2));
    for (int x = g / 2; x < g; ++x)
      if (x % 2 == 1) m2.push_back(f.pair(x + g / 2 - 1, 1, x - 1, 2));
  }
  m1 = sorted(m1);
  m2 = sorted(m2);
  Class m3;
  std::set<Block> used(m1.begin(), m1.end());
  used.insert(m2.begin(), m2.end());
  for (auto& b : M)
    if (!used.count(b)) m3.push_back(b);
  std::array<Class, 3> parts{m1, m2, sorted(m3)};
  std::array<Class, 3> out;
  for (int l = 0; l < 3; ++l) {
    std::set<int> pts;
    for (auto& b : parts[l]) pts.insert(b.begin(), b.end());
    Class cl = parts[l];
    for (auto& B : S) {
      Block rest;
      int hits = 0;
      for (int p : B)
        if (pts.count(p))
          hits++;
        else
          rest.push_back(p);
      if (hits != 1) fail(Errc::internal_gap, "transform A: block meets part != once");
      cl.push_back(rest);
    }
    out[l] = sorted(cl);
  }
  return out;
}

// Transformation (B): S_i and S_{g/2+i} -> four pair classes E_{i,1..4}.
std::array<Class, 4> transform_B(const Frame& f, int i) {
  int g = f.g;
  Class e1, e2;
  for (int x = 0; x < g / 2; ++x) {
    e1.push_back(f.pair(2 * x, 0, 2 * x + i, 1));
    e1.push_back(f.pair(2 * x + 1, 0, 2 * x + 2 * i + 2, 2));
    e1.push_back(f.pair(2 * x + i + 1, 1, 2 * x + 2 * i + 1, 2));
    e2.push_back(f.pair(2 * x + 1, 0, 2 * x + g / 2 + i + 1, 1));
    e2.push_back(f.pair(2 * x, 0, 2 * x + 2 * i, 2));
    e2.push_back(f.pair(2 * x + g / 2 + i, 1, 2 * x + 2 * i + 1, 2));
  }
  auto shift1 = [&](const Class& c) {
    Class out;
    for (auto& b : c) {
      Block nb;
      for (int p : b) nb.push_back(f.pt(p % g + 1, p / g));
      std::sort(nb.begin(), nb.end());
      out.push_back(nb);
    }
    return sorted(out);
  };
  return {sorted(e1), sorted(e2), shift1(e1), shift1(e2)};
}

// Transformation (C): S_0 and M_1 -> three pair classes P_{0,1..3}.
std::array<Class, 3> transform_C(const Frame& f) {
  int g = f.g;
  Class M = class_M(f, 1);
  Class S = class_S(f, 0);
  Class m1, m2;
  for (int x = 0; x < g / 2; ++x) m1.push_back(f.pair(x + g / 2 - 1, 1, x - 1, 2));
  for (int x = g / 2; x < g; ++x)
    if (x % 2 == 0) m2.push_back(f.pair(x, 0, x - 1, 2));
  for (int x = 0; x < g / 2; ++x)
    if (x % 2 == 0) m2.push_back(f.pair(x, 0, x - 1, 1));
  m1 = sorted(m1);
  m2 = sorted(m2);
  Class m3;
  std::set<Block> used(m1.begin(), m1.end());
  used.insert(m2.begin(), m2.end());
  for (auto& b : M)
    if (!used.count(b)) m3.push_back(b);
  std::array<Class, 3> parts{m1, m2, sorted(m3)};
  std::array<Class, 3> out;
  for (int l = 0; l < 3; ++l) {
    std::set<int> pts;
    for (auto& b : parts[l]) pts.insert(b.begin(), b.end());
    Class cl = parts[l];
    for (auto& B : S) {
      Block rest;
      int hits = 0;
      for (int p : B)
        if (pts.count(p))
          hits++;
        else
          rest.push_back(p);
      if (hits != 1) fail(Errc::internal_gap, "transform C: block meets part != once");
      cl.push_back(rest);
    }
    out[l] = sorted(cl);
  }
  return out;
}

// Transformation (D): S_0 and S_{g-2} -> F_{1..4}.
std::array<Class, 4> transform_D(const Frame& f) {
  int g = f.g;
  Class f1, f2;
  for (int x = 0; x < g / 2; ++x) {
    f1.push_back(f.pair(2 * x + 1, 0, 2 * x - 1, 1));
    f1.push_back(f.pair(2 * x, 0, 2 * x, 2));
    f1.push_back(f.pair(2 * x, 1, 2 * x - 1, 2));
    f2.push_back(f.pair(2 * x, 0, 2 * x, 1));
    f2.push_back(f.pair(2 * x + 1, 0, 2 * x - 2, 2));
    f2.push_back(f.pair(2 * x + 1, 1, 2 * x + 1, 2));
  }
  auto shift1 = [&](const Class& c) {
    Class out;
    for (auto& b : c) {
      Block nb;
      for (int p : b) nb.push_back(f.pt(p % g + 1, p / g));
      std::sort(nb.begin(), nb.end());
      out.push_back(nb);
    }
    return sorted(out);
  };
  return {sorted(f1), sorted(f2), shift1(f1), shift1(f2)};
}

// Transformation (E): S_{g/2-2} and S_{g/2-1} -> H_{1..4}.
std::array<Class, 4> transform_E(const Frame& f) {
  int g = f.g;
  Class h1, h2;
  for (int x = 0; x < g / 2; ++x) {
    h1.push_back(f.pair(2 * x + 1, 0, 2 * x + g / 2 - 1, 1));
    h1.push_back(f.pair(2 * x, 0, 2 * x - 4, 2));
    h1.push_back(f.pair(2 * x + g / 2, 1, 2 * x - 1, 2));
    h2.push_back(f.pair(2 * x, 0, 2 * x + g / 2 - 1, 1));
    h2.push_back(f.pair(2 * x + 1, 0, 2 * x - 1, 2));
    h2.push_back(f.pair(2 * x + g / 2 - 2, 1, 2 * x - 4, 2));
  }
  auto shift1 = [&](const Class& c) {
    Class out;
    for (auto& b : c) {
      Block nb;
      for (int p : b) nb.push_back(f.pt(p % g + 1, p / g));
      std::sort(nb.begin(), nb.end());
      out.push_back(nb);
    }
    return sorted(out);
  };
  return {sorted(h1), sorted(h2), shift1(h1), shift1(h2)};
}

Class apply_map(const Class& c, const std::function<int(int)>& phi) {
  Class out;
  for (auto& b : c) {
    Block nb;
    for (int p : b) nb.push_back(phi(p));
    std::sort(nb.begin(), nb.end());
    out.push_back(nb);
  }
  return sorted(out);
}

bool classes_disjoint(const Class& a, const Class& b) {
  std::set<Block> sa(a.begin(), a.end());
  for (auto& x : b)
    if (sa.count(x)) return false;
  return true;
}

bool is_parallel_class(const Class& c, int n) {
  std::set<int> pts;
  size_t total = 0;
  for (auto& b : c) {
    pts.insert(b.begin(), b.end());
    total += b.size();
  }
  return (int)pts.size() == n && total == pts.size();
}

ResolvableFramePair assemble(int g, int u, std::vector<Class> pairs1,
                             std::vector<Class> pairs2, std::vector<Class> triples1,
                             std::vector<Class> triples2, Class common) {
  ResolvableFramePair out;
  out.g = g;
  out.u = u;
  out.common_class = common;
  Design shell = make_shell({g, g, g});
  out.first = shell;
  out.second = shell;
  auto feed = [&](Design& d, const std::vector<Class>& ps, const std::vector<Class>& ts) {
    for (auto& c : ps)
      for (auto& b : c) d.blocks.push_back(b);
    for (auto& c : ts)
      for (auto& b : c) d.blocks.push_back(b);
  };
  feed(out.first, pairs1, triples1);
  feed(out.second, pairs2, triples2);
  out.pair_classes1 = pairs1;
  out.pair_classes2 = pairs2;
  out.triple_classes1 = triples1;
  out.triple_classes2 = triples2;

  // Machine checks of the three frame conditions.
  if ((int)pairs1.size() != u || (int)pairs2.size() != u ||
      (int)triples1.size() != g - u / 2 || (int)triples2.size() != g - u / 2)
    fail(Errc::internal_gap, "frame: class counts off");
  for (auto* side : {&pairs1, &pairs2})
    for (auto& c : *side)
      if (!is_parallel_class(c, 3 * g)) fail(Errc::internal_gap, "frame: pair class not parallel");
  for (auto* side : {&triples1, &triples2})
    for (auto& c : *side)
      if (!is_parallel_class(c, 3 * g)) fail(Errc::internal_gap, "frame: triple class not parallel");
  for (int i = 0; i < u; ++i)
    if (!classes_disjoint(pairs1[i], pairs2[i]))
      fail(Errc::internal_gap, "frame: indexed pair classes intersect");
  std::set<Block> t1, t2;
  for (auto& c : triples1) t1.insert(c.begin(), c.end());
  for (auto& c : triples2) t2.insert(c.begin(), c.end());
  std::vector<Block> inter;
  std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(inter));
  std::set<Block> want(common.begin(), common.end());
  if (std::set<Block>(inter.begin(), inter.end()) != want)
    fail(Errc::internal_gap, "frame: shared triples differ from the declared class");
  GroupType ty = GroupType::of(g, 3, 0);
  for (auto* d : {&out.first, &out.second}) {
    auto rep = verify_gdd(*d, ty, {2, 3});
    if (!rep.valid) fail(Errc::internal_gap, "frame: not a {2,3}-GDD");
  }
  return out;
}

}  // namespace

ResolvableFramePair frame_pair(int g, int u) {
  if (g % 2 || u % 2 || u < 0 || u > 2 * g || (u == 0 && (g == 2 || g == 6)))
    fail(Errc::precondition, "frame_pair parameter range");
  Frame f{g};
  if (u == 0) {
    // Resolvable pair from two MOLS; the second design shifts column 2 by 1.
    auto [L1, L2] = mols_pair(g);
    std::vector<Class> t1(g), t2(g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        int c = L2.cells[i][j];
        t1[c].push_back(f.triple(i, 0, j, 1, L1.cells[i][j], 2));
        t2[c].push_back(f.triple(i, 0, j, 1, L1.cells[i][j] + 1, 2));
      }
    for (auto& c : t1) c = sorted(c);
    for (auto& c : t2) c = sorted(c);
    return assemble(g, 0, {}, {}, t1, t2, {});
  }

  auto phi = [&](int p) {
    int col = p / g, x = p % g;
    if (col == 2) x = (x + 1) % g;
    return col * g + x;
  };

  std::vector<Class> pairs1, triples1;
  std::set<int> consumed;  // S-indices eaten by transformations
  if (u % 4 == 2) {
    // u/2 odd
    pairs1.push_back(class_M(f, 1));
    pairs1.push_back(class_M(f, 2));
    std::vector<Class> p2_for_pairing{class_M(f, 2), class_M(f, 1)};
    for (int i = 0; u >= 6 && i <= (u - 6) / 4; ++i) {
      auto E = transform_B(f, i);
      consumed.insert(i);
      consumed.insert(g / 2 + i);
      for (int k = 0; k < 4; ++k) pairs1.push_back(E[k]);
      for (int k = 0; k < 4; ++k) p2_for_pairing.push_back(E[(k + 2) % 4]);
    }
    for (int i = 0; i <= g - 2; ++i)
      if (!consumed.count(i)) triples1.push_back(class_S(f, i));
    std::vector<Class> pairs2, triples2;
    for (auto& c : p2_for_pairing) pairs2.push_back(apply_map(c, phi));
    for (auto& c : triples1) triples2.push_back(apply_map(c, phi));
    return assemble(g, u, pairs1, pairs2, triples1, triples2, {});
  }

  // u/2 even (u >= 4)
  auto P1 = transform_A(f, 1);
  auto P2 = transform_A(f, 2);
  consumed.insert(g / 2 - 1);
  std::vector<Class> e_classes;
  for (int i = 0; u >= 8 && i <= (u - 8) / 4; ++i) {
    auto E = transform_B(f, i);
    consumed.insert(i);
    consumed.insert(g / 2 + i);
    for (int k = 0; k < 4; ++k) e_classes.push_back(E[k]);
  }
  pairs1 = {P1[0], P1[1], P1[2], class_M(f, 2)};
  std::vector<Class> p2_for_pairing = {P2[0], P2[1], P2[2], class_M(f, 1)};
  for (size_t b = 0; b < e_classes.size(); b += 4)
    for (int k = 0; k < 4; ++k) {
      pairs1.push_back(e_classes[b + k]);
      p2_for_pairing.push_back(e_classes[b + (k + 2) % 4]);
    }
  for (int i = 0; i <= g - 2; ++i)
    if (!consumed.count(i)) triples1.push_back(class_S(f, i));
  std::vector<Class> pairs2, triples2;
  for (auto& c : p2_for_pairing) pairs2.push_back(apply_map(c, phi));
  for (auto& c : triples1) triples2.push_back(apply_map(c, phi));
  return assemble(g, u, pairs1, pairs2, triples1, triples2, {});
}

ResolvableFramePair frame_pair_common_pc(int g, int u) {
  if (g % 2 || u % 2 || u < 2 || u > 2 * g - 2)
    fail(Errc::precondition, "frame_pair_common_pc parameter range");
  Frame f{g};
  if (g == 2) {
    // u = 2: the two pair classes are the only two matchings left by the
    // aligned triple class; the designs share it and swap the matchings.
    Class T = class_S(f, 0);
    Class M1 = class_M(f, 1), M2 = class_M(f, 2);
    return assemble(2, 2, {M1, M2}, {M2, M1}, {T}, {T}, T);
  }

  auto phi = [&](int p) {
    int col = p / g, x = p % g;
    if (col == 1) x = (x + 1) % g;
    if (col == 2) x = (x + 3) % g;
    return col * g + x;
  };

  if (u % 4 == 2) {
    // u/2 odd; progressive replacements F, H, E_i.
    std::vector<Class> pairs1{class_M(f, 1), class_M(f, 2)};
    std::vector<Class> p2_src{class_M(f, 1), class_M(f, 2)};  // phi applies later
    std::set<int> consumed1, consumed2;
    if (u >= 6) {
      auto F = transform_D(f);
      consumed1.insert(0);
      consumed1.insert(g - 2);
      auto E0 = transform_B(f, 0);
      consumed2.insert(0);
      consumed2.insert(g / 2);
      for (int k = 0; k < 4; ++k) pairs1.push_back(F[k]);
      for (int k = 0; k < 4; ++k) p2_src.push_back(E0[k]);
    }
    if (u >= 10) {
      auto H = transform_E(f);
      consumed1.insert(g / 2 - 2);
      consumed1.insert(g / 2 - 1);
      auto Eg = transform_B(f, g / 2 - 2);
      consumed2.insert(g / 2 - 2);
      consumed2.insert(g - 2);
      if ((g / 2) % 2 == 1) {
        // phi(E_{g/2-2,2}) avoids H_4 and phi(E_{g/2-2,4}) avoids H_2.
        pairs1.push_back(H[0]);
        pairs1.push_back(H[3]);
        pairs1.push_back(H[2]);
        pairs1.push_back(H[1]);
      } else {
        for (int k = 0; k < 4; ++k) pairs1.push_back(H[k]);
      }
      for (int k = 0; k < 4; ++k) p2_src.push_back(Eg[k]);
    }
    for (int i = 1; u >= 14 && i <= (u - 10) / 4; ++i) {
      auto E = transform_B(f, i);
      consumed1.insert(i);
      consumed1.insert(g / 2 + i);
      consumed2.insert(i);
      consumed2.insert(g / 2 + i);
      for (int k = 0; k < 4; ++k) {
        pairs1.push_back(E[k]);
        p2_src.push_back(E[k]);
      }
    }
    std::vector<Class> triples1, triples2_src;
    for (int i = 0; i <= g - 2; ++i) {
      if (!consumed1.count(i)) triples1.push_back(class_S(f, i));
      if (!consumed2.count(i)) triples2_src.push_back(class_S(f, i));
    }
    std::vector<Class> pairs2, triples2;
    for (auto& c : p2_src) pairs2.push_back(apply_map(c, phi));
    for (auto& c : triples2_src) triples2.push_back(apply_map(c, phi));
    return assemble(g, u, pairs1, pairs2, triples1, triples2, class_S(f, g / 2));
  }

  // u/2 even (u >= 4): replacements (C) on S_0, M_1 and (B) on i = 1..(u-4)/4.
  auto P0 = transform_C(f);
  std::set<int> consumed{0};
  std::vector<Class> pairs1{P0[0], P0[1], P0[2], class_M(f, 2)};
  for (int i = 1; u >= 8 && i <= (u - 4) / 4; ++i) {
    auto E = transform_B(f, i);
    consumed.insert(i);
    consumed.insert(g / 2 + i);
    for (int k = 0; k < 4; ++k) pairs1.push_back(E[k]);
  }
  std::vector<Class> triples1;
  for (int i = 0; i <= g - 2; ++i)
    if (!consumed.count(i)) triples1.push_back(class_S(f, i));
  std::vector<Class> pairs2, triples2;
  for (auto& c : pairs1) pairs2.push_back(apply_map(c, phi));
  for (auto& c : triples1) triples2.push_back(apply_map(c, phi));
  return assemble(g, u, pairs1, pairs2, triples1, triples2, class_S(f, g / 2));
}

DesignPair construct_t3(int g, int t, int u, Provider& prov) {
  if (t % 6 != 3) fail(Errc::precondition, "construct_t3 needs t = 3 (mod 6)");
  if (t == 3) {
    if (u == 0) {
      if (g == 2 || g == 6) fail(Errc::precondition, "no resolvable route at this g");
      auto fp = frame_pair(g, 0);
      return {fp.first, fp.second};
    }
    auto fp = frame_pair(g, u);
    Design d1 = fp.first, d2 = fp.second;
    auto strip_pairs = [](Design& d) {
      std::vector<Block> keep;
      for (auto& b : d.blocks)
        if (b.size() == 3) keep.push_back(b);
      d.blocks = keep;
    };
    strip_pairs(d1);
    strip_pairs(d2);
    auto to_factors = [](const std::vector<std::vector<Block>>& cls) {
      std::vector<OneFactor> fs;
      for (auto& c : cls) {
        OneFactor f;
        for (auto& b : c) f.edges.push_back({b[0], b[1]});
        std::sort(f.edges.begin(), f.edges.end());
        fs.push_back(f);
      }
      return fs;
    };
    return extend_by_onefactors(d1, d2, to_factors(fp.pair_classes1),
                                to_factors(fp.pair_classes2), /*auto_align=*/false);
  }

  // t = 6n+3, n >= 1: Kirkman triple system on t points, weights per class.
  auto kts = prov.oracle().kts(t);
  int classes = (t - 1) / 2;
  std::vector<int> uj(classes, 0);
  int rem = u;
  for (int j = 0; j < classes && rem > 0; ++j) {
    int take = std::min(rem, 2 * g);
    uj[j] = take;
    rem -= take;
  }
  if (rem != 0) fail(Errc::precondition, "u exceeds the class capacity");

  int N = t * g + u;
  Design shell;
  shell.n = N;
  for (int y = 0; y < t; ++y) {
    std::vector<int> grp;
    for (int i = 0; i < g; ++i) grp.push_back(y * g + i);
    shell.groups.push_back(grp);
  }
  std::vector<int> U(u);
  std::iota(U.begin(), U.end(), t * g);
  if (u > 0) shell.groups.push_back(U);
  shell.finalize();
  Design d1 = shell, d2 = shell;

  int uoff = 0;
  for (int j = 0; j < classes; ++j) {
    std::vector<int> Uj(U.begin() + uoff, U.begin() + uoff + uj[j]);
    uoff += uj[j];
    DesignPair ing = prov.pair(g, 3, uj[j]);
    for (const Block& B : kts.classes[j]) {
      std::vector<std::vector<int>> target;
      for (int c = 0; c < 3; ++c) {
        std::vector<int> col;
        for (int i = 0; i < g; ++i) col.push_back(B[c] * g + i);
        target.push_back(col);
      }
      if (uj[j] > 0) target.push_back(Uj);
      std::vector<int> img(ing.first.n, -1);
      for (size_t gi = 0; gi < ing.first.groups.size(); ++gi)
        for (size_t k = 0; k < ing.first.groups[gi].size(); ++k)
          img[ing.first.groups[gi][k]] = target[gi][k];
      for (const Block& b : ing.first.blocks) {
        Block nb;
        for (int p : b) nb.push_back(img[p]);
        std::sort(nb.begin(), nb.end());
        d1.blocks.push_back(nb);
      }
      for (const Block& b : ing.second.blocks) {
        Block nb;
        for (int p : b) nb.push_back(img[p]);
        std::sort(nb.begin(), nb.end());
        d2.blocks.push_back(nb);
      }
    }
  }
  return {d1, d2};
}

GddPairWithClass gdd_pair_common_pc(int g, int u, Provider& prov) {
  (void)prov;
  if (g % 2 || u % 2 || u < 0 || u > 2 * g - 2 || (g == 2 && u == 0))
    fail(Errc::precondition, "gdd_pair_common_pc parameter range");
  GddPairWithClass out;
  if (u == 0) {
    auto [a, b] = disjoint_itd_pair(g, /*keep_idempotent=*/true);
    out.pair = {a.base, b.base};
    out.common = a.parallel_classes[0];
    return out;
  }
  auto fp = frame_pair_common_pc(g, u);
  Design d1 = fp.first, d2 = fp.second;
  auto strip_pairs = [](Design& d) {
    std::vector<Block> keep;
    for (auto& b : d.blocks)
      if (b.size() == 3) keep.push_back(b);
    d.blocks = keep;
  };
  strip_pairs(d1);
  strip_pairs(d2);
  auto to_factors = [](const std::vector<std::vector<Block>>& cls) {
    std::vector<OneFactor> fs;
    for (auto& c : cls) {
      OneFactor f;
      for (auto& b : c) f.edges.push_back({b[0], b[1]});
      std::sort(f.edges.begin(), f.edges.end());
      fs.push_back(f);
    }
    return fs;
  };
  out.pair = extend_by_onefactors(d1, d2, to_factors(fp.pair_classes1),
                                  to_factors(fp.pair_classes2), /*auto_align=*/false);
  out.common = fp.common_class;
  return out;
}

}  // namespace gdd
