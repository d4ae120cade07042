#include "gdd/differences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gdd/admissibility.hpp"
#include "gdd/recursive.hpp"

namespace gdd {

namespace {

int as_diff(int x, int v) {
  x = ((x % v) + v) % v;
  return std::min(x, v - x);
}

// Orbit of the base block {0, a, span} under translation, as sorted blocks.
std::vector<Block> develop(int v, int a, int span) {
  std::vector<Block> out;
  for (int x = 0; x < v; ++x) {
    Block b{x, (x + a) % v, (x + span) % v};
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Valid (a,b) orderings of the unordered difference triple {x,y,z}. Full
// orbits always required; with require_pair_safe the two developed families
// must also be block-disjoint.
std::vector<DifferenceTriple> safe_arrangements(int v, std::array<int, 3> tri,
                                                bool require_pair_safe) {
  std::vector<DifferenceTriple> out;
  std::sort(tri.begin(), tri.end());
  std::vector<std::array<int, 2>> perms = {{tri[0], tri[1]}, {tri[0], tri[2]},
                                           {tri[1], tri[2]}, {tri[1], tri[0]},
                                           {tri[2], tri[0]}, {tri[2], tri[1]}};
  for (auto [a, b] : perms) {
    int span = (a + b) % v;
    int third = tri[0] ^ tri[1] ^ tri[2] ^ a ^ b;
    if (as_diff(span, v) != third) continue;
    auto fam1 = develop(v, a, span);
    if ((int)fam1.size() != v) continue;  // short orbit
    if (require_pair_safe) {
      auto fam2 = develop(v, b, span);
      if ((int)fam2.size() != v) continue;
      std::vector<Block> inter;
      std::set_intersection(fam1.begin(), fam1.end(), fam2.begin(), fam2.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) continue;
    }
    DifferenceTriple dt;
    dt.a = a;
    dt.b = b;
    dt.c = third;
    dt.span = span;
    out.push_back(dt);
  }
  return out;
}

struct TripleSearch {
  int v;
  std::vector<int> universe;  // ascending
  int want_triples;
  TripleSearchOptions opt;

  std::vector<DifferenceTriple> picked;
  std::set<int> leave;
  int leave_budget = 0;

  bool good(int d) const { return (v / std::gcd(d, v)) % 2 == 0; }

  bool constraints_ok() const {
    if (opt.need_good_in_leave &&
        std::none_of(leave.begin(), leave.end(), [&](int d) { return good(d); }))
      return false;
    if (opt.need_good_in_triples && !picked.empty()) {
      bool any = false;
      for (auto& t : picked)
        if (good(t.a) || good(t.b) || good(t.c)) any = true;
      if (!any) return false;
    }
    return true;
  }

  bool run(std::set<int> undecided) {
    if ((int)picked.size() == want_triples) {
      for (int d : undecided) leave.insert(d);
      if (constraints_ok()) return true;
      for (int d : undecided) leave.erase(d);
      return false;
    }
    if (undecided.empty()) return false;
    int d = *undecided.begin();
    undecided.erase(d);
    // Cover d by a triple with two larger undecided partners.
    bool d_allowed_in_triple = !(opt.forbid_half_in_triples && 2 * d == v);
    if (d_allowed_in_triple) {
      std::vector<int> rest(undecided.begin(), undecided.end());
      for (size_t i = 0; i < rest.size(); ++i) {
        if (opt.forbid_half_in_triples && 2 * rest[i] == v) continue;
        for (size_t j = i + 1; j < rest.size(); ++j) {
          if (opt.forbid_half_in_triples && 2 * rest[j] == v) continue;
          std::array<int, 3> tri{d, rest[i], rest[j]};
          auto arr = safe_arrangements(v, tri, opt.pair_safe);
          if (arr.empty()) continue;
          auto nxt = undecided;
          nxt.erase(rest[i]);
          nxt.erase(rest[j]);
          picked.push_back(arr.front());
          if (run(nxt)) return true;
          picked.pop_back();
        }
      }
    }
    // Or leave d uncovered.
    if (leave_budget > 0) {
      leave_budget--;
      leave.insert(d);
      if (run(undecided)) return true;
      leave.erase(d);
      leave_budget++;
    }
    return false;
  }
};

}  // namespace

DifferencePartition find_difference_partition(int v, const std::set<int>& target,
                                              int triple_count,
                                              const TripleSearchOptions& opt) {
  if ((int)target.size() < 3 * triple_count)
    fail(Errc::precondition, "target too small for requested triples");
  TripleSearch ts;
  ts.v = v;
  ts.universe.assign(target.begin(), target.end());
  ts.want_triples = triple_count;
  ts.opt = opt;
  ts.leave_budget = (int)target.size() - 3 * triple_count;
  if (!ts.run(target))
    fail(Errc::does_not_exist, "no difference partition for v=" + std::to_string(v));
  DifferencePartition part;
  part.v = v;
  part.d1 = ts.picked;
  part.d2 = ts.leave;
  return part;
}

DesignPair construct_dif(int g, int t, int u, const DifferencePartition& part) {
  const int v = g * t;
  if (part.v != v) fail(Errc::precondition, "partition modulus mismatch");
  if (u < 2) fail(Errc::precondition, "construct_dif needs u >= 2");
  if ((g * (t - 1) - u) % 6 != 0)
    fail(Errc::precondition, "construct_dif needs g(t-1)-u = 0 (mod 6)");
  if ((int)part.d1.size() != (v - g - u) / 6)
    fail(Errc::precondition, "wrong number of difference triples");

  Design base = make_shell(std::vector<int>(t, g));
  // Regroup: group j = {j, t+j, ..., (g-1)t+j}.
  base.groups.clear();
  for (int j = 0; j < t; ++j) {
    std::vector<int> grp;
    for (int i = 0; i < g; ++i) grp.push_back(i * t + j);
    base.groups.push_back(grp);
  }
  base.finalize();
  Design d1 = base, d2 = base;
  for (auto& tr : part.d1) {
    for (Block b : develop(v, tr.a, tr.span)) d1.blocks.push_back(b);
    for (Block b : develop(v, tr.b, tr.span)) d2.blocks.push_back(b);
  }
  CirculantSpec spec;
  spec.v = v;
  spec.D = part.d2;
  OneFactorization f = circulant_one_factorization(spec);
  if ((int)f.factors.size() != u)
    fail(Errc::internal_gap, "leave factor count " + std::to_string(f.factors.size()) +
                                 " != u = " + std::to_string(u));
  std::vector<OneFactor> f2(f.factors.begin(), f.factors.end());
  std::rotate(f2.begin(), f2.begin() + 1, f2.end());
  return extend_by_onefactors(d1, d2, f.factors, f2);
}

DesignPair construct_u_max(int g, int t) {
  const int v = g * t;
  if (v % 2 != 0) fail(Errc::precondition, "gt must be even");
  DifferencePartition part;
  part.v = v;
  for (int d = 1; d <= v / 2; ++d)
    if (d % t != 0) part.d2.insert(d);
  return construct_dif(g, t, g * (t - 1), part);
}

int cps_base_regularity(int v) {
  if (v < 7) fail(Errc::precondition, "cyclic partial STS needs v >= 7");
  int k = (v - 1) / 6, s = v - 6 * k;
  if (s == 2 && (k % 4 == 2 || k % 4 == 3)) return 7;
  return s - 1;
}

CyclicPartialSts cyclic_partial_sts(int v, int r, bool pair_safe) {
  if (r == v - 1) {
    CyclicPartialSts out;  // trivial: no starter blocks
    out.v = v;
    out.r = r;
    return out;
  }
  int rp = cps_base_regularity(v);
  if (r % 6 != rp % 6 || r < rp || r > v - 1)
    fail(Errc::precondition, "infeasible leave regularity r=" + std::to_string(r));
  int m = (v - 1 - r) / 6;
  std::set<int> target;
  for (int d = 1; 2 * d <= v; ++d) target.insert(d);
  TripleSearchOptions opt;
  opt.forbid_half_in_triples = true;
  opt.need_good_in_triples = (r < v - 1) && v % 2 == 0;
  opt.pair_safe = pair_safe;
  auto part = find_difference_partition(v, target, m, opt);
  CyclicPartialSts out;
  out.v = v;
  out.r = r;
  out.triples = part.d1;
  for (auto& tr : part.d1) out.starters.push_back({0, tr.a, tr.span});
  return out;
}

bool u_large_applicable(int g, int t, int u) {
  if (u < 2 || (g * (t - 1) - u) % 6 != 0) return false;
  int v = g * t;
  if (v < 7) return false;
  int r = cps_base_regularity(v);
  long long umin = (g % 2 == 1) ? 2 * g + r - 2 : 2 * g + r - 5;
  return u >= umin;
}

DesignPair construct_u_large(int g, int t, int u) {
  const int v = g * t;
  if (!u_large_applicable(g, t, u))
    fail(Errc::precondition, "construct_u_large threshold not met");
  int r = cps_base_regularity(v);
  auto cps = cyclic_partial_sts(v, r, /*pair_safe=*/true);

  // F0: triples using a multiple of t; F' extends it to floor((g-1)/2)
  // triples, for even g keeping a good non-multiple-of-t difference inside.
  auto has_mult = [&](const DifferenceTriple& tr) {
    return tr.a % t == 0 || tr.b % t == 0 || tr.c % t == 0;
  };
  auto has_good_nonmult = [&](const DifferenceTriple& tr) {
    for (int d : {tr.a, tr.b, tr.c})
      if (d % t != 0 && (v / std::gcd(d, v)) % 2 == 0) return true;
    return false;
  };
  std::vector<DifferenceTriple> fprime, rest;
  for (auto& tr : cps.triples) (has_mult(tr) ? fprime : rest).push_back(tr);
  size_t want = (size_t)((g - 1) / 2);
  if (fprime.size() > want) fail(Errc::internal_gap, "too many multiple-of-t triples");
  if (g % 2 == 0 &&
      std::none_of(fprime.begin(), fprime.end(), has_good_nonmult)) {
    for (size_t i = 0; i < rest.size() && fprime.size() < want; ++i)
      if (has_good_nonmult(rest[i])) {
        fprime.push_back(rest[i]);
        rest.erase(rest.begin() + i);
        break;
      }
  }
  while (fprime.size() < want && !rest.empty()) {
    fprime.push_back(rest.front());
    rest.erase(rest.begin());
  }
  if (fprime.size() != want) fail(Errc::internal_gap, "cannot build F'");

  long long umin = (g % 2 == 1) ? 2 * g + r - 2 : 2 * g + r - 5;
  long long divert = (u - umin) / 6;
  if (divert > (long long)rest.size())
    fail(Errc::precondition, "u too large for the available difference triples");
  std::vector<DifferenceTriple> kept(rest.begin() + divert, rest.end());

  DifferencePartition part;
  part.v = v;
  part.d1 = kept;
  std::set<int> in_d1;
  for (auto& tr : kept) {
    in_d1.insert(tr.a);
    in_d1.insert(tr.b);
    in_d1.insert(tr.c);
  }
  for (int d = 1; 2 * d <= v; ++d)
    if (d % t != 0 && !in_d1.count(d)) part.d2.insert(d);
  return construct_dif(g, t, u, part);
}

PartialWithLeave construct_partial_with_onefactor_leave(int g, int t, int u) {
  if (u == 2) fail(Errc::precondition, "u = 2 not supported here");
  const int v = g * t;
  if (!u_large_applicable(g, t, u))
    fail(Errc::precondition, "threshold not met");
  int r = cps_base_regularity(v);
  auto cps = cyclic_partial_sts(v, r, /*pair_safe=*/true);
  auto has_mult = [&](const DifferenceTriple& tr) {
    return tr.a % t == 0 || tr.b % t == 0 || tr.c % t == 0;
  };
  std::vector<DifferenceTriple> fprime, rest;
  for (auto& tr : cps.triples) (has_mult(tr) ? fprime : rest).push_back(tr);
  size_t want = (size_t)((g - 1) / 2);
  auto has_good_nonmult = [&](const DifferenceTriple& tr) {
    for (int d : {tr.a, tr.b, tr.c})
      if (d % t != 0 && (v / std::gcd(d, v)) % 2 == 0) return true;
    return false;
  };
  if (fprime.size() > want) fail(Errc::internal_gap, "too many multiple-of-t triples");
  if (g % 2 == 0 && std::none_of(fprime.begin(), fprime.end(), has_good_nonmult)) {
    for (size_t i = 0; i < rest.size() && fprime.size() < want; ++i)
      if (has_good_nonmult(rest[i])) {
        fprime.push_back(rest[i]);
        rest.erase(rest.begin() + i);
        break;
      }
  }
  while (fprime.size() < want && !rest.empty()) {
    fprime.push_back(rest.front());
    rest.erase(rest.begin());
  }
  long long umin = (g % 2 == 1) ? 2 * g + r - 2 : 2 * g + r - 5;
  long long divert = (u - umin) / 6;
  if (divert > (long long)rest.size()) fail(Errc::precondition, "u too large");
  std::vector<DifferenceTriple> kept(rest.begin() + divert, rest.end());

  Design base = make_shell(std::vector<int>(t, g));
  base.groups.clear();
  for (int j = 0; j < t; ++j) {
    std::vector<int> grp;
    for (int i = 0; i < g; ++i) grp.push_back(i * t + j);
    base.groups.push_back(grp);
  }
  base.finalize();
  Design d1 = base, d2 = base;
  std::set<int> in_d1;
  for (auto& tr : kept) {
    for (Block b : develop(v, tr.a, tr.span)) d1.blocks.push_back(b);
    for (Block b : develop(v, tr.b, tr.span)) d2.blocks.push_back(b);
    in_d1.insert(tr.a);
    in_d1.insert(tr.b);
    in_d1.insert(tr.c);
  }
  CirculantSpec spec;
  spec.v = v;
  for (int d = 1; 2 * d <= v; ++d)
    if (d % t != 0 && !in_d1.count(d)) spec.D.insert(d);
  OneFactorization f = circulant_one_factorization(spec);
  if ((int)f.factors.size() != u) fail(Errc::internal_gap, "factor count != u");
  // Hang the first u-1 factors, keep the last as the common leave.
  std::vector<OneFactor> use1(f.factors.begin(), f.factors.end() - 1);
  std::vector<OneFactor> use2 = use1;
  std::rotate(use2.begin(), use2.begin() + 1, use2.end());
  DesignPair p = extend_by_onefactors(d1, d2, use1, use2);
  PartialWithLeave out;
  out.first = p.first;
  out.second = p.second;
  out.leave = f.factors.back();
  return out;
}

}  // namespace gdd
