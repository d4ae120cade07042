#include "gdd/design.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gdd/admissibility.hpp"

namespace gdd {

GroupType GroupType::of(int g, int t, int u) {
  std::vector<int> sizes;
  for (int i = 0; i < t; ++i) sizes.push_back(g);
  if (u > 0) sizes.push_back(u);
  return from_sizes(sizes);
}

GroupType GroupType::from_sizes(const std::vector<int>& sizes) {
  std::map<int, int, std::greater<int>> m;
  for (int s : sizes) {
    if (s < 0) fail(Errc::structural, "negative group size");
    if (s > 0) m[s]++;
  }
  GroupType ty;
  for (auto& [s, c] : m) ty.parts.push_back({s, c});
  return ty;
}

int GroupType::point_count() const {
  int n = 0;
  for (auto& [s, c] : parts) n += s * c;
  return n;
}

int GroupType::group_count() const {
  int k = 0;
  for (auto& [s, c] : parts) k += c;
  return k;
}

std::string GroupType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [s, c] : parts) {
    if (!first) os << ' ';
    os << s << '^' << c;
    first = false;
  }
  if (parts.empty()) os << "0^0";
  return os.str();
}

void Design::finalize() {
  group_of.assign(n, -1);
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    for (int p : groups[gi]) {
      if (p < 0 || p >= n) fail(Errc::structural, "group point out of range");
      if (group_of[p] != -1) fail(Errc::structural, "point in two groups");
      group_of[p] = (int)gi;
    }
  }
  for (int p = 0; p < n; ++p)
    if (group_of[p] == -1) fail(Errc::structural, "point missing from partition");
  for (const Block& b : blocks) {
    for (int p : b)
      if (p < 0 || p >= n) fail(Errc::structural, "block point out of range");
    if (!std::is_sorted(b.begin(), b.end())) fail(Errc::structural, "unsorted block");
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      fail(Errc::structural, "repeated point in block");
  }
}

GroupType Design::type() const {
  std::vector<int> sizes;
  for (auto& g : groups) sizes.push_back((int)g.size());
  return GroupType::from_sizes(sizes);
}

namespace {

std::string block_str(const Block& b) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
  os << '}';
  return os.str();
}

std::string pair_str(int a, int b) {
  std::ostringstream os;
  os << '(' << a << ',' << b << ')';
  return os.str();
}

// Triangular coverage bitmap; the slow tally oracle used by the tests lives
// in test code, independent of this path.
struct PairMap {
  int n;
  std::vector<int> cnt;
  explicit PairMap(int n) : n(n), cnt((size_t)n * n, 0) {}
  int& at(int a, int b) { return cnt[(size_t)std::min(a, b) * n + std::max(a, b)]; }
};

bool structurally_ok(const Design& d, VerificationReport& rep) {
  try {
    Design copy = d;
    copy.finalize();
  } catch (const Error& e) {
    rep.valid = false;
    rep.violations.push_back({"structural", e.what()});
    return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_gdd(const Design& d, const GroupType& expected,
                              const std::set<int>& block_sizes) {
  VerificationReport rep;
  if (!structurally_ok(d, rep)) return rep;
  if (d.type() != expected)
    rep.violations.push_back({"type-mismatch", d.type().str() + " vs " + expected.str()});
  std::set<Block> seen;
  PairMap pm(d.n);
  for (const Block& b : d.blocks) {
    if (!block_sizes.count((int)b.size()))
      rep.violations.push_back({"block-size", block_str(b)});
    if (!seen.insert(b).second) rep.violations.push_back({"duplicate-block", block_str(b)});
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        if (d.same_group(b[i], b[j]))
          rep.violations.push_back({"group-block-meet", block_str(b)});
        else
          pm.at(b[i], b[j])++;
      }
  }
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b) {
      if (d.same_group(a, b)) continue;
      int c = pm.at(a, b);
      if (c == 0) rep.violations.push_back({"pair-uncovered", pair_str(a, b)});
      if (c > 1) rep.violations.push_back({"pair-covered-" + std::to_string(c), pair_str(a, b)});
    }
  rep.valid = rep.violations.empty();
  return rep;
}

VerificationReport verify_partial_gdd(const Design& d, const std::set<int>& block_sizes) {
  VerificationReport rep;
  if (!structurally_ok(d, rep)) return rep;
  std::set<Block> seen;
  PairMap pm(d.n);
  for (const Block& b : d.blocks) {
    if (!block_sizes.count((int)b.size()))
      rep.violations.push_back({"block-size", block_str(b)});
    if (!seen.insert(b).second) rep.violations.push_back({"duplicate-block", block_str(b)});
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        if (d.same_group(b[i], b[j]))
          rep.violations.push_back({"group-block-meet", block_str(b)});
        else
          pm.at(b[i], b[j])++;
      }
  }
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b) {
      if (d.same_group(a, b)) continue;
      int c = pm.at(a, b);
      if (c > 1) rep.violations.push_back({"pair-covered-" + std::to_string(c), pair_str(a, b)});
      if (c == 0) rep.leave.edges.push_back({a, b});
    }
  rep.valid = rep.violations.empty();
  return rep;
}

VerificationReport verify_disjoint_pair(const DesignPair& p, const GroupType& expected) {
  VerificationReport rep;
  VerificationReport r1 = verify_gdd(p.first, expected);
  VerificationReport r2 = verify_gdd(p.second, expected);
  for (auto& v : r1.violations) rep.violations.push_back({"first:" + v.rule, v.witness});
  for (auto& v : r2.violations) rep.violations.push_back({"second:" + v.rule, v.witness});
  if (p.first.n != p.second.n || p.first.groups != p.second.groups)
    rep.violations.push_back({"groups-differ", ""});
  Block shared;
  if (!blocks_disjoint(p.first, p.second, &shared))
    rep.violations.push_back({"shared-block", block_str(shared)});
  rep.valid = rep.violations.empty();
  return rep;
}

long long block_count(long long g, long long t, long long u) {
  if (!gdd_exists((int)g, (int)t, (int)u).admissible)
    fail(Errc::not_admissible, "block_count: no 3-GDD of this type");
  return (g * g * t * (t - 1) + 2 * g * t * u) / 6;
}

Design canonicalize(const Design& d) {
  Design c = d;
  for (auto& g : c.groups) std::sort(g.begin(), g.end());
  std::sort(c.groups.begin(), c.groups.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (auto& b : c.blocks) std::sort(b.begin(), b.end());
  std::sort(c.blocks.begin(), c.blocks.end());
  c.finalize();
  return c;
}

bool blocks_disjoint(const Design& a, const Design& b, Block* shared) {
  std::set<Block> sa;
  for (Block x : a.blocks) {
    std::sort(x.begin(), x.end());
    sa.insert(x);
  }
  for (Block x : b.blocks) {
    std::sort(x.begin(), x.end());
    if (sa.count(x)) {
      if (shared) *shared = x;
      return false;
    }
  }
  return true;
}

Design make_gtu_shell(int g, int t, int u) {
  Design d;
  d.n = g * t + u;
  for (int j = 0; j < t; ++j) {
    std::vector<int> grp;
    for (int i = 0; i < g; ++i) grp.push_back(i * t + j);
    d.groups.push_back(grp);
  }
  if (u > 0) {
    std::vector<int> grp;
    for (int i = 0; i < u; ++i) grp.push_back(g * t + i);
    d.groups.push_back(grp);
  }
  d.finalize();
  return d;
}

Design relabel(const Design& d, const std::vector<int>& image, int new_n) {
  Design out;
  out.n = new_n;
  for (auto& g : d.groups) {
    std::vector<int> grp;
    for (int p : g) grp.push_back(image[p]);
    std::sort(grp.begin(), grp.end());
    out.groups.push_back(grp);
  }
  for (auto& b : d.blocks) {
    Block nb;
    for (int p : b) nb.push_back(image[p]);
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(nb);
  }
  return out;  // caller finalizes once the full point set is grouped
}

DesignPair relabel(const DesignPair& p, const std::vector<int>& image, int new_n) {
  return {relabel(p.first, image, new_n), relabel(p.second, image, new_n)};
}

Design make_shell(const std::vector<int>& group_sizes) {
  Design d;
  d.n = 0;
  for (int s : group_sizes) {
    std::vector<int> grp;
    for (int i = 0; i < s; ++i) grp.push_back(d.n + i);
    d.n += s;
    if (s > 0) d.groups.push_back(grp);
  }
  d.finalize();
  return d;
}

}  // namespace gdd
