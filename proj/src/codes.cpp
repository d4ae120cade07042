#include "gdd/codes.hpp"

#include <algorithm>
#include <sstream>

namespace gdd {

std::string TernaryCode::str() const {
  std::ostringstream os;
  os << "CODE n=" << n << " q=3 w=3 d=4 size=" << words.size() << '\n';
  for (auto& w : words) {
    for (int x : w) os << x;
    os << '\n';
  }
  return os.str();
}

TernaryCode export_code(const DesignPair& p, const GroupType& expected) {
  auto rep = verify_disjoint_pair(p, expected);
  if (!rep.valid) fail(Errc::precondition, "export_code requires a verified pair");
  TernaryCode c;
  c.n = p.first.n;
  auto add = [&](const Design& d, int symbol) {
    std::vector<Block> blocks = d.blocks;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    for (auto& b : blocks) {
      std::vector<int> w(c.n, 0);
      for (int pnt : b) w[pnt] = symbol;
      c.words.push_back(w);
    }
  };
  add(p.first, 1);
  add(p.second, 2);
  return c;
}

bool verify_code(const TernaryCode& c, int min_distance) {
  for (auto& w : c.words) {
    int wt = 0;
    for (int x : w) {
      if (x < 0 || x > 2) return false;
      if (x != 0) wt++;
    }
    if (wt != 3) return false;
  }
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j) {
      int dist = 0;
      for (int k = 0; k < c.n; ++k)
        if (c.words[i][k] != c.words[j][k]) dist++;
      if (dist < min_distance) return false;
    }
  return true;
}

}  // namespace gdd
