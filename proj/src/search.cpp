#include "gdd/search.hpp"

#include <algorithm>
#include <map>

namespace gdd {

ExactCover::ExactCover(int ncols) : ncols_(ncols) {
  nodes_.resize(ncols + 1);
  colsize_.assign(ncols + 1, 0);
  for (int c = 0; c <= ncols; ++c) {
    nodes_[c].l = (c + ncols) % (ncols + 1);
    nodes_[c].r = (c + 1) % (ncols + 1);
    nodes_[c].u = c;
    nodes_[c].d = c;
    nodes_[c].col = c;
    nodes_[c].row = -1;
  }
  // Node 0 is reserved as the root; column c uses header index c.
  // Shift: headers are 0..ncols-1 plus root at index ncols.
}

int ExactCover::add_row(const std::vector<int>& cols) {
  int row = nrows_++;
  int first = -1;
  for (int c : cols) {
    Node nd;
    nd.col = c;
    nd.row = row;
    int id = (int)nodes_.size();
    nodes_.push_back(nd);
    nodes_[id].u = nodes_[c].u;
    nodes_[id].d = c;
    nodes_[nodes_[c].u].d = id;
    nodes_[c].u = id;
    colsize_[c]++;
    if (first == -1) {
      nodes_[id].l = id;
      nodes_[id].r = id;
      first = id;
    } else {
      nodes_[id].l = nodes_[first].l;
      nodes_[id].r = first;
      nodes_[nodes_[first].l].r = id;
      nodes_[first].l = id;
    }
  }
  return row;
}

void ExactCover::cover(int c) {
  nodes_[nodes_[c].l].r = nodes_[c].r;
  nodes_[nodes_[c].r].l = nodes_[c].l;
  for (int i = nodes_[c].d; i != c; i = nodes_[i].d)
    for (int j = nodes_[i].r; j != i; j = nodes_[j].r) {
      nodes_[nodes_[j].u].d = nodes_[j].d;
      nodes_[nodes_[j].d].u = nodes_[j].u;
      colsize_[nodes_[j].col]--;
    }
}

void ExactCover::uncover(int c) {
  for (int i = nodes_[c].u; i != c; i = nodes_[i].u)
    for (int j = nodes_[i].l; j != i; j = nodes_[j].l) {
      colsize_[nodes_[j].col]++;
      nodes_[nodes_[j].u].d = j;
      nodes_[nodes_[j].d].u = j;
    }
  nodes_[nodes_[c].l].r = c;
  nodes_[nodes_[c].r].l = c;
}

bool ExactCover::search(std::vector<int>& stack,
                        const std::function<bool(const std::vector<int>&)>& on_solution) {
  int root = ncols_;
  if (nodes_[root].r == root) return on_solution(stack);
  if (budget_ >= 0 && --budget_ < 0) {
    tripped_ = true;
    return false;
  }
  int best = -1, bestsz = 1 << 30;
  for (int c = nodes_[root].r; c != root; c = nodes_[c].r)
    if (colsize_[c] < bestsz) {
      bestsz = colsize_[c];
      best = c;
    }
  if (bestsz == 0) return false;
  cover(best);
  for (int i = nodes_[best].d; i != best; i = nodes_[i].d) {
    stack.push_back(nodes_[i].row);
    for (int j = nodes_[i].r; j != i; j = nodes_[j].r) cover(nodes_[j].col);
    if (search(stack, on_solution)) return true;
    for (int j = nodes_[i].l; j != i; j = nodes_[j].l) uncover(nodes_[j].col);
    stack.pop_back();
    if (tripped_) break;
  }
  uncover(best);
  return false;
}

bool ExactCover::solve(const std::function<bool(const std::vector<int>&)>& on_solution,
                       long long node_limit, bool* exhausted) {
  // Root header lives at index ncols_: rewire the header ring around it.
  // (Constructor built a ring over 0..ncols; index ncols acts as root.)
  budget_ = node_limit;
  tripped_ = false;
  std::vector<int> stack;
  bool found = search(stack, on_solution);
  if (exhausted) *exhausted = tripped_;
  return found;
}

bool ExactCover::first_solution(std::vector<int>& rows_out, long long node_limit,
                                bool* exhausted) {
  return solve(
      [&](const std::vector<int>& rows) {
        rows_out = rows;
        return true;
      },
      node_limit, exhausted);
}

std::vector<Block> candidate_blocks(const Design& shell, const std::set<int>& sizes,
                                    const std::function<bool(const Block&)>& filter) {
  std::vector<Block> out;
  int n = shell.n;
  Block cur;
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == 0) {
      if (!filter || filter(cur)) out.push_back(cur);
      return;
    }
    for (int p = start; p <= n - k; ++p) {
      bool clash = false;
      for (int q : cur)
        if (shell.same_group(p, q)) {
          clash = true;
          break;
        }
      if (clash) continue;
      cur.push_back(p);
      rec(p + 1, k - 1);
      cur.pop_back();
    }
  };
  for (int k : sizes) rec(0, k);
  return out;
}

std::vector<Block> exact_cover_gdd(const Design& shell, const std::set<int>& K,
                                   const std::set<Block>& blacklist,
                                   const std::function<bool(const Block&)>& row_filter,
                                   const std::function<bool(const std::vector<Block>&)>& accept,
                                   long long node_limit, const std::string& shuffle_key) {
  int n = shell.n;
  std::map<long long, int> paircol;
  int ncols = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!shell.same_group(a, b)) paircol[(long long)a * n + b] = ncols++;

  auto filter = [&](const Block& b) {
    if (blacklist.count(b)) return false;
    return !row_filter || row_filter(b);
  };
  std::vector<Block> rows = candidate_blocks(shell, K, filter);
  if (!shuffle_key.empty()) {
    auto rng = seeded_rng(shuffle_key);
    std::shuffle(rows.begin(), rows.end(), rng);
  }

  ExactCover ec(ncols);
  for (auto& b : rows) {
    std::vector<int> cols;
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j)
        cols.push_back(paircol[(long long)b[i] * n + b[j]]);
    ec.add_row(cols);
  }

  std::vector<Block> result;
  bool exhausted = false;
  bool found = ec.solve(
      [&](const std::vector<int>& sol) {
        std::vector<Block> blocks;
        for (int r : sol) blocks.push_back(rows[r]);
        std::sort(blocks.begin(), blocks.end());
        if (accept && !accept(blocks)) return false;
        result = blocks;
        return true;
      },
      node_limit, &exhausted);
  if (found) return result;
  if (exhausted) fail(Errc::search_exhausted, "exact cover budget exhausted");
  fail(Errc::does_not_exist, "exact cover: no solution");
}

std::vector<Block> hill_climb_gdd3(const Design& shell, const std::set<Block>& blacklist,
                                   const std::string& seed_key, long long iter_limit) {
  const int n = shell.n;
  auto rng = seeded_rng(seed_key);
  auto pid = [&](int a, int b) {
    return (long long)std::min(a, b) * n + std::max(a, b);
  };
  // Uncovered cross pairs, as a vector with O(1) removal.
  std::vector<std::pair<int, int>> unc;
  std::map<long long, int> unc_pos;      // pair id -> index in unc
  std::map<long long, Block> cover_blk;  // pair id -> covering block
  auto unc_add = [&](int a, int b) {
    unc_pos[pid(a, b)] = (int)unc.size();
    unc.push_back({std::min(a, b), std::max(a, b)});
  };
  auto unc_del = [&](int a, int b) {
    long long id = pid(a, b);
    int pos = unc_pos[id];
    unc_pos[pid(unc.back().first, unc.back().second)] = pos;
    unc[pos] = unc.back();
    unc.pop_back();
    unc_pos.erase(id);
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!shell.same_group(a, b)) unc_add(a, b);

  std::set<Block> blocks;
  auto add_block = [&](const Block& b) {
    blocks.insert(b);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        cover_blk[pid(b[i], b[j])] = b;
        unc_del(b[i], b[j]);
      }
  };
  auto del_block = [&](const Block& b) {
    blocks.erase(b);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        cover_blk.erase(pid(b[i], b[j]));
        unc_add(b[i], b[j]);
      }
  };

  for (long long it = 0; it < iter_limit && !unc.empty(); ++it) {
    auto [x, y] = unc[rng() % unc.size()];
    // Random z completing {x,y} to a cross-valid, non-blacklisted triple.
    int z = -1;
    for (int tries = 0; tries < 24; ++tries) {
      int c = (int)(rng() % n);
      if (c == x || c == y || shell.same_group(c, x) || shell.same_group(c, y)) continue;
      Block b{x, y, c};
      std::sort(b.begin(), b.end());
      if (blacklist.count(b)) continue;
      z = c;
      break;
    }
    if (z < 0) continue;
    Block b{x, y, z};
    std::sort(b.begin(), b.end());
    auto itxz = cover_blk.find(pid(x, z));
    auto ityz = cover_blk.find(pid(y, z));
    Block bxz = itxz == cover_blk.end() ? Block{} : itxz->second;
    Block byz = ityz == cover_blk.end() ? Block{} : ityz->second;
    if (!bxz.empty()) del_block(bxz);
    if (!byz.empty() && byz != bxz) del_block(byz);
    add_block(b);
  }
  if (!unc.empty()) return {};
  std::vector<Block> out(blocks.begin(), blocks.end());
  return out;
}

}  // namespace gdd
