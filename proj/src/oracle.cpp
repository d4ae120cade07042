#include "gdd/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gdd/admissibility.hpp"
#include "gdd/io.hpp"
#include "gdd/latin.hpp"
#include "gdd/search.hpp"

namespace gdd {

namespace {

std::string sanitize(const std::string& key) {
  std::string out;
  for (char c : key) out += (isalnum((unsigned char)c) ? c : '_');
  return out;
}

std::string serialize_designs(const std::vector<TextSection>& secs) {
  std::string out;
  for (size_t i = 0; i < secs.size(); ++i) {
    if (i) out += "\n";
    out += write_section(secs[i]);
  }
  return out;
}

TextSection section_of(const Design& d, const std::set<int>& K = {3}) {
  TextSection s;
  s.design = d;
  for (auto& b : s.design.blocks) std::sort(b.begin(), b.end());
  std::sort(s.design.blocks.begin(), s.design.blocks.end());
  s.block_sizes = K;
  return s;
}

std::string pair_text(const DesignPair& p) {
  return serialize_designs({section_of(p.first), section_of(p.second)});
}

DesignPair pair_from_text(const std::string& text) {
  auto secs = read_sections_str(text);
  if (secs.size() != 2) fail(Errc::io, "expected two sections");
  return {secs[0].design, secs[1].design};
}

// Complete or seeded search for a 3-GDD block set over the shell.
std::vector<Block> search_gdd3(const Design& shell, const std::set<Block>& blacklist,
                               const std::string& key) {
  if (shell.n <= 20) {
    return exact_cover_gdd(shell, {3}, blacklist, nullptr, nullptr, 80000000LL);
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto blocks = hill_climb_gdd3(shell, blacklist, key + "#" + std::to_string(attempt),
                                  400000LL + 40000LL * shell.n);
    if (!blocks.empty()) return blocks;
  }
  return exact_cover_gdd(shell, {3}, blacklist, nullptr, nullptr, 200000000LL);
}

Design with_blocks(Design shell, std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end());
  shell.blocks = std::move(blocks);
  return shell;
}

// Disjoint pair of type g^3 from the two shifted cyclic squares.
DesignPair latin_shift_pair(int g, int t, int u) {
  // Type is g^3; the caller's layout has t short groups plus a long one.
  Design shell = make_gtu_shell(g, t, u);
  Design d1 = shell, d2 = shell;
  // Column j of the layout hosts symbol coordinate j of the square.
  auto pt = [&](int copy, int col) {
    if (col < t) return copy * t + col;
    return g * t + copy;
  };
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      Block b1{pt(i, 0), pt(j, 1), pt((i + j) % g, 2)};
      Block b2{pt(i, 0), pt(j, 1), pt((i + j + 1) % g, 2)};
      std::sort(b1.begin(), b1.end());
      std::sort(b2.begin(), b2.end());
      d1.blocks.push_back(b1);
      d2.blocks.push_back(b2);
    }
  return {d1, d2};
}

// Weight-g inflation of a Steiner triple system: disjoint pair of type g^t.
DesignPair sts_weight_pair(const Design& sts, int g) {
  int t = sts.n;
  Design shell = make_gtu_shell(g, t, 0);
  Design d1 = shell, d2 = shell;
  for (const Block& b : sts.blocks) {
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        Block b1{i * t + b[0], j * t + b[1], ((i + j) % g) * t + b[2]};
        Block b2{i * t + b[0], j * t + b[1], ((i + j + 1) % g) * t + b[2]};
        std::sort(b1.begin(), b1.end());
        std::sort(b2.begin(), b2.end());
        d1.blocks.push_back(b1);
        d2.blocks.push_back(b2);
      }
  }
  return {d1, d2};
}

}  // namespace

Oracle::Oracle(std::string cache_dir, bool use_cache)
    : dir_(std::move(cache_dir)), use_cache_(use_cache) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string Oracle::path_for(const std::string& key) const {
  return dir_ + "/" + sanitize(key) + ".gdd";
}

std::string Oracle::get_or_compute(const std::string& key,
                                   const std::function<std::string()>& fn) {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = mem_.find(key);
  if (it != mem_.end()) {
    stats_.hits++;
    return it->second;
  }
  if (!dir_.empty() && use_cache_) {
    std::ifstream in(path_for(key), std::ios::binary);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      stats_.hits++;
      mem_[key] = ss.str();
      return mem_[key];
    }
  }
  stats_.misses++;
  std::string val = fn();
  mem_[key] = val;
  if (!dir_.empty()) {
    std::ofstream out(path_for(key), std::ios::binary);
    out << val;
  }
  return val;
}

void Oracle::invalidate(const std::string& key) {
  std::lock_guard<std::mutex> lk(mu_);
  mem_.erase(key);
  if (!dir_.empty()) std::filesystem::remove(path_for(key));
}

namespace {

// serve-with-eviction: parse and verify the cached text, evicting and
// recomputing once when the entry is corrupted.
template <typename T>
T serve(Oracle& o, const std::string&, const std::string& key,
        const std::function<std::string()>& compute,
        const std::function<T(const std::string&)>& parse,
        const std::function<bool(const T&)>& verify) {
  for (int round = 0; round < 2; ++round) {
    std::string text = o.get_or_compute(key, compute);
    try {
      T obj = parse(text);
      if (verify(obj)) return obj;
    } catch (const Error&) {
    }
    o.invalidate(key);
  }
  fail(Errc::internal_gap, "oracle cannot produce a verifiable object for " + key);
}

}  // namespace

Design Oracle::sts(int v) {
  if (v == 1 || v == 0) {
    Design d = make_shell(std::vector<int>(v, 1));
    return d;
  }
  if (v % 6 != 1 && v % 6 != 3) fail(Errc::does_not_exist, "no STS at order " + std::to_string(v));
  std::string key = "sts_" + std::to_string(v);
  auto compute = [v]() {
    Design d = make_shell(std::vector<int>(v, 1));
    if (v == 3) {
      d.blocks.push_back({0, 1, 2});
    } else if (v % 6 == 3) {
      // Triangle-and-midpoint construction on Z_m x I_3.
      int m = v / 3, inv2 = (m + 1) / 2;
      auto pt = [&](int x, int c) { return ((x % m) + m) % m + c * m; };
      for (int x = 0; x < m; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
      for (int c = 0; c < 3; ++c)
        for (int x = 0; x < m; ++x)
          for (int y = x + 1; y < m; ++y) {
            Block b{pt(x, c), pt(y, c), pt((int)(((long long)(x + y) * inv2) % m), (c + 1) % 3)};
            std::sort(b.begin(), b.end());
            d.blocks.push_back(b);
          }
    } else {
      // Cyclic system from a difference-triple partition of [1,(v-1)/2].
      std::set<int> target;
      for (int x = 1; 2 * x < v; ++x) target.insert(x);
      TripleSearchOptions opt;
      opt.forbid_half_in_triples = false;
      auto part = find_difference_partition(v, target, (v - 1) / 6, opt);
      for (auto& tr : part.d1)
        for (int x = 0; x < v; ++x) {
          Block b{x, (x + tr.a) % v, (x + tr.span) % v};
          std::sort(b.begin(), b.end());
          d.blocks.push_back(b);
        }
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return write_section(section_of(d));
  };
  return serve<Design>(
      *this, dir_, key, compute,
      [](const std::string& s) { return read_sections_str(s).at(0).design; },
      [v](const Design& d) {
        return d.n == v && verify_gdd(d, GroupType::of(1, v, 0)).valid;
      });
}

Oracle::Resolvable Oracle::kts(int v) {
  if (v % 6 != 3) fail(Errc::does_not_exist, "KTS exists only at 3 mod 6");
  std::string key = "kts_" + std::to_string(v);
  auto compute = [this, v]() {
    Design d = make_shell(std::vector<int>(v, 1));
    std::vector<std::vector<Block>> classes;
    if (v == 3) {
      classes.push_back({{0, 1, 2}});
    } else {
      bool power3 = true;
      for (int x = v; x > 1; x /= 3)
        if (x % 3 != 0) power3 = false;
      if (power3) {
        // Affine line classes over F_3^k: one class per direction pair.
        int k = 0;
        for (int x = v; x > 1; x /= 3) k++;
        auto add3 = [&](int a, int b) {
          int out = 0, pw = 1;
          for (int i = 0; i < k; ++i) {
            out += ((a % 3 + b % 3) % 3) * pw;
            a /= 3;
            b /= 3;
            pw *= 3;
          }
          return out;
        };
        std::set<int> seen;
        for (int dvec = 1; dvec < v; ++dvec) {
          if (seen.count(dvec)) continue;
          seen.insert(dvec);
          seen.insert(add3(dvec, dvec));
          std::vector<Block> cls;
          std::set<Block> dedup;
          for (int x = 0; x < v; ++x) {
            Block b{x, add3(x, dvec), add3(add3(x, dvec), dvec)};
            std::sort(b.begin(), b.end());
            if (dedup.insert(b).second) cls.push_back(b);
          }
          std::sort(cls.begin(), cls.end());
          classes.push_back(cls);
        }
      } else if (v == 15) {
        // Line packing of the 15-point binary projective space.
        std::vector<Block> lines;
        for (int a = 1; a < 16; ++a)
          for (int b = a + 1; b < 16; ++b) {
            int c = a ^ b;
            if (c > b) lines.push_back({a - 1, b - 1, c - 1});
          }
        std::sort(lines.begin(), lines.end());
        // All spreads (5 disjoint lines covering the 15 points).
        std::vector<std::vector<int>> spreads;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int mask, int from) {
          if (mask == 0x7FFF) {
            spreads.push_back(cur);
            return;
          }
          int low = 0;
          while (mask & (1 << low)) low++;
          for (int li = from; li < (int)lines.size(); ++li) {
            auto& L = lines[li];
            int lm = (1 << L[0]) | (1 << L[1]) | (1 << L[2]);
            if (!(lm & (1 << low)) || (lm & mask)) continue;
            cur.push_back(li);
            rec(mask | lm, li + 1);
            cur.pop_back();
          }
        };
        rec(0, 0);
        ExactCover ec((int)lines.size());
        for (auto& sp : spreads) ec.add_row(sp);
        std::vector<int> sol;
        if (!ec.first_solution(sol, 20000000LL))
          fail(Errc::internal_gap, "no packing found");
        for (int s : sol) {
          std::vector<Block> cls;
          for (int li : spreads[s]) cls.push_back(lines[li]);
          std::sort(cls.begin(), cls.end());
          classes.push_back(cls);
        }
      } else {
        // Seeded greedy resolution with restarts.
        int nclasses = (v - 1) / 2;
        bool done = false;
        for (int attempt = 0; attempt < 20000 && !done; ++attempt) {
          auto rng = seeded_rng("kts" + std::to_string(v) + "#" + std::to_string(attempt));
          std::vector<std::vector<bool>> used(v, std::vector<bool>(v, false));
          std::vector<std::vector<Block>> trial;
          bool ok = true;
          for (int c = 0; c < nclasses && ok; ++c) {
            std::vector<Block> rows;
            for (int a = 0; a < v; ++a)
              for (int b = a + 1; b < v; ++b) {
                if (used[a][b]) continue;
                for (int e = b + 1; e < v; ++e)
                  if (!used[a][e] && !used[b][e]) rows.push_back({a, b, e});
              }
            std::shuffle(rows.begin(), rows.end(), rng);
            ExactCover ec(v);
            for (auto& r : rows) ec.add_row({r[0], r[1], r[2]});
            std::vector<int> sol;
            if (!ec.first_solution(sol, 400000LL)) {
              ok = false;
              break;
            }
            std::vector<Block> cls;
            for (int ri : sol) {
              cls.push_back(rows[ri]);
              used[rows[ri][0]][rows[ri][1]] = used[rows[ri][0]][rows[ri][2]] =
                  used[rows[ri][1]][rows[ri][2]] = true;
            }
            std::sort(cls.begin(), cls.end());
            trial.push_back(cls);
          }
          if (ok) {
            classes = trial;
            done = true;
          }
        }
        if (!done) fail(Errc::search_exhausted, "resolvable system search failed");
      }
    }
    for (auto& cls : classes)
      for (auto& b : cls) d.blocks.push_back(b);
    TextSection sec = section_of(d);
    // Keep the class structure: blocks listed class by class.
    sec.design.blocks.clear();
    for (auto& cls : classes)
      for (auto& b : cls) sec.design.blocks.push_back(b);
    sec.sidecar["CLASSSIZE"] = std::to_string(v / 3);
    return write_section(sec);
  };
  auto parse = [v](const std::string& s) {
    auto sec = read_sections_str(s).at(0);
    Resolvable r;
    r.design = sec.design;
    int csz = std::stoi(sec.sidecar.at("CLASSSIZE"));
    for (size_t i = 0; i < sec.design.blocks.size(); i += csz)
      r.classes.push_back(std::vector<Block>(sec.design.blocks.begin() + i,
                                             sec.design.blocks.begin() + i + csz));
    (void)v;
    return r;
  };
  auto verify = [v](const Resolvable& r) {
    if (r.design.n != v) return false;
    if (!verify_gdd(r.design, GroupType::of(1, v, 0)).valid) return false;
    if ((int)r.classes.size() != (v - 1) / 2) return false;
    for (auto& cls : r.classes) {
      std::set<int> pts;
      for (auto& b : cls) pts.insert(b.begin(), b.end());
      if ((int)pts.size() != v) return false;
    }
    return true;
  };
  return serve<Resolvable>(*this, dir_, key, compute, parse, verify);
}

Design Oracle::td(int k, int n) {
  auto mols = [&]() {
    std::vector<LatinSquare> ls;
    if (k == 3) {
      auto p = mols_pair(n);
      ls.push_back(p.first);
      return ls;
    }
    if (k == 4) {
      auto p = mols_pair(n);
      ls.push_back(p.first);
      ls.push_back(p.second);
      return ls;
    }
    if (k == 5) {
      auto m = three_mols(n);
      ls.assign(m.begin(), m.end());
      return ls;
    }
    // Larger k over a prime-power order via the multiplier family.
    for (int a = 1; a <= k - 2; ++a) {
      LatinSquare L;
      L.t = n;
      L.cells.assign(n, std::vector<int>(n));
      // Assumes prime n (the only orders exercised); multiplication mod n.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L.cells[i][j] = (int)(((long long)a * i + j) % n);
      ls.push_back(L);
    }
    return ls;
  }();
  Design d = make_shell(std::vector<int>(k, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Block b{i, n + j};
      for (int c = 2; c < k; ++c) b.push_back(c * n + mols[c - 2].cells[i][j]);
      std::sort(b.begin(), b.end());
      d.blocks.push_back(b);
    }
  std::sort(d.blocks.begin(), d.blocks.end());
  auto rep = verify_gdd(d, GroupType::from_sizes(std::vector<int>(k, n)), {k});
  if (!rep.valid) fail(Errc::internal_gap, "transversal design invalid");
  return d;
}

Design Oracle::pbd(int v, const std::set<int>& K) {
  if (K.count(v)) {
    Design d = make_shell(std::vector<int>(v, 1));
    Block all(v);
    std::iota(all.begin(), all.end(), 0);
    d.blocks.push_back(all);
    return d;
  }
  if (v % 6 == 1 || v % 6 == 3) {
    if (!K.count(3)) fail(Errc::unsupported, "PBD family needs triples");
    return sts(v);
  }
  std::string key = "pbd_" + std::to_string(v);
  for (int k : K) key += "_" + std::to_string(k);
  auto compute = [this, v, K]() {
    Design d = make_shell(std::vector<int>(v, 1));
    auto from_gdd_plus_groups = [&](const Design& gdd, bool adjoin_point) {
      // Blocks of the GDD plus each group (with the extra point when asked).
      int inf = v - 1;
      for (auto& b : gdd.blocks) d.blocks.push_back(b);
      for (auto& grp : gdd.groups) {
        Block b = grp;
        if (adjoin_point) b.push_back(inf);
        std::sort(b.begin(), b.end());
        d.blocks.push_back(b);
      }
    };
    if (K.count(5) && v % 6 == 5) {
      // 2^{3b} 4^1 plus an ideal point.
      int b = (v - 5) / 6;
      std::vector<int> sizes(3 * b, 2);
      sizes.push_back(4);
      from_gdd_plus_groups(single_gdd(sizes), true);
    } else if (v % 6 == 0) {
      if (v == 12) {
        from_gdd_plus_groups(td(4, 3), false);
      } else {
        from_gdd_plus_groups(single_gdd(std::vector<int>(v / 6, 6)), false);
      }
    } else if (v % 6 == 4) {
      if (v == 4) {
        // covered by the K.count(v) case
      } else if (v == 10) {
        Design shell = make_shell(std::vector<int>(10, 1));
        auto blocks =
            exact_cover_gdd(shell, {3, 4}, {}, nullptr, nullptr, 40000000LL);
        d.blocks = blocks;
      } else if (v == 16) {
        from_gdd_plus_groups(single_gdd(std::vector<int>(4, 4)), false);
      } else {
        std::vector<int> sizes((v - 4) / 6, 6);
        sizes.push_back(4);
        from_gdd_plus_groups(single_gdd(sizes), false);
      }
    } else {
      fail(Errc::unsupported, "no PBD recipe here");
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    TextSection sec = section_of(d, K);
    return write_section(sec);
  };
  auto parse = [](const std::string& s) { return read_sections_str(s).at(0).design; };
  auto verify = [v, K](const Design& d) {
    return d.n == v && verify_gdd(d, GroupType::of(1, v, 0), K).valid;
  };
  return serve<Design>(*this, dir_, key, compute, parse, verify);
}

Oracle::Marked Oracle::kgdd_master(int family, int t) {
  std::string key = "kgdd_" + std::to_string(family) + "_" + std::to_string(t);
  auto compute = [this, family, t]() {
    Design shell;
    std::set<int> K;
    std::vector<int> marked;
    std::function<bool(const Block&)> filt = nullptr;
    std::function<bool(const std::vector<Block>&)> accept = nullptr;
    if (family == 1) {
      int m = 3 * (t - 1) / 2;
      if (t == 3) {
        Design d = td(4, 3);
        TextSection sec = section_of(d, {4});
        return write_section(sec);
      }
      std::vector<int> sizes(t, 3);
      sizes.push_back(m);
      shell = make_shell(sizes);
      K = {4};
    } else if (family == 2) {
      int m = 3 * (t - 2) / 2;
      std::vector<int> sizes(t, 3);
      sizes.push_back(m);
      shell = make_shell(sizes);
      K = {4, 7};
      int y1 = 3 * t;  // first long point
      marked = {y1};
      bool strengthen = t >= 8;
      filt = [y1, strengthen, t](const Block& b) {
        bool has_y1 = std::find(b.begin(), b.end(), y1) != b.end();
        if (b.size() == 7) {
          // No long point other than y1.
          for (int p : b)
            if (p >= 3 * t && p != y1) return false;
          return true;
        }
        if (has_y1 && strengthen) return false;
        return true;
      };
      accept = [y1](const std::vector<Block>& blocks) {
        for (auto& b : blocks)
          if (b.size() == 7 && std::find(b.begin(), b.end(), y1) != b.end()) return true;
        return false;
      };
    } else if (family == 3) {
      shell = make_shell(std::vector<int>(5, 3));
      K = {4};
    } else if (family == 4) {
      int m = (t == 4) ? 6 : 8;
      int kk = (t == 4) ? 3 : 1;
      std::vector<int> sizes(t, 3);
      sizes.push_back(m);
      shell = make_shell(sizes);
      K = {3, 4};
      for (int i = 0; i < kk; ++i) marked.push_back(3 * t + i);
      int base = 3 * t;
      filt = [base, kk, m](const Block& b) {
        if (b.size() == 3) {
          for (int p : b)
            if (p >= base + kk && p < base + m) return false;  // unmarked long point
        }
        return true;
      };
      accept = [base, kk](const std::vector<Block>& blocks) {
        std::set<int> in3;
        for (auto& b : blocks)
          if (b.size() == 3)
            for (int p : b)
              if (p >= base) in3.insert(p);
        for (int i = 0; i < kk; ++i)
          if (!in3.count(base + i)) return false;
        return true;
      };
    } else {
      fail(Errc::precondition, "unknown master family");
    }
    auto blocks = exact_cover_gdd(shell, K, {}, filt, accept, 400000000LL);
    Design d = with_blocks(shell, blocks);
    TextSection sec = section_of(d, K);
    if (!marked.empty()) {
      std::string ms;
      for (size_t i = 0; i < marked.size(); ++i) ms += (i ? " " : "") + std::to_string(marked[i]);
      sec.sidecar["MARKED"] = ms;
    }
    return write_section(sec);
  };
  auto parse = [](const std::string& s) {
    auto sec = read_sections_str(s).at(0);
    Marked m;
    m.design = sec.design;
    m.block_sizes = sec.block_sizes;
    auto it = sec.sidecar.find("MARKED");
    if (it != sec.sidecar.end()) {
      std::istringstream is(it->second);
      int x;
      while (is >> x) m.marked_points.push_back(x);
    }
    return m;
  };
  auto verify = [](const Marked& m) {
    return verify_gdd(m.design, m.design.type(), m.block_sizes).valid;
  };
  return serve<Marked>(*this, dir_, key, compute, parse, verify);
}

Design Oracle::single_gdd(const std::vector<int>& sizes, const std::set<int>& K) {
  std::string key = "gdd";
  for (int s : sizes) key += "_" + std::to_string(s);
  if (K != std::set<int>{3}) {
    key += "_K";
    for (int k : K) key += std::to_string(k);
  }
  auto compute = [&, sizes, K]() {
    Design shell = make_shell(sizes);
    std::vector<Block> blocks;
    if (K == std::set<int>{3}) {
      blocks = search_gdd3(shell, {}, key);
    } else {
      blocks = exact_cover_gdd(shell, K, {}, nullptr, nullptr, 400000000LL);
    }
    return write_section(section_of(with_blocks(shell, blocks), K));
  };
  auto parse = [](const std::string& s) { return read_sections_str(s).at(0).design; };
  auto verify = [&sizes, K](const Design& d) {
    return verify_gdd(d, GroupType::from_sizes(sizes), K).valid;
  };
  return serve<Design>(*this, dir_, key, compute, parse, verify);
}

CyclicPartialSts Oracle::cps(int v, int r, bool pair_safe) {
  std::string key = "cps_" + std::to_string(v) + "_" + std::to_string(r) +
                    (pair_safe ? "_safe" : "");
  auto compute = [v, r, pair_safe]() {
    auto c = cyclic_partial_sts(v, r, pair_safe);
    Design d = make_shell(std::vector<int>(v, 1));
    TextSection sec = section_of(d);
    std::string st;
    for (auto& tr : c.triples) {
      st += std::to_string(tr.a) + " " + std::to_string(tr.b) + " " +
            std::to_string(tr.span) + " ";
    }
    sec.sidecar["STARTERS"] = st;
    sec.sidecar["R"] = std::to_string(r);
    return write_section(sec);
  };
  auto parse = [v, r](const std::string& s) {
    auto sec = read_sections_str(s).at(0);
    CyclicPartialSts c;
    c.v = v;
    c.r = r;
    std::istringstream is(sec.sidecar.at("STARTERS"));
    int a, b, span;
    while (is >> a >> b >> span) {
      DifferenceTriple tr;
      tr.a = a;
      tr.b = b;
      tr.span = span;
      tr.c = std::min(span, v - span);
      c.triples.push_back(tr);
      c.starters.push_back({0, a, span});
    }
    return c;
  };
  auto verify = [v, r](const CyclicPartialSts& c) {
    std::set<int> covered;
    for (auto& tr : c.triples) {
      for (int d : {tr.a, tr.b, tr.c})
        if (d < 1 || 2 * d > v || covered.count(d)) return false;
      covered.insert(tr.a);
      covered.insert(tr.b);
      covered.insert(tr.c);
    }
    int deg = 0;
    for (int d = 1; 2 * d <= v; ++d)
      if (!covered.count(d)) deg += (2 * d == v) ? 1 : 2;
    return deg == r;
  };
  return serve<CyclicPartialSts>(*this, dir_, key, compute, parse, verify);
}

DesignPair Oracle::pair_leaf(int g, int t, int u) {
  if (g < 0 || t < 0 || u < 0) fail(Errc::precondition, "negative parameters");
  if (degenerate_triple(g, t, u)) {
    Design d = (g == 0 || t == 0) ? make_shell({u}) : make_shell(std::vector<int>(t, g));
    return {d, d};
  }
  if (!pair_admissible(g, t, u).admissible)
    fail(Errc::does_not_exist, "no disjoint pair of this type");
  std::string key = "pair_" + std::to_string(g) + "_" + std::to_string(t) + "_" +
                    std::to_string(u);
  auto compute = [this, g, t, u, key]() {
    if (u == g) {
      // Type g^{t+1}: build and send the extra group back to the long slot.
      DesignPair p = pair_leaf(g, t + 1, 0);
      std::vector<int> img(p.first.n);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j <= t; ++j)
          img[i * (t + 1) + j] = (j < t) ? i * t + j : g * t + i;
      DesignPair q = relabel(p, img, g * (t + 1));
      Design shell = make_gtu_shell(g, t, u);
      q.first.groups = shell.groups;
      q.second.groups = shell.groups;
      q.first.n = q.second.n = shell.n;
      q.first.finalize();
      q.second.finalize();
      return pair_text(q);
    }
    if (u == 0) {
      if (t == 3 && g >= 2) return pair_text(latin_shift_pair(g, 3, 0));
      if (g >= 2 && (t % 6 == 1 || t % 6 == 3)) return pair_text(sts_weight_pair(sts(t), g));
      Design shell = make_gtu_shell(g, t, 0);
      auto b1 = search_gdd3(shell, {}, key + "_a");
      std::set<Block> black(b1.begin(), b1.end());
      auto b2 = search_gdd3(shell, black, key + "_b");
      return pair_text({with_blocks(shell, b1), with_blocks(shell, b2)});
    }
    // g = 1 families and the generic search fallback.
    if (g == 1 && u_large_applicable(1, t, u)) {
      if (u == (t - 1)) return pair_text(construct_u_max(1, t));
      return pair_text(construct_u_large(1, t, u));
    }
    Design shell = make_gtu_shell(g, t, u);
    auto b1 = search_gdd3(shell, {}, key + "_a");
    std::set<Block> black(b1.begin(), b1.end());
    auto b2 = search_gdd3(shell, black, key + "_b");
    return pair_text({with_blocks(shell, b1), with_blocks(shell, b2)});
  };
  auto parse = [](const std::string& s) { return pair_from_text(s); };
  auto verify = [g, t, u](const DesignPair& p) {
    return verify_disjoint_pair(p, GroupType::of(g, t, u)).valid;
  };
  return serve<DesignPair>(*this, dir_, key, compute, parse, verify);
}

}  // namespace gdd
