#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdd/design.hpp"
#include "gdd/differences.hpp"

namespace gdd {

// Provider of every externally cited design: direct constructions where a
// standard one exists, complete backtracking search otherwise, behind a
// persistent verified cache. Deterministic for a fixed query.
class Oracle {
 public:
  // cache_dir empty: in-memory only. use_cache=false forces re-search but
  // still records results in memory for the session.
  explicit Oracle(std::string cache_dir = "", bool use_cache = true);

  struct Resolvable {
    Design design;
    std::vector<std::vector<Block>> classes;
  };

  struct Marked {
    Design design;
    std::set<int> block_sizes;
    std::vector<int> marked_points;  // the certificate for side conditions
  };

  // Disjoint pair of 3-GDDs of type g^t u^1 for the cited leaves
  // (u = 0, u = g, and the 1^t u^1 families).
  DesignPair pair_leaf(int g, int t, int u);

  // Single K-GDD on groups of the given sizes.
  Design single_gdd(const std::vector<int>& sizes, const std::set<int>& K = {3});

  Design sts(int v);
  Resolvable kts(int v);
  Design pbd(int v, const std::set<int>& K);
  Design td(int k, int n);  // transversal design TD(k,n), prime power n

  // The four mixed-GDD master families with their point certificates.
  Marked kgdd_master(int family, int t);

  CyclicPartialSts cps(int v, int r, bool pair_safe);

  // Generic cached computation; fn must be deterministic.
  std::string get_or_compute(const std::string& key,
                             const std::function<std::string()>& fn);

  // Drops a cache entry (memory and disk); used when verification fails.
  void invalidate(const std::string& key);

  struct Stats {
    long long hits = 0, misses = 0;
  };
  Stats stats() const { return stats_; }
  const std::string& cache_dir() const { return dir_; }
  void set_use_cache(bool u) { use_cache_ = u; }

 private:
  std::string dir_;
  bool use_cache_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> mem_;
  Stats stats_;

  std::string path_for(const std::string& key) const;
};

}  // namespace gdd
