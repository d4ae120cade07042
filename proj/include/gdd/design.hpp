#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gdd/util.hpp"

namespace gdd {

using Block = std::vector<int>;

// Group type in exponent notation, canonical: parts sorted by size descending.
// A triple (g,t,u) maps to {(g,t),(u,1)}; u merges into (g,t+1) when u == g.
struct GroupType {
  std::vector<std::pair<int, int>> parts;  // (size, multiplicity)

  static GroupType of(int g, int t, int u);
  static GroupType from_sizes(const std::vector<int>& sizes);

  int point_count() const;
  int group_count() const;
  std::string str() const;
  bool operator==(const GroupType& o) const { return parts == o.parts; }
  bool operator!=(const GroupType& o) const { return !(*this == o); }
};

struct Design {
  int n = 0;
  std::vector<std::vector<int>> groups;  // ordered partition of [0,n)
  std::vector<Block> blocks;             // each sorted; canonical form sorts the list
  std::vector<int> group_of;             // point -> group index, built by finalize()

  // Validates the partition and block structure, builds the lookup.
  // Throws Errc::structural on malformed input.
  void finalize();

  bool same_group(int a, int b) const { return group_of[a] == group_of[b]; }
  GroupType type() const;
};

struct DesignPair {
  Design first;
  Design second;
};

struct Leave {
  std::vector<std::pair<int, int>> edges;  // a < b, cross-group, uncovered
};

struct Violation {
  std::string rule;
  std::string witness;
};

struct VerificationReport {
  bool valid = false;
  std::vector<Violation> violations;
  Leave leave;  // populated by verify_partial_gdd
};

// Every cross-group pair exactly once, block sizes from K, partition matches
// the expected type.
VerificationReport verify_gdd(const Design& d, const GroupType& expected,
                              const std::set<int>& block_sizes = {3});

// Every cross-group pair at most once; the report carries the leave.
VerificationReport verify_partial_gdd(const Design& d,
                                      const std::set<int>& block_sizes = {3});

// Both components 3-GDDs of the expected type, identical groups, no shared block.
VerificationReport verify_disjoint_pair(const DesignPair& p, const GroupType& expected);

// b = (g^2 t(t-1) + 2gtu)/6; throws when (g,t,u) is not realizable as a single 3-GDD.
long long block_count(long long g, long long t, long long u);

// Idempotent; equal canonical forms <=> equal designs.
Design canonicalize(const Design& d);

bool blocks_disjoint(const Design& a, const Design& b, Block* shared = nullptr);

// Standard point layout for type g^t u^1 used across the direct constructions:
// groups {j, t+j, ..., (g-1)t+j} for j in [0,t) and long group {gt,...,gt+u-1}.
Design make_gtu_shell(int g, int t, int u);

// Point relabeling: image[p] is the new index of p; the target point count
// may exceed the source. Groups and blocks are remapped.
Design relabel(const Design& d, const std::vector<int>& image, int new_n);
DesignPair relabel(const DesignPair& p, const std::vector<int>& image, int new_n);

// Plain layout: groups are consecutive runs of the given sizes.
Design make_shell(const std::vector<int>& group_sizes);

}  // namespace gdd
