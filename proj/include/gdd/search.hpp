#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

// Exact cover with dancing links. Columns 0..ncols-1 must all be covered.
// Deterministic: min-size column first (lowest index breaks ties), rows in
// insertion order unless a row permutation is supplied.
class ExactCover {
 public:
  explicit ExactCover(int ncols);
  int add_row(const std::vector<int>& cols);  // returns row id

  // Runs until on_solution returns true (accept) or the search space or node
  // budget is exhausted. Returns true when an accepted solution was found;
  // sets *exhausted when the budget tripped.
  bool solve(const std::function<bool(const std::vector<int>&)>& on_solution,
             long long node_limit = -1, bool* exhausted = nullptr);

  bool first_solution(std::vector<int>& rows_out, long long node_limit = -1,
                      bool* exhausted = nullptr);

 private:
  struct Node {
    int l, r, u, d, col, row;
  };
  std::vector<Node> nodes_;
  std::vector<int> colsize_;
  int ncols_;
  int nrows_ = 0;
  long long budget_ = 0;
  bool tripped_ = false;

  void cover(int c);
  void uncover(int c);
  bool search(std::vector<int>& stack,
              const std::function<bool(const std::vector<int>&)>& on_solution);
};

// All candidate blocks of the given sizes meeting each group at most once,
// optionally filtered.
std::vector<Block> candidate_blocks(const Design& shell, const std::set<int>& sizes,
                                    const std::function<bool(const Block&)>& filter = nullptr);

// Complete search for a block set covering every cross pair exactly once.
// Throws search_exhausted when the node budget trips, does_not_exist when the
// space is fully explored without a solution.
std::vector<Block> exact_cover_gdd(const Design& shell, const std::set<int>& K,
                                   const std::set<Block>& blacklist,
                                   const std::function<bool(const Block&)>& row_filter,
                                   const std::function<bool(const std::vector<Block>&)>& accept,
                                   long long node_limit, const std::string& shuffle_key = "");

// Stinson-style hill-climb for triple systems over the shell's cross pairs.
// Deterministic for a fixed seed key; empty result when the iteration budget
// runs out.
std::vector<Block> hill_climb_gdd3(const Design& shell, const std::set<Block>& blacklist,
                                   const std::string& seed_key, long long iter_limit = 4000000);

}  // namespace gdd
