#pragma once

#include <array>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

struct LatinSquare {
  int t = 0;
  std::vector<std::vector<int>> cells;

  int at(int i, int j) const { return cells[i][j]; }
  bool is_latin() const;
  bool is_idempotent() const;
};

bool orthogonal(const LatinSquare& a, const LatinSquare& b);

// Idempotent Latin square of order t; deterministic. t = 2 refuses.
LatinSquare idempotent_ls(int t);

// Two orthogonal Latin squares; t not in {1,2,6}.
std::pair<LatinSquare, LatinSquare> mols_pair(int t);

// Three MOLS; t >= 4, t not in {6,10}.
std::array<LatinSquare, 3> three_mols(int t);

// Disjoint pair of idempotent Latin squares (agree on the diagonal only);
// t >= 4.
std::pair<LatinSquare, LatinSquare> disjoint_idempotent_ls_pair(int t);

// TD(3,t) on I_t x I_3, groups I_t x {i}; point (x,i) has index i*t+x.
// parallel_classes[0] is the idempotent class when present.
struct ItdDesign {
  Design base;
  std::vector<std::vector<Block>> parallel_classes;
};

ItdDesign itd_from_square(const LatinSquare& ls);

// Disjoint ITD(3,t) pair sharing only the idempotent parallel class.
// keep_idempotent=false removes that class from both block sets (the form
// the recursive constructions consume). t <= 3 refuses.
std::pair<ItdDesign, ItdDesign> disjoint_itd_pair(int t, bool keep_idempotent = false);

// Disjoint RITD(3,t) pair, t >= 4, t not in {6,10}: both resolve into t
// parallel classes, class 0 idempotent and shared, classes k >= 1 disjoint
// across the designs.
std::pair<ItdDesign, ItdDesign> disjoint_ritd_pair(int t);

}  // namespace gdd
