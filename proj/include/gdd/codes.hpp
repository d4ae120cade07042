#pragma once

#include <string>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

struct TernaryCode {
  int n = 0;
  std::vector<std::vector<int>> words;  // entries over {0,1,2}, weight 3
  std::string str() const;              // file format
};

// Block incidence vectors, symbol i for design i; requires a verified
// disjoint pair.
TernaryCode export_code(const DesignPair& p, const GroupType& expected);

// All weights 3 and pairwise Hamming distance >= min_distance (exhaustive).
bool verify_code(const TernaryCode& c, int min_distance);

}  // namespace gdd
