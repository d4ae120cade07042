#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

// One section of the design text format:
//   GDD n=<n> type=<g>^<t> <u>^1
//   K: 3 4            (only when block sizes differ from {3})
//   G: p1 p2 ...      (one per group)
//   H: p1 p2 ...      (holes, MGDD only)
//   B: p1 p2 p3       (blocks, sorted; list sorted)
//   STARTERS: a b c ...   (sidecar lines, key: value)
// Sections are separated by a blank line; LF endings.
struct TextSection {
  Design design;
  std::vector<std::vector<int>> holes;
  std::set<int> block_sizes{3};
  std::map<std::string, std::string> sidecar;
};

std::string write_section(const TextSection& s);
std::string write_design(const Design& d);
std::string write_pair(const DesignPair& p);

std::vector<TextSection> read_sections(std::istream& in);
std::vector<TextSection> read_sections_str(const std::string& text);
std::vector<TextSection> read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gdd
