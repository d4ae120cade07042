#include "gdd/data.hpp"

#include <algorithm>

#include "gdd/mgdd.hpp"

namespace gdd {

namespace {

// clang-format off
const int k341_a[][3] = {
  {12,0,1},{12,2,3},{12,4,6},{12,5,7},{12,8,11},{12,9,10},
  {0,2,5},{0,3,6},{0,7,9},{0,10,11},{1,2,8},{1,3,10},
  {1,4,11},{1,6,7},{2,4,7},{2,9,11},{3,4,9},{3,5,8},
  {4,5,10},{5,6,11},{6,8,9},{7,8,10},
};
const int k341_b[][3] = {
  {12,0,2},{12,1,3},{12,4,5},{12,6,9},{12,7,8},{12,10,11},
  {0,1,6},{0,3,5},{0,7,10},{0,9,11},{1,2,7},{1,4,10},
  {1,8,11},{2,3,4},{2,5,11},{2,8,9},{3,6,8},{3,9,10},
  {4,6,11},{4,7,9},{5,6,7},{5,8,10},
};
const int k345_a[][3] = {
  {12,0,1},{12,2,3},{12,4,5},{12,6,7},{12,8,9},{12,10,11},
  {13,0,2},{13,1,3},{13,4,6},{13,5,7},{13,8,10},{13,9,11},
  {14,0,3},{14,1,2},{14,4,7},{14,5,6},{14,8,11},{14,9,10},
  {15,0,5},{15,1,6},{15,2,8},{15,3,9},{15,4,11},{15,7,10},
  {16,0,10},{16,1,11},{16,2,7},{16,3,4},{16,5,8},{16,6,9},
  {0,6,11},{0,7,9},{1,4,10},{1,7,8},{2,4,9},{2,5,11},
  {3,5,10},{3,6,8},
};
const int k345_b[][3] = {
  {12,0,2},{12,1,3},{12,4,6},{12,5,7},{12,8,10},{12,9,11},
  {13,0,1},{13,2,3},{13,4,5},{13,6,7},{13,8,9},{13,10,11},
  {14,0,5},{14,1,4},{14,2,8},{14,3,10},{14,6,11},{14,7,9},
  {15,0,11},{15,1,10},{15,2,5},{15,3,4},{15,6,9},{15,7,8},
  {16,0,6},{16,1,7},{16,2,9},{16,3,8},{16,4,11},{16,5,10},
  {0,3,9},{0,7,10},{1,2,11},{1,6,8},{2,4,7},{3,5,6},
  {4,9,10},{5,8,11},
};
const int k347_a[][3] = {
  {12,0,1},{12,2,3},{12,4,5},{12,6,7},{12,8,9},{12,10,11},
  {13,0,2},{13,1,3},{13,4,6},{13,5,7},{13,8,10},{13,9,11},
  {14,0,3},{14,1,2},{14,4,7},{14,5,6},{14,8,11},{14,9,10},
  {15,0,5},{15,1,4},{15,2,8},{15,3,9},{15,6,11},{15,7,10},
  {16,0,6},{16,1,7},{16,2,9},{16,3,8},{16,4,10},{16,5,11},
  {17,0,10},{17,1,11},{17,2,5},{17,3,4},{17,6,9},{17,7,8},
  {18,0,11},{18,1,10},{18,2,7},{18,3,6},{18,4,9},{18,5,8},
  {0,7,9},{1,6,8},{2,4,11},{3,5,10},
};
const int k347_b[][3] = {
  {12,0,2},{12,1,3},{12,4,6},{12,5,7},{12,8,10},{12,9,11},
  {13,0,1},{13,2,3},{13,4,5},{13,6,7},{13,8,9},{13,10,11},
  {14,0,5},{14,1,4},{14,2,8},{14,3,9},{14,6,11},{14,7,10},
  {15,0,3},{15,1,2},{15,4,7},{15,5,6},{15,8,11},{15,9,10},
  {16,0,10},{16,1,11},{16,2,4},{16,3,5},{16,6,8},{16,7,9},
  {17,0,11},{17,1,10},{17,2,7},{17,3,6},{17,4,9},{17,5,8},
  {18,0,7},{18,1,6},{18,2,9},{18,3,8},{18,4,11},{18,5,10},
  {0,6,9},{1,7,8},{2,5,11},{3,4,10},
};

// 3-MGDD(5,4) on I_20: groups {i..i+4}, holes {j, j+5, j+10, j+15}.
const int m54_a[][3] = {
  {0,6,12},{0,7,11},{0,8,16},{0,9,17},{0,13,19},{0,14,18},
  {1,5,12},{1,7,18},{1,8,14},{1,9,15},{1,10,19},{1,13,17},
  {2,5,13},{2,6,19},{2,8,15},{2,9,10},{2,11,18},{2,14,16},
  {3,5,16},{3,6,14},{3,7,19},{3,9,11},{3,10,17},{3,12,15},
  {4,5,18},{4,6,17},{4,7,13},{4,8,10},{4,11,15},{4,12,16},
  {5,11,19},{5,14,17},{6,10,18},{6,13,15},{7,10,16},{7,14,15},
  {8,11,17},{8,12,19},{9,12,18},{9,13,16},
};
const int m54_b[][3] = {
  {0,6,13},{0,7,14},{0,8,17},{0,9,16},{0,11,18},{0,12,19},
  {1,5,19},{1,7,15},{1,8,12},{1,9,13},{1,10,17},{1,14,18},
  {2,5,18},{2,6,15},{2,8,14},{2,9,11},{2,10,16},{2,13,19},
  {3,5,11},{3,6,19},{3,7,10},{3,9,17},{3,12,16},{3,14,15},
  {4,5,12},{4,6,10},{4,7,18},{4,8,16},{4,11,17},{4,13,15},
  {5,13,17},{5,14,16},{6,12,18},{6,14,17},{7,11,19},{7,13,16},
  {8,10,19},{8,11,15},{9,10,18},{9,12,15},
};

// 3-MGDD(5,6) starter blocks on (Z_5 x I_5) u {inf_i}; entries (x, a) with
// x = -1 marking inf_a. Developed by x -> x+1 (mod 5).
const int m56_start[][3][2] = {
  {{0,0},{1,1},{3,2}}, {{0,0},{1,2},{2,4}}, {{0,1},{3,2},{2,3}},
  {{0,0},{3,1},{1,3}}, {{0,2},{1,3},{4,4}}, {{0,1},{1,2},{3,4}},
  {{0,0},{2,3},{1,4}}, {{0,0},{2,2},{4,3}}, {{0,0},{2,1},{3,4}},
  {{0,1},{1,3},{2,4}}, {{0,0},{4,1},{-1,0}}, {{0,2},{3,3},{-1,0}},
  {{0,0},{4,2},{-1,1}}, {{0,1},{4,4},{-1,1}}, {{0,0},{3,3},{-1,2}},
  {{0,2},{3,4},{-1,2}}, {{0,0},{4,4},{-1,3}}, {{0,1},{4,3},{-1,3}},
  {{0,1},{4,2},{-1,4}}, {{0,3},{2,4},{-1,4}},
};
// clang-format on

template <size_t N>
std::vector<Block> to_blocks(const int (&arr)[N][3]) {
  std::vector<Block> out;
  for (auto& row : arr) {
    Block b{row[0], row[1], row[2]};
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool embedded_pair(int g, int t, int u, DesignPair& out) {
  if (g != 3 || t != 4 || (u != 1 && u != 5 && u != 7)) return false;
  Design shell = make_gtu_shell(3, 4, u);
  out.first = shell;
  out.second = shell;
  if (u == 1) {
    out.first.blocks = to_blocks(k341_a);
    out.second.blocks = to_blocks(k341_b);
  } else if (u == 5) {
    out.first.blocks = to_blocks(k345_a);
    out.second.blocks = to_blocks(k345_b);
  } else {
    out.first.blocks = to_blocks(k347_a);
    out.second.blocks = to_blocks(k347_b);
  }
  return true;
}

MgddPair mgdd_data_5_4() {
  MgddPair p;
  Design shell;
  shell.n = 20;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> grp;
    for (int j = 0; j < 5; ++j) grp.push_back(5 * i + j);
    shell.groups.push_back(grp);
  }
  shell.finalize();
  std::vector<std::vector<int>> holes;
  for (int j = 0; j < 5; ++j) {
    std::vector<int> h;
    for (int i = 0; i < 4; ++i) h.push_back(j + 5 * i);
    holes.push_back(h);
  }
  p.first.base = shell;
  p.first.base.blocks = to_blocks(m54_a);
  p.first.holes = holes;
  p.second.base = shell;
  p.second.base.blocks = to_blocks(m54_b);
  p.second.holes = holes;
  return p;
}

MgddPair mgdd_data_5_6() {
  // Point (x,a) = x*5+a for x in Z_5, inf_i = 25+i. Groups: {x} x I_5 and
  // the ideal five; holes: (Z_5 x {a}) u {inf_a}.
  MgddPair p;
  Design shell;
  shell.n = 30;
  for (int x = 0; x < 5; ++x) {
    std::vector<int> grp;
    for (int a = 0; a < 5; ++a) grp.push_back(x * 5 + a);
    shell.groups.push_back(grp);
  }
  shell.groups.push_back({25, 26, 27, 28, 29});
  shell.finalize();
  std::vector<std::vector<int>> holes;
  for (int a = 0; a < 5; ++a) {
    std::vector<int> h;
    for (int x = 0; x < 5; ++x) h.push_back(x * 5 + a);
    h.push_back(25 + a);
    holes.push_back(h);
  }
  auto pt = [](int x, int a, int shift_x, int shift_a) {
    if (x < 0) return 25 + a;  // ideal points are fixed
    return ((x + shift_x) % 5) * 5 + (a + shift_a) % 5;
  };
  std::vector<Block> b1, b2;
  for (auto& st : m56_start)
    for (int s = 0; s < 5; ++s) {
      Block x1, x2;
      for (int c = 0; c < 3; ++c) {
        x1.push_back(pt(st[c][0], st[c][1], s, 0));
        x2.push_back(pt(st[c][0], st[c][1], s, 1));
      }
      std::sort(x1.begin(), x1.end());
      std::sort(x2.begin(), x2.end());
      b1.push_back(x1);
      b2.push_back(x2);
    }
  std::sort(b1.begin(), b1.end());
  std::sort(b2.begin(), b2.end());
  p.first.base = shell;
  p.first.base.blocks = b1;
  p.first.holes = holes;
  p.second.base = shell;
  p.second.base.blocks = b2;
  p.second.holes = holes;
  return p;
}

}  // namespace gdd
