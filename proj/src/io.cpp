#include "gdd/io.hpp"

#include <fstream>
#include <sstream>

namespace gdd {

namespace {

void write_point_line(std::ostringstream& os, const char* tag, const std::vector<int>& pts) {
  os << tag << ':';
  for (int p : pts) os << ' ' << p;
  os << '\n';
}

std::vector<int> parse_ints(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> out;
  int x;
  while (is >> x) out.push_back(x);
  return out;
}

}  // namespace

std::string write_section(const TextSection& s) {
  std::ostringstream os;
  os << "GDD n=" << s.design.n << " type=" << s.design.type().str() << '\n';
  if (s.block_sizes != std::set<int>{3}) {
    os << "K:";
    for (int k : s.block_sizes) os << ' ' << k;
    os << '\n';
  }
  for (auto& g : s.design.groups) write_point_line(os, "G", g);
  for (auto& h : s.holes) write_point_line(os, "H", h);
  for (auto& b : s.design.blocks) write_point_line(os, "B", b);
  for (auto& [k, v] : s.sidecar) os << k << ": " << v << '\n';
  return os.str();
}

std::string write_design(const Design& d) {
  TextSection s;
  s.design = canonicalize(d);
  return write_section(s);
}

std::string write_pair(const DesignPair& p) {
  return write_design(p.first) + "\n" + write_design(p.second);
}

std::vector<TextSection> read_sections(std::istream& in) {
  std::vector<TextSection> out;
  TextSection cur;
  bool open = false;
  std::string line;
  auto flush = [&]() {
    if (!open) return;
    cur.design.finalize();
    out.push_back(cur);
    cur = TextSection();
    open = false;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.rfind("GDD", 0) == 0) {
      flush();
      open = true;
      auto npos = line.find("n=");
      if (npos == std::string::npos) fail(Errc::io, "bad GDD header: " + line);
      cur.design.n = std::stoi(line.substr(npos + 2));
    } else if (line.rfind("G:", 0) == 0) {
      if (!open) fail(Errc::io, "G line outside section");
      cur.design.groups.push_back(parse_ints(line.substr(2)));
    } else if (line.rfind("H:", 0) == 0) {
      cur.holes.push_back(parse_ints(line.substr(2)));
    } else if (line.rfind("B:", 0) == 0) {
      cur.design.blocks.push_back(parse_ints(line.substr(2)));
    } else if (line.rfind("K:", 0) == 0) {
      cur.block_sizes.clear();
      for (int k : parse_ints(line.substr(2))) cur.block_sizes.insert(k);
    } else {
      auto pos = line.find(':');
      if (pos == std::string::npos || !open) fail(Errc::io, "unrecognized line: " + line);
      std::string key = line.substr(0, pos);
      std::string val = line.substr(pos + 1);
      if (!val.empty() && val[0] == ' ') val.erase(0, 1);
      cur.sidecar[key] = val;
    }
  }
  flush();
  return out;
}

std::vector<TextSection> read_sections_str(const std::string& text) {
  std::istringstream is(text);
  return read_sections(is);
}

std::vector<TextSection> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open " + path);
  return read_sections(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot write " + path);
  out << content;
}

}  // namespace gdd
