#pragma once

// Plain-text family format:
//
//   n k
//   1,2,5
//   1,3,4
//
// One member per line as ascending comma-separated elements of [n].
// Lines starting with '#' are ignored. For k = 0 the empty member is an
// empty line.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "isect/setcore.hpp"

namespace isect {

inline void write_family(std::ostream& os, const Family& f) {
  os << f.universe() << ' ' << f.k() << '\n';
  for (SetMask m : f) os << m.to_string() << '\n';
}

inline std::string format_family(const Family& f) {
  std::ostringstream os;
  write_family(os, f);
  return os.str();
}

inline Family read_family(std::istream& is) {
  std::string line;
  int n = -1;
  int k = -1;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream header(line);
    if (!(header >> n >> k)) throw parameter_error("family header must be \"n k\", got: " + line);
    break;
  }
  if (n < 0) throw parameter_error("family text has no header line");
  Family shape(n, k);  // validates n and k

  std::vector<SetMask> members;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) {
      if (k == 0) members.push_back(SetMask::empty(n));
      continue;
    }
    std::vector<int> elems;
    std::istringstream row(line);
    std::string tok;
    int prev = 0;
    while (std::getline(row, tok, ',')) {
      std::size_t used = 0;
      int e = 0;
      try {
        e = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw parameter_error("line " + std::to_string(lineno) + ": bad element '" + tok + "'");
      }
      if (tok.find_first_not_of(" \t", used) != std::string::npos)
        throw parameter_error("line " + std::to_string(lineno) + ": bad element '" + tok + "'");
      if (e <= prev)
        throw parameter_error("line " + std::to_string(lineno) + ": elements must be ascending");
      prev = e;
      elems.push_back(e);
    }
    members.push_back(SetMask::of(n, elems));
  }
  return Family::from_members(n, k, std::move(members));
}

inline Family parse_family(const std::string& text) {
  std::istringstream is(text);
  return read_family(is);
}

inline Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parameter_error("cannot open family file " + path);
  return read_family(in);
}

inline void save_family(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write family file " + path);
  write_family(out, f);
}

}  // namespace isect
