#pragma once

// Parameter grids such as "t=1..3,k2=t+1..8,k1=k2..10,n=thr..thr+50".
//
// Axes are comma-separated and nest left to right. An axis is either a range
// "lo..hi" (inclusive) or an explicit list "a|b|c". Bounds are integer
// expressions over + - * and parentheses, the names of earlier axes, and
// `thr`, which is the cross product threshold once k1, k2 and t are bound.

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "isect/errors.hpp"
#include "isect/formulas.hpp"

namespace isect {

using GridPoint = std::map<std::string, long>;

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& text, const GridPoint& env) : s_(text), env_(env) {}

  long parse() {
    const long v = sum();
    skip();
    require(pos_ == s_.size(), "grid: unexpected text in expression '" + s_ + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long sum() {
    long v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  long product() {
    long v = atom();
    while (eat('*')) v *= atom();
    return v;
  }
  long atom() {
    skip();
    if (eat('(')) {
      const long v = sum();
      require(eat(')'), "grid: missing ')' in '" + s_ + "'");
      return v;
    }
    if (eat('-')) return -atom();
    require(pos_ < s_.size(), "grid: expression ends early in '" + s_ + "'");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        name += s_[pos_++];
      return lookup(name);
    }
    throw parameter_error(std::string("grid: unexpected character '") + c + "' in '" + s_ + "'");
  }
  long lookup(const std::string& name) const {
    if (auto it = env_.find(name); it != env_.end()) return it->second;
    if (name == "thr") {
      auto k1 = env_.find("k1"), k2 = env_.find("k2"), t = env_.find("t");
      require(k1 != env_.end() && k2 != env_.end() && t != env_.end(),
              "grid: 'thr' needs k1, k2 and t bound earlier");
      return cross_product_threshold(k1->second, k2->second, t->second);
    }
    throw parameter_error("grid: unknown name '" + name + "'");
  }

  std::string s_;
  const GridPoint& env_;
  std::size_t pos_ = 0;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline long eval_expression(const std::string& text, const GridPoint& env) {
  return detail::ExprParser(text, env).parse();
}

struct GridAxis {
  std::string name;
  std::string lo, hi;              ///< range bounds, when `list` is empty
  std::vector<std::string> list;   ///< explicit values
};

class Grid {
 public:
  Grid() = default;

  static Grid parse(const std::string& text) {
    Grid g;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const std::string item =
          detail::trim(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start));
      if (!item.empty()) g.axes_.push_back(parse_axis(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return g;
  }

  const std::vector<GridAxis>& axes() const { return axes_; }
  bool has(const std::string& name) const {
    for (const auto& a : axes_)
      if (a.name == name) return true;
    return false;
  }

  /// Adds an axis unless one with this name exists.
  void add_default(GridAxis axis) {
    if (!has(axis.name)) axes_.push_back(std::move(axis));
  }

  /// Visits every point in nesting order.
  void for_each(const std::function<void(const GridPoint&)>& fn) const {
    GridPoint env;
    walk(0, env, fn);
  }

  std::vector<GridPoint> points() const {
    std::vector<GridPoint> out;
    for_each([&](const GridPoint& p) { out.push_back(p); });
    return out;
  }

 private:
  static GridAxis parse_axis(const std::string& item) {
    const auto eq = item.find('=');
    detail::require(eq != std::string::npos, "grid: axis '" + item + "' lacks '='");
    GridAxis a;
    a.name = detail::trim(item.substr(0, eq));
    detail::require(!a.name.empty(), "grid: axis '" + item + "' has no name");
    const std::string rhs = detail::trim(item.substr(eq + 1));
    const auto dots = rhs.find("..");
    if (dots != std::string::npos) {
      a.lo = detail::trim(rhs.substr(0, dots));
      a.hi = detail::trim(rhs.substr(dots + 2));
      detail::require(!a.lo.empty() && !a.hi.empty(), "grid: empty bound in '" + item + "'");
      return a;
    }
    std::size_t start = 0;
    for (;;) {
      const auto bar = rhs.find('|', start);
      a.list.push_back(detail::trim(rhs.substr(start, bar == std::string::npos ? std::string::npos
                                                                               : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    return a;
  }

  void walk(std::size_t depth, GridPoint& env,
            const std::function<void(const GridPoint&)>& fn) const {
    if (depth == axes_.size()) {
      fn(env);
      return;
    }
    const GridAxis& a = axes_[depth];
    auto visit = [&](long v) {
      env[a.name] = v;
      walk(depth + 1, env, fn);
      env.erase(a.name);
    };
    if (!a.list.empty()) {
      for (const auto& e : a.list) visit(eval_expression(e, env));
      return;
    }
    const long lo = eval_expression(a.lo, env);
    const long hi = eval_expression(a.hi, env);
    for (long v = lo; v <= hi; ++v) visit(v);
  }

  std::vector<GridAxis> axes_;
};

}  // namespace isect
