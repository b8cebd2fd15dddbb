#pragma once

// Grid sweeps: one verdict row per grid point, in grid order.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "isect/constructions.hpp"
#include "isect/grid.hpp"
#include "isect/inequalities.hpp"
#include "isect/search/cross.hpp"
#include "isect/search/rwise.hpp"
#include "isect/verify.hpp"

namespace isect {

struct SweepSpec {
  std::string target;  ///< see sweep_targets()
  std::string grid;
  std::string output;  ///< directory for rows.csv and report.json; empty skips writing
  std::uint64_t budget = default_budget();
  int jobs = 1;
};

struct SweepRow {
  GridPoint inputs;
  std::map<std::string, std::string> outputs;
  std::string verdict = "skipped";  ///< pass | fail | skipped
  std::string reason;
};

struct SweepResult {
  std::string target;
  std::vector<SweepRow> rows;
  std::size_t passed = 0, failed = 0, skipped = 0;
};

namespace detail {

struct SweepTarget {
  std::vector<std::string> axes;
  std::function<void(const GridPoint&, const SweepSpec&, SweepRow&)> run;
};

inline int as_int(const GridPoint& p, const char* name) { return static_cast<int>(p.at(name)); }

inline void skip(SweepRow& row, std::string why) {
  row.verdict = "skipped";
  row.reason = std::move(why);
}

inline void compare(SweepRow& row, const ExactInt& measured, const ExactInt& expected) {
  row.outputs["measured"] = to_string(measured);
  row.outputs["expected"] = to_string(expected);
  row.verdict = measured == expected ? "pass" : "fail";
}

/// Runs `body`, turning parameter errors into skipped rows.
template <typename Body>
void guarded(SweepRow& row, Body&& body) {
  try {
    body();
  } catch (const parameter_error& e) {
    skip(row, e.what());
  }
}

inline void run_lemma(Inequality which, const GridPoint& p, SweepRow& row) {
  const long k1 = p.at("k1"), k2 = p.at("k2"), n = p.at("n"), t = p.at("t");
  const InequalityVerdict v = check_inequality_lemma(which, k1, k2, n, t);
  row.outputs["status"] = std::string(to_string(v.status));
  row.outputs["threshold"] = std::to_string(v.threshold);
  row.outputs["n_meets_threshold"] = v.n_meets_threshold ? "true" : "false";
  if (is_exceptional_cross_tuple(k1, k2, t)) return skip(row, "exceptional (k1,k2,t) tuple");
  if (v.status == InequalityVerdict::Status::hypotheses_unmet) return skip(row, "hypotheses unmet");
  if (v.status == InequalityVerdict::Status::holds) {
    row.verdict = "pass";
    return;
  }
  if (v.n_meets_threshold) {
    row.verdict = "fail";
  } else {
    skip(row, "fails below the n threshold (observational)");
  }
}

inline const std::map<std::string, SweepTarget>& sweep_target_table() {
  static const std::map<std::string, SweepTarget> table = [] {
    std::map<std::string, SweepTarget> t;
    t["h-size"] = {{"n", "k", "d"}, [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                     guarded(row, [&] {
                       const int n = as_int(p, "n"), k = as_int(p, "k"), d = as_int(p, "d");
                       require(k + 1 <= n, "needs k+1 <= n");
                       HParams hp{n, k, d, SetMask::prefix(n, d), SetMask::prefix(n, k + 1)};
                       compare(row, ExactInt(build_H(hp).size()), h1(d, k, k + 1, n));
                     });
                   }};
    t["a-size"] = {{"n", "k", "d"}, [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                     guarded(row, [&] {
                       const int n = as_int(p, "n"), k = as_int(p, "k"), d = as_int(p, "d");
                       require(d + 2 <= n, "needs d+2 <= n");
                       AParams ap{n, k, d, SetMask::prefix(n, d + 2)};
                       compare(row, ExactInt(build_A(ap).size()), h2(d + 2, k, n));
                     });
                   }};
    t["h1-size"] = {{"n", "k", "t", "c"}, [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                      guarded(row, [&] {
                        const int n = as_int(p, "n"), k = as_int(p, "k"), tt = as_int(p, "t"),
                                  c = as_int(p, "c");
                        require(c <= n, "needs c <= n");
                        H1Params hp{n, k, tt, SetMask::prefix(n, tt), SetMask::prefix(n, k),
                                    SetMask::prefix(n, c)};
                        compare(row, ExactInt(build_H1(hp).size()), h1(tt, k, c, n));
                      });
                    }};
    t["ia-product"] = {{"n", "k1", "k2", "t"},
                       [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                         guarded(row, [&] {
                           const int n = as_int(p, "n"), k1 = as_int(p, "k1"),
                                     k2 = as_int(p, "k2"), tt = as_int(p, "t");
                           require(k2 + 1 <= n, "needs k2+1 <= n");
                           auto [a, b] = build_cross_pair_ia(n, k1, k2, tt, SetMask::prefix(n, tt),
                                                             SetMask::prefix(n, k2 + 1));
                           compare(row, ExactInt(a.size()) * b.size(), g(1, k1, k2, n, tt));
                         });
                       }};
    t["threshold-product"] = {
        {"n", "k1", "k2", "t"}, [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
          guarded(row, [&] {
            const int n = as_int(p, "n"), k1 = as_int(p, "k1"), k2 = as_int(p, "k2"),
                      tt = as_int(p, "t");
            require(tt + 1 <= n, "needs t+1 <= n");
            auto [a, b] = build_cross_pair_threshold(n, k1, k2, tt, SetMask::prefix(n, tt + 1));
            compare(row, ExactInt(a.size()) * b.size(), g(2, k1, k2, n, tt));
          });
        }};
    for (Inequality q : kAllInequalities) {
      t["lemma:" + std::string(inequality_id(q))] = {
          {"n", "k1", "k2", "t"},
          [q](const GridPoint& p, const SweepSpec&, SweepRow& row) { run_lemma(q, p, row); }};
    }
    t["gw-increasing"] = {{"n", "k", "l", "s", "t"},
                          [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                            guarded(row, [&] {
                              const long n = p.at("n"), k = p.at("k"), l = p.at("l"),
                                         s = p.at("s"), tt = p.at("t");
                              require(n >= gw_threshold(k, l, tt), "n below threshold");
                              row.verdict = gw_increasing(n, k, l, s, tt) ? "pass" : "fail";
                            });
                          }};
    t["f2-decreasing"] = {{"n", "k", "l", "t"},
                          [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                            guarded(row, [&] {
                              const long n = p.at("n"), k = p.at("k"), l = p.at("l"),
                                         tt = p.at("t");
                              require(n >= f2_threshold(k, l, tt), "n below threshold");
                              row.verdict = f2_decreasing(n, k, l, tt) ? "pass" : "fail";
                            });
                          }};
    t["fprime-nondecreasing"] = {{"n", "k", "l", "t"},
                                 [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                                   guarded(row, [&] {
                                     const long n = p.at("n"), k = p.at("k"), l = p.at("l"),
                                                tt = p.at("t");
                                     require(n >= fprime_threshold(k, l, tt), "n below threshold");
                                     row.verdict =
                                         fprime_nondecreasing(n, k, l, tt) ? "pass" : "fail";
                                   });
                                 }};
    t["rwise"] = {{"n", "k", "t", "r"}, [](const GridPoint& p, const SweepSpec& spec, SweepRow& row) {
                    guarded(row, [&] {
                      const int n = as_int(p, "n"), k = as_int(p, "k"), tt = as_int(p, "t"),
                                r = as_int(p, "r");
                      RwiseOptions opt;
                      opt.budget = spec.budget;
                      const SearchReport rep = max_rwise(n, k, tt, r, opt);
                      row.outputs["status"] = rep.status;
                      row.outputs["optimum"] = to_string(rep.optimum);
                      row.outputs["witnesses"] = std::to_string(rep.witnesses.size());
                      row.outputs["nodes"] = std::to_string(rep.nodes);
                      if (rep.status == "refused" || rep.status == "empty")
                        return skip(row, rep.reason);
                      bool ok = true;
                      for (const auto& w : rep.witnesses)
                        ok = ok && is_r_wise_t_intersecting(w, r, tt) && is_nontrivial(w, tt);
                      row.verdict = ok ? "pass" : "fail";
                    });
                  }};
    t["cross"] = {{"n", "k1", "k2", "t"}, [](const GridPoint& p, const SweepSpec&, SweepRow& row) {
                    guarded(row, [&] {
                      const int n = as_int(p, "n"), k1 = as_int(p, "k1"), k2 = as_int(p, "k2"),
                                tt = as_int(p, "t");
                      const SearchReport rep = cross_concepts(n, k1, k2, tt);
                      row.outputs["status"] = rep.status;
                      row.outputs["optimum"] = to_string(rep.optimum);
                      row.outputs["closed_pairs"] = std::to_string(rep.closed_pairs.size());
                      row.outputs["g1"] = to_string(g(1, k1, k2, n, tt));
                      row.outputs["g2"] = to_string(g(2, k1, k2, n, tt));
                      if (rep.status == "refused" || rep.status == "empty")
                        return skip(row, rep.reason);
                      bool ok = true;
                      for (const auto& w : rep.closed_pairs)
                        ok = ok && is_cross_t_intersecting({w.left, w.right, tt}) &&
                             is_maximal_pair({w.left, w.right, tt});
                      row.verdict = ok ? "pass" : "fail";
                    });
                  }};
    return t;
  }();
  return table;
}

}  // namespace detail

inline std::vector<std::string> sweep_targets() {
  std::vector<std::string> out;
  for (const auto& [name, _] : detail::sweep_target_table()) out.push_back(name);
  return out;
}

inline SweepResult run_sweep(const SweepSpec& spec) {
  const auto& table = detail::sweep_target_table();
  const auto it = table.find(spec.target);
  detail::require(it != table.end(), "unknown sweep target '" + spec.target + "'");
  const Grid grid = Grid::parse(spec.grid);
  for (const auto& axis : it->second.axes)
    detail::require(grid.has(axis), "sweep target '" + spec.target + "' needs axis '" + axis + "'");

  SweepResult result;
  result.target = spec.target;
  const auto points = grid.points();
  result.rows.resize(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
      result.rows[i].inputs = points[i];
      it->second.run(points[i], spec, result.rows[i]);
    }
  };
  const int jobs = std::max(1, spec.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : result.rows) {
    if (r.verdict == "pass") ++result.passed;
    else if (r.verdict == "fail") ++result.failed;
    else ++result.skipped;
  }
  return result;
}

inline nlohmann::json to_json(const SweepResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j{{"inputs", row.inputs}, {"outputs", row.outputs}, {"verdict", row.verdict}};
    if (!row.reason.empty()) j["reason"] = row.reason;
    rows.push_back(std::move(j));
  }
  return {{"target", r.target},
          {"passed", r.passed},
          {"failed", r.failed},
          {"skipped", r.skipped},
          {"rows", std::move(rows)}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// CSV projection: input columns, then output columns, then verdict and
/// reason. Columns are the union over all rows, in sorted order.
inline std::string to_csv(const SweepResult& r) {
  std::vector<std::string> in_cols, out_cols;
  for (const auto& row : r.rows) {
    for (const auto& [k, _] : row.inputs)
      if (std::find(in_cols.begin(), in_cols.end(), k) == in_cols.end()) in_cols.push_back(k);
    for (const auto& [k, _] : row.outputs)
      if (std::find(out_cols.begin(), out_cols.end(), k) == out_cols.end()) out_cols.push_back(k);
  }
  std::sort(in_cols.begin(), in_cols.end());
  std::sort(out_cols.begin(), out_cols.end());
  std::string csv;
  auto line = [&csv](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) csv += ',';
      csv += detail::csv_field(cells[i]);
    }
    csv += '\n';
  };
  std::vector<std::string> header = in_cols;
  header.insert(header.end(), out_cols.begin(), out_cols.end());
  header.push_back("verdict");
  header.push_back("reason");
  line(header);
  for (const auto& row : r.rows) {
    std::vector<std::string> cells;
    for (const auto& c : in_cols) {
      auto f = row.inputs.find(c);
      cells.push_back(f == row.inputs.end() ? "" : std::to_string(f->second));
    }
    for (const auto& c : out_cols) {
      auto f = row.outputs.find(c);
      cells.push_back(f == row.outputs.end() ? "" : f->second);
    }
    cells.push_back(row.verdict);
    cells.push_back(row.reason);
    line(cells);
  }
  return csv;
}

/// Writes rows.csv and report.json into `dir`, creating it if needed.
inline void write_sweep(const SweepResult& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / "rows.csv");
  std::ofstream json(dir / "report.json");
  if (!csv || !json) throw std::runtime_error("cannot write sweep output under " + dir.string());
  csv << to_csv(r);
  json << to_json(r).dump(2) << '\n';
}

}  // namespace isect
