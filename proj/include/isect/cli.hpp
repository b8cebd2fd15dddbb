#pragma once

// Command-line front end. run_cli() returns the process exit code:
// 0 success, 1 a failed check or refused search, 2 usage error.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isect/constructions.hpp"
#include "isect/family_io.hpp"
#include "isect/formulas.hpp"
#include "isect/grid.hpp"
#include "isect/inequalities.hpp"
#include "isect/search/census.hpp"
#include "isect/search/cross.hpp"
#include "isect/search/rwise.hpp"
#include "isect/sweep.hpp"
#include "isect/trace.hpp"
#include "isect/verify.hpp"

namespace isect {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

inline SetMask parse_set(int n, const std::string& text) {
  std::vector<int> elems;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = detail::trim(tok);
    if (tok.empty()) continue;
    try {
      elems.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw parameter_error("bad set element '" + tok + "'");
    }
  }
  return SetMask::of(n, elems);
}

/// reports/<sub>/<timestamp>, or `override` when given.
inline std::filesystem::path output_dir(const std::string& sub, const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  localtime_r(&tt, &tm);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::ostringstream os;
  os << std::put_time(&tm, "%Y%m%dT%H%M%S") << '-' << std::setw(3) << std::setfill('0') << ms;
  return std::filesystem::path("reports") / sub / os.str();
}

inline void write_text(const std::filesystem::path& file, const std::string& text) {
  std::filesystem::create_directories(file.parent_path());
  std::ofstream os(file);
  if (!os) throw std::runtime_error("cannot write " + file.string());
  os << text;
}

struct Flags {
  // construct / formula
  std::string family;
  std::string fn;
  long n = -1, k = -1, d = -1, t = -1, r = -1, c = -1, z = -1, l = -1, m = -1, s = -1, w = -1;
  long k1 = -1, k2 = -1, mf = -1, mg = -1, i = -1;
  std::string X, M, Z, C, T;
  std::string side = "both";
  // verify
  std::string family_file, pair_file, property = "all";
  // check-lemma / sweep
  std::string lemma = "all";
  std::string grid;
  std::string target;
  // search
  bool trivial_ok = false;
  std::uint64_t budget = default_budget();
  int jobs = 1;
  int max_n = -1;
  std::uint64_t concept_budget = CrossOptions{}.concept_budget;
  bool no_size_bound = false, no_trivial_dead = false, no_pair_filter = false;
  bool reduce_isomorphs = false, no_timing = false, census = false, all_pairs = false;
  // trace
  std::string suite = "core";
  // output
  std::string out;
  bool no_save = false;
};

inline long need(long v, const char* name) {
  if (v < 0) throw parameter_error(std::string("missing required flag --") + name);
  return v;
}

// ---------------------------------------------------------------------------

inline int do_construct(const Flags& f, std::ostream& out) {
  const int n = static_cast<int>(need(f.n, "n"));
  auto set = [&](const std::string& text, const char* name) {
    if (text.empty()) throw parameter_error(std::string("missing required flag --") + name);
    return parse_set(n, text);
  };
  auto depth = [&]() -> int {
    if (f.d >= 0) return static_cast<int>(f.d);
    if (f.t >= 0 && f.r >= 0) return static_cast<int>(f.t + f.r - 2);
    throw parameter_error("need --d, or --t and --r (d = t+r-2)");
  };
  std::optional<Family> single;
  std::optional<FamilyPair> pair;
  const std::string& kind = f.family;
  if (kind == "H") {
    single = build_H({n, static_cast<int>(need(f.k, "k")), depth(), set(f.X, "X"), set(f.M, "M")});
  } else if (kind == "A") {
    single = build_A({n, static_cast<int>(need(f.k, "k")), depth(), set(f.Z, "Z")});
  } else if (kind == "E1" || kind == "E2" || kind == "E3" || kind == "H1") {
    const H1Params p{n, static_cast<int>(need(f.k, "k")), static_cast<int>(need(f.t, "t")),
                     set(f.X, "X"), set(f.M, "M"), set(f.C, "C")};
    single = kind == "E1" ? build_E1(p) : kind == "E2" ? build_E2(p)
           : kind == "E3" ? build_E3(p) : build_H1(p);
  } else if (kind == "star") {
    single = build_star(n, static_cast<int>(need(f.k, "k")), set(f.X, "X"));
  } else if (kind == "threshold") {
    single = build_threshold(n, static_cast<int>(need(f.k, "k")), static_cast<int>(need(f.t, "t")),
                             set(f.T, "T"));
  } else if (kind == "complete") {
    single = build_complete(n, static_cast<int>(need(f.k, "k")), set(f.M, "M"));
  } else if (kind == "ia") {
    pair = build_cross_pair_ia(n, static_cast<int>(need(f.k1, "k1")),
                               static_cast<int>(need(f.k2, "k2")), static_cast<int>(need(f.t, "t")),
                               set(f.X, "X"), set(f.M, "M"));
  } else if (kind == "ib") {
    pair = build_cross_pair_ib(n, static_cast<int>(need(f.k, "k")), static_cast<int>(need(f.t, "t")),
                               set(f.X, "X"), set(f.M, "M"));
  } else if (kind == "threshold-pair") {
    pair = build_cross_pair_threshold(n, static_cast<int>(need(f.k1, "k1")),
                                      static_cast<int>(need(f.k2, "k2")),
                                      static_cast<int>(need(f.t, "t")), set(f.T, "T"));
  } else {
    throw parameter_error("unknown --family '" + kind + "'");
  }

  if (single) {
    if (!f.out.empty()) save_family(f.out, *single);
    else write_family(out, *single);
    return kOk;
  }
  if (!f.out.empty()) {
    std::filesystem::create_directories(f.out);
    save_family((std::filesystem::path(f.out) / "left.fam").string(), pair->first);
    save_family((std::filesystem::path(f.out) / "right.fam").string(), pair->second);
    return kOk;
  }
  if (f.side == "left") {
    write_family(out, pair->first);
  } else if (f.side == "right") {
    write_family(out, pair->second);
  } else {
    out << "# left\n";
    write_family(out, pair->first);
    out << "# right\n";
    write_family(out, pair->second);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline nlohmann::json cover_json(const CoverCertificate& c) {
  return {{"cover", c.cover.elements()}, {"size", c.size}, {"kind", std::string(c.kind)}};
}

inline int do_verify(const Flags& f, std::ostream& out) {
  if (f.family_file.empty()) throw parameter_error("missing required flag --family");
  const Family fam = load_family(f.family_file);
  std::optional<Family> other;
  if (!f.pair_file.empty()) other = load_family(f.pair_file);
  const int t = static_cast<int>(need(f.t, "t"));

  std::vector<std::string> props;
  if (f.property == "all") {
    if (other) props = {"cross", "pair-nontrivial", "maximal-pair"};
    else props = {"rwise", "nontrivial", "maximal", "cover"};
  } else {
    std::stringstream ss(f.property);
    std::string p;
    while (std::getline(ss, p, ',')) props.push_back(detail::trim(p));
  }

  nlohmann::json results = nlohmann::json::array();
  bool all_true = true;
  for (const auto& prop : props) {
    nlohmann::json j{{"property", prop}};
    std::vector<std::string> conv;
    bool verdict = false;
    if (prop == "rwise") {
      const int r = static_cast<int>(need(f.r, "r"));
      verdict = is_r_wise_t_intersecting(fam, r, t);
      j["r"] = r;
      if (fam.empty()) conv.emplace_back(convention::empty_family_intersecting);
    } else if (prop == "nontrivial") {
      verdict = is_nontrivial(fam, t);
      if (fam.empty()) conv.emplace_back(convention::empty_family_trivial);
    } else if (prop == "maximal") {
      const int r = static_cast<int>(need(f.r, "r"));
      j["r"] = r;
      if (!is_r_wise_t_intersecting(fam, r, t)) {
        j["verdict"] = false;
        j["error"] = "family is not r-wise t-intersecting";
        j["conventions_used"] = conv;
        results.push_back(j);
        all_true = false;
        continue;
      }
      verdict = is_maximal_rwise(fam, r, t);
    } else if (prop == "cover") {
      const CoverCertificate cert = covering_number(fam, t);
      j["covering_number"] = cert.size;
      j["certificate"] = cover_json(cert);
      verdict = true;
      if (cert.by_convention) conv.emplace_back(convention::empty_family_cover_zero);
    } else if (prop == "min-covers") {
      const Family covers = min_covers(fam, t);
      nlohmann::json list = nlohmann::json::array();
      for (SetMask c : covers) list.push_back(c.elements());
      j["min_covers"] = list;
      verdict = true;
      if (fam.empty()) conv.emplace_back(convention::empty_family_cover_zero);
    } else if (prop == "cross" || prop == "pair-nontrivial" || prop == "maximal-pair") {
      if (!other) throw parameter_error("property '" + prop + "' needs --pair");
      const PairParams pp{fam, *other, t};
      if (prop == "cross") verdict = is_cross_t_intersecting(pp);
      else if (prop == "pair-nontrivial") verdict = is_nontrivial_pair(pp);
      else verdict = is_maximal_pair(pp);
      if ((fam.empty() || other->empty()) && prop == "pair-nontrivial")
        conv.emplace_back(convention::empty_family_trivial);
    } else {
      throw parameter_error("unknown --property '" + prop + "'");
    }
    j["verdict"] = verdict;
    j["conventions_used"] = conv;
    all_true = all_true && verdict;
    results.push_back(std::move(j));
  }
  out << (results.size() == 1 ? results[0] : results).dump(2) << '\n';
  return all_true ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

inline int do_formula(const Flags& f, std::ostream& out) {
  const std::string& fn = f.fn;
  auto k = [&] { return need(f.k, "k"); };
  auto n = [&] { return need(f.n, "n"); };
  auto t = [&] { return need(f.t, "t"); };
  auto l = [&] { return need(f.l, "l"); };
  if (fn == "h1") {
    out << to_string(h1(need(f.d, "d"), k(), need(f.c, "c"), n())) << '\n';
  } else if (fn == "h2") {
    out << to_string(h2(need(f.z, "z"), k(), n())) << '\n';
  } else if (fn.size() == 2 && fn[0] == 'g' && fn[1] >= '1' && fn[1] <= '6') {
    out << to_string(g(fn[1] - '0', k(), l(), n(), t())) << '\n';
  } else if (fn.size() == 3 && fn.rfind("gt", 0) == 0 && fn[2] >= '1' && fn[2] <= '6') {
    out << to_string(g_tilde(fn[2] - '0', k(), l(), n(), t())) << '\n';
  } else if (fn == "fprime") {
    out << to_string(f_prime(n(), k(), l(), need(f.m, "m"), t())) << '\n';
  } else if (fn == "f2") {
    out << to_string(f2(need(f.m, "m"), k(), l(), n(), t())) << '\n';
  } else if (fn == "gw") {
    out << to_string(g_w(need(f.w, "w"), n(), k(), l(), need(f.s, "s"), t())) << '\n';
  } else if (fn == "bound") {
    out << to_string(bound_family_size(need(f.mf, "mf"), need(f.mg, "mg"), n(), k(), l(), t()))
        << '\n';
  } else if (fn == "threshold") {
    out << cross_product_threshold(need(f.k1, "k1"), need(f.k2, "k2"), t()) << '\n';
  } else {
    throw parameter_error("unknown --fn '" + fn + "'");
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline int do_check_lemma(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<Inequality> which;
  if (f.lemma == "all") {
    which.assign(kAllInequalities.begin(), kAllInequalities.end());
  } else {
    std::stringstream ss(f.lemma);
    std::string id;
    while (std::getline(ss, id, ',')) {
      const auto q = parse_inequality(detail::trim(id));
      if (!q) throw parameter_error("unknown --lemma '" + id + "'");
      which.push_back(*q);
    }
  }
  Grid grid = Grid::parse(f.grid.empty() ? "t=1..3,k2=t+1..8,k1=k2..10" : f.grid);
  grid.add_default({"n", "thr", "thr+50", {}});
  for (const char* axis : {"t", "k1", "k2"})
    if (!grid.has(axis)) throw parameter_error(std::string("--grid needs axis '") + axis + "'");

  std::ostringstream csv;
  csv << "lemma,name,t,k1,k2,n,threshold,n_meets_threshold,status\n";
  nlohmann::json rows = nlohmann::json::array();
  long holds = 0, fails = 0, unmet = 0, fails_below = 0, skipped_tuples = 0;
  for (Inequality q : which) {
    grid.for_each([&](const GridPoint& p) {
      const long t = p.at("t"), k1 = p.at("k1"), k2 = p.at("k2"), n = p.at("n");
      const auto v = check_inequality_lemma(q, k1, k2, n, t);
      const bool excluded = is_exceptional_cross_tuple(k1, k2, t);
      const std::string status = excluded ? "excluded-tuple" : std::string(to_string(v.status));
      csv << inequality_id(q) << ',' << inequality_name(q) << ',' << t << ',' << k1 << ',' << k2
          << ',' << n << ',' << v.threshold << ',' << (v.n_meets_threshold ? "true" : "false")
          << ',' << status << '\n';
      rows.push_back({{"lemma", inequality_id(q)}, {"t", t}, {"k1", k1}, {"k2", k2}, {"n", n},
                      {"threshold", v.threshold}, {"n_meets_threshold", v.n_meets_threshold},
                      {"status", status}});
      if (excluded) ++skipped_tuples;
      else if (v.status == InequalityVerdict::Status::holds) ++holds;
      else if (v.status == InequalityVerdict::Status::hypotheses_unmet) ++unmet;
      else if (v.n_meets_threshold) ++fails;
      else ++fails_below;
    });
  }
  out << csv.str();
  err << "holds=" << holds << " fails=" << fails << " fails_below_threshold=" << fails_below
      << " hypotheses_unmet=" << unmet << " excluded_tuples=" << skipped_tuples << '\n';
  if (!f.no_save) {
    const auto dir = output_dir("check-lemma", f.out);
    write_text(dir / "rows.csv", csv.str());
    nlohmann::json report{{"holds", holds},
                          {"fails", fails},
                          {"fails_below_threshold", fails_below},
                          {"hypotheses_unmet", unmet},
                          {"excluded_tuples", skipped_tuples},
                          {"rows", rows}};
    write_text(dir / "report.json", report.dump(2) + "\n");
  }
  return fails == 0 ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

inline void save_search(const SearchReport& rep, const Flags& f, const CensusTable* census) {
  const auto dir = output_dir("search", f.out);
  write_text(dir / "report.json",
             to_json(rep, {!f.no_timing, f.all_pairs}).dump(2) + "\n");
  std::size_t idx = 0;
  auto name = [&](const char* prefix) {
    std::ostringstream os;
    os << prefix << std::setw(4) << std::setfill('0') << idx++ << ".fam";
    return os.str();
  };
  for (const auto& w : rep.witnesses) write_text(dir / "witnesses" / name("w"), format_family(w));
  for (const auto& p : rep.witness_pairs) {
    const std::string base = name("p");
    write_text(dir / "witnesses" / (base.substr(0, base.size() - 4) + "-left.fam"),
               format_family(p.left));
    write_text(dir / "witnesses" / (base.substr(0, base.size() - 4) + "-right.fam"),
               format_family(p.right));
  }
  if (census) {
    std::ostringstream csv;
    csv << "case,subcase,tau_left,tau_right,size_left,size_right,product,bound,bound_value\n";
    for (const auto& row : census->rows)
      csv << row.case_id << ',' << row.subcase << ',' << row.tau_left << ',' << row.tau_right << ','
          << row.size_left << ',' << row.size_right << ',' << to_string(row.product) << ','
          << row.bound_name << ',' << to_string(row.bound_value) << '\n';
    write_text(dir / "rows.csv", csv.str());
  }
}

inline int do_search_rwise(const Flags& f, std::ostream& out, std::ostream& err) {
  RwiseOptions opt;
  opt.require_nontrivial = !f.trivial_ok;
  opt.budget = f.budget;
  opt.jobs = f.jobs;
  if (f.max_n >= 0) opt.max_n = f.max_n;
  opt.use_size_bound = !f.no_size_bound;
  opt.use_trivial_dead = !f.no_trivial_dead;
  opt.use_pair_filter = !f.no_pair_filter;
  opt.reduce_isomorphs = f.reduce_isomorphs;
  const SearchReport rep =
      max_rwise(static_cast<int>(need(f.n, "n")), static_cast<int>(need(f.k, "k")),
                static_cast<int>(need(f.t, "t")), static_cast<int>(need(f.r, "r")), opt);
  out << to_json(rep, {!f.no_timing, false}).dump(2) << '\n';
  if (!f.no_save) save_search(rep, f, nullptr);
  if (rep.status == "refused") {
    err << "refused: " << rep.reason;
    if (rep.estimate > 0) err << " (estimated tree size " << rep.estimate << ")";
    err << '\n';
    return kFailed;
  }
  for (const auto& [name, verdict] : rep.checks)
    if (verdict == "fail") return kFailed;
  return kOk;
}

inline int do_search_cross(const Flags& f, std::ostream& out, std::ostream& err) {
  CrossOptions opt;
  opt.require_nontrivial = !f.trivial_ok;
  if (f.max_n >= 0) opt.max_n = f.max_n;
  opt.concept_budget = f.concept_budget;
  const int t = static_cast<int>(need(f.t, "t"));
  const SearchReport rep = cross_concepts(static_cast<int>(need(f.n, "n")),
                                          static_cast<int>(need(f.k1, "k1")),
                                          static_cast<int>(need(f.k2, "k2")), t, opt);
  nlohmann::json j = to_json(rep, {!f.no_timing, f.all_pairs});
  std::optional<CensusTable> census;
  if (f.census && rep.status == "ok") {
    census = covering_number_census(rep);
    nlohmann::json counts;
    for (int c = 1; c <= 5; ++c) counts[std::to_string(c)] = census->case_counts[c];
    j["census"] = counts;
  }
  out << j.dump(2) << '\n';
  if (!f.no_save) save_search(rep, f, census ? &*census : nullptr);
  if (rep.status == "refused") {
    err << "refused: " << rep.reason << " (closed pairs at most " << rep.estimate << ")\n";
    return kFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline int do_sweep(const Flags& f, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.target = f.target;
  spec.grid = f.grid;
  spec.budget = f.budget;
  spec.jobs = f.jobs;
  const SweepResult r = run_sweep(spec);
  out << to_csv(r);
  err << "passed=" << r.passed << " failed=" << r.failed << " skipped=" << r.skipped << '\n';
  if (!f.no_save) write_sweep(r, output_dir("sweep", f.out));
  return r.failed == 0 ? kOk : kFailed;
}

inline int do_trace(const Flags& f, std::ostream& out) {
  TraceOptions opt;
  opt.suite = f.suite;
  opt.budget = f.budget;
  std::filesystem::path dir;
  if (!f.no_save) {
    dir = output_dir("trace", f.out);
    opt.out_dir = dir.string();
  }
  const auto entries = run_trace(opt);
  std::size_t width = 5;
  for (const auto& e : entries) width = std::max(width, e.claim.size());
  std::ostringstream table;
  table << std::left << std::setw(static_cast<int>(width)) << "claim" << "  " << std::setw(10)
        << "kind" << "  status\n";
  bool any_fail = false;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    table << std::left << std::setw(static_cast<int>(width)) << e.claim << "  " << std::setw(10)
          << e.kind << "  " << e.status << '\n';
    any_fail = any_fail || e.status == "fail";
    rows.push_back({{"claim", e.claim},
                    {"kind", e.kind},
                    {"status", e.status},
                    {"evidence", e.evidence},
                    {"detail", e.detail}});
  }
  out << table.str();
  if (!f.no_save) {
    write_text(dir / "report.json", rows.dump(2) + "\n");
    std::ostringstream csv;
    csv << "claim,kind,status,evidence\n";
    for (const auto& e : entries)
      csv << e.claim << ',' << e.kind << ',' << e.status << ',' << e.evidence << '\n';
    write_text(dir / "rows.csv", csv.str());
  }
  return any_fail ? kFailed : kOk;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli;
  Flags f;
  CLI::App app{"Exact tools for r-wise and cross t-intersecting families", "isect"};
  app.require_subcommand(1);

  auto add_ints = [&](CLI::App* sub, std::initializer_list<std::pair<const char*, long*>> list) {
    for (auto [name, ptr] : list) sub->add_option(std::string("--") + name, *ptr);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", f.out, "output directory (default reports/<subcommand>/<timestamp>)");
    sub->add_flag("--no-save", f.no_save, "do not write report files");
  };

  auto* construct = app.add_subcommand("construct", "build a named family and print it");
  construct
      ->add_option("--family", f.family,
                   "H | A | E1 | E2 | E3 | H1 | star | threshold | complete | ia | ib | "
                   "threshold-pair")
      ->required();
  add_ints(construct, {{"n", &f.n}, {"k", &f.k}, {"d", &f.d}, {"t", &f.t}, {"r", &f.r},
                       {"k1", &f.k1}, {"k2", &f.k2}});
  for (auto [name, ptr] : {std::pair{"--X", &f.X}, std::pair{"--M", &f.M}, std::pair{"--Z", &f.Z},
                           std::pair{"--C", &f.C}, std::pair{"--T", &f.T}})
    construct->add_option(name, *ptr, "comma-separated elements");
  construct->add_option("--side", f.side, "for pairs: left | right | both");
  construct->add_option("--out", f.out, "write to this file (pairs: directory)");

  auto* verify = app.add_subcommand("verify", "decide properties of a family or pair");
  verify->add_option("--family", f.family_file, "family file")->required();
  verify->add_option("--pair", f.pair_file, "second family file");
  add_ints(verify, {{"r", &f.r}, {"t", &f.t}});
  verify->add_option("--property", f.property,
                     "all | rwise | nontrivial | maximal | cover | min-covers | cross | "
                     "pair-nontrivial | maximal-pair (comma-separated)");

  auto* formula = app.add_subcommand("formula", "evaluate a closed-form count exactly");
  formula->add_option("--fn", f.fn, "h1 h2 g1..g6 gt1..gt6 fprime f2 gw bound threshold")
      ->required();
  add_ints(formula, {{"n", &f.n}, {"k", &f.k}, {"d", &f.d}, {"c", &f.c}, {"z", &f.z}, {"l", &f.l},
                     {"t", &f.t}, {"m", &f.m}, {"s", &f.s}, {"w", &f.w}, {"mf", &f.mf},
                     {"mg", &f.mg}, {"k1", &f.k1}, {"k2", &f.k2}});

  auto* lemma = app.add_subcommand("check-lemma", "check the g-comparisons over a grid");
  lemma->add_option("--lemma", f.lemma, "4.1 ... 4.10, dichotomy, a slug, or all");
  lemma->add_option("--grid", f.grid, "e.g. \"t=1..3,k2=t+1..8,k1=k2..10\"; n defaults to thr..thr+50");
  add_output(lemma);

  auto* search = app.add_subcommand("search", "exhaustive optimizers");
  search->require_subcommand(1);
  auto* rwise = search->add_subcommand("rwise", "maximum r-wise t-intersecting families");
  add_ints(rwise, {{"n", &f.n}, {"k", &f.k}, {"t", &f.t}, {"r", &f.r}});
  rwise->add_flag("--trivial-ok", f.trivial_ok, "drop the non-triviality requirement");
  rwise->add_option("--budget", f.budget, "node budget (default $ISECT_BUDGET or 5e7)");
  rwise->add_option("--jobs", f.jobs, "worker threads");
  rwise->add_option("--max-n", f.max_n, "guardrail on n (default 10)");
  rwise->add_flag("--no-size-bound", f.no_size_bound);
  rwise->add_flag("--no-trivial-dead", f.no_trivial_dead);
  rwise->add_flag("--no-pair-filter", f.no_pair_filter);
  rwise->add_flag("--reduce-isomorphs", f.reduce_isomorphs);
  rwise->add_flag("--no-timing", f.no_timing, "report wall_ms as 0");
  add_output(rwise);

  auto* cross = search->add_subcommand("cross", "closed cross t-intersecting pairs");
  add_ints(cross, {{"n", &f.n}, {"k1", &f.k1}, {"k2", &f.k2}, {"t", &f.t}});
  cross->add_flag("--trivial-ok", f.trivial_ok, "keep trivial pairs");
  cross->add_option("--max-n", f.max_n, "guardrail on n (default 7)");
  cross->add_option("--concept-budget", f.concept_budget, "maximum closed pairs to enumerate");
  cross->add_flag("--census", f.census, "classify pairs by covering numbers");
  cross->add_flag("--all-pairs", f.all_pairs, "include every closed pair in the JSON report");
  cross->add_flag("--no-timing", f.no_timing, "report wall_ms as 0");
  add_output(cross);

  auto* sweep = app.add_subcommand("sweep", "run one target over a parameter grid");
  std::string targets;
  for (const auto& name : sweep_targets()) targets += (targets.empty() ? "" : " ") + name;
  sweep->add_option("--target", f.target, targets)->required();
  sweep->add_option("--grid", f.grid, "e.g. \"n=4..12,k=2..5,d=1..k-1\"")->required();
  sweep->add_option("--budget", f.budget, "node budget for search targets");
  sweep->add_option("--jobs", f.jobs, "worker threads");
  add_output(sweep);

  auto* trace = app.add_subcommand("trace", "run the claim traceability manifest");
  trace->add_option("--suite", f.suite, "core | full");
  trace->add_option("--budget", f.budget, "node budget for searches");
  add_output(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*construct) return do_construct(f, out);
    if (*verify) return do_verify(f, out);
    if (*formula) return do_formula(f, out);
    if (*lemma) return do_check_lemma(f, out, err);
    if (*rwise) return do_search_rwise(f, out, err);
    if (*cross) return do_search_cross(f, out, err);
    if (*sweep) return do_sweep(f, out, err);
    if (*trace) return do_trace(f, out);
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const contract_error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace isect
