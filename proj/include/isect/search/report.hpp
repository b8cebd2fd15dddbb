#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "isect/exact.hpp"
#include "isect/formulas.hpp"
#include "isect/setcore.hpp"

namespace isect {

/// A closed pair: left = dual(right), right = dual(left).
struct ConceptPair {
  Family left;
  Family right;

  ExactInt product() const { return ExactInt(left.size()) * right.size(); }
  friend bool operator==(const ConceptPair&, const ConceptPair&) = default;
};

struct SearchReport {
  std::string kind;  ///< "rwise" or "cross"
  ParamSet params;
  bool require_nontrivial = true;
  ExactInt optimum = 0;
  std::vector<Family> witnesses;          ///< rwise optima
  std::vector<ConceptPair> witness_pairs; ///< cross optima
  std::vector<ConceptPair> closed_pairs;  ///< cross: every pair that passed the filter
  std::uint64_t nodes = 0;
  std::map<std::string, std::uint64_t> pruned_by;
  double wall_ms = 0;
  std::string status = "ok";  ///< ok | none | empty | refused
  std::string reason;
  double estimate = 0;  ///< estimated size of the unpruned search tree
  std::vector<std::string> conventions_used;
  std::map<std::string, std::string> checks;  ///< post-search structural checks
};

/// Node budget taken from ISECT_BUDGET, else 50 million.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("ISECT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

inline nlohmann::json family_to_json(const Family& f) {
  nlohmann::json members = nlohmann::json::array();
  for (SetMask m : f) members.push_back(m.elements());
  return {{"n", f.universe()}, {"k", f.k()}, {"size", f.size()}, {"members", members}};
}

inline nlohmann::json params_to_json(const ParamSet& p) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RwiseParams>)
          return {{"n", v.n}, {"k", v.k}, {"t", v.t}, {"r", v.r}};
        else if constexpr (std::is_same_v<T, CrossParams>)
          return {{"n", v.n}, {"k1", v.k1}, {"k2", v.k2}, {"t", v.t}};
        else
          return {{"n", v.n}, {"k", v.k}, {"t", v.t}, {"c", v.c}};
      },
      p);
}

struct ReportJsonOptions {
  bool timing = true;
  bool closed_pairs = false;
};

inline nlohmann::json to_json(const SearchReport& r, ReportJsonOptions opt = {}) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["params"] = params_to_json(r.params);
  j["require_nontrivial"] = r.require_nontrivial;
  j["status"] = r.status;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["optimum"] = to_string(r.optimum);
  auto pair_json = [](const ConceptPair& p) {
    return nlohmann::json{{"left", family_to_json(p.left)},
                          {"right", family_to_json(p.right)},
                          {"product", to_string(p.product())}};
  };
  nlohmann::json w = nlohmann::json::array();
  if (r.kind == "cross")
    for (const auto& p : r.witness_pairs) w.push_back(pair_json(p));
  else
    for (const auto& f : r.witnesses) w.push_back(family_to_json(f));
  j["witnesses"] = std::move(w);
  if (r.kind == "cross") {
    j["closed_pair_count"] = r.closed_pairs.size();
    if (opt.closed_pairs) {
      nlohmann::json all = nlohmann::json::array();
      for (const auto& p : r.closed_pairs) all.push_back(pair_json(p));
      j["closed_pairs"] = std::move(all);
    }
  }
  j["nodes"] = r.nodes;
  j["prune_counters"] = r.pruned_by;
  j["wall_ms"] = opt.timing ? r.wall_ms : 0.0;
  j["estimate"] = r.estimate;
  j["conventions_used"] = r.conventions_used;
  j["checks"] = r.checks;
  return j;
}

}  // namespace isect
