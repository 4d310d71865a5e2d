// Copyright 2026 The netcreate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON, CSV and DOT renderings. Exact quantities are written as strings
// ("p/q", integers as "p", infinite costs as "inf") so that nothing passes
// through floating point.

#ifndef NETCREATE_IO_HPP_
#define NETCREATE_IO_HPP_

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netcreate/enumeration.hpp"
#include "netcreate/equilibria.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/game.hpp"
#include "netcreate/structure.hpp"

namespace netcreate {

using Json = nlohmann::ordered_json;

struct ProfileDocument {
  GameParams game;
  StrategyProfile profile;
};

inline std::string_view to_string(NashMode m) { return m == NashMode::kWeak ? "weak" : "strict"; }

inline NashMode parse_nash_mode(std::string_view s) {
  if (s == "weak") return NashMode::kWeak;
  if (s == "strict") return NashMode::kStrict;
  throw InvalidInput("mode must be 'weak' or 'strict', got '" + std::string(s) + "'");
}

inline Json vertices_json(std::span<const Vertex> vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

// ---------------------------------------------------------------------------
// Canonical profile document: {"n": int, "alpha": "p/q", "purchases": [[...], ...]}

inline Json profile_to_json(const GameParams& game, const StrategyProfile& profile) {
  check_compatible(game, profile);
  Json purchases = Json::array();
  for (Vertex v = 0; v < profile.n(); ++v) purchases.push_back(vertices_json(profile.purchases(v)));
  return Json{{"n", game.n()}, {"alpha", game.alpha().to_string()}, {"purchases", purchases}};
}

inline std::string to_canonical_json(const GameParams& game, const StrategyProfile& profile) {
  return profile_to_json(game, profile).dump();
}

inline ProfileDocument profile_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("profile document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "alpha" && key != "purchases") {
      throw InvalidInput("unknown profile field '" + key + "'");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InvalidInput("profile field 'n' must be an integer");
  }
  long long n_raw = doc["n"].get<long long>();
  if (n_raw < 1 || n_raw > (1 << 24)) {
    throw InvalidInput("profile field 'n' out of range: " + std::to_string(n_raw));
  }
  const int n = static_cast<int>(n_raw);

  if (!doc.contains("alpha")) throw InvalidInput("profile field 'alpha' is missing");
  const auto& a = doc["alpha"];
  Rational alpha;
  if (a.is_string()) {
    alpha = Rational::parse(a.get<std::string>());
  } else if (a.is_number_integer()) {
    alpha = Rational(a.get<long long>());
  } else {
    throw InvalidInput("profile field 'alpha' must be a 'p/q' string or an integer");
  }

  if (!doc.contains("purchases") || !doc["purchases"].is_array()) {
    throw InvalidInput("profile field 'purchases' must be an array");
  }
  const auto& lists = doc["purchases"];
  if (lists.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("'purchases' has " + std::to_string(lists.size()) + " lists for n = " +
                       std::to_string(n));
  }
  std::vector<std::vector<Vertex>> s(n);
  for (int v = 0; v < n; ++v) {
    const auto& list = lists[v];
    if (!list.is_array()) throw InvalidInput("purchases[" + std::to_string(v) + "] is not an array");
    for (const auto& id : list) {
      if (!id.is_number_integer()) {
        throw InvalidInput("purchases[" + std::to_string(v) + "] holds a non-integer id");
      }
      long long w = id.get<long long>();
      if (w < 0 || w >= n) {
        throw InvalidInput("purchases[" + std::to_string(v) + "] holds out-of-range id " +
                           std::to_string(w));
      }
      if (w == v) throw InvalidInput("vertex " + std::to_string(v) + " buys itself");
      if (!s[v].empty() && w <= s[v].back()) {
        throw InvalidInput("purchases[" + std::to_string(v) + "] is not strictly ascending");
      }
      s[v].push_back(static_cast<Vertex>(w));
    }
  }
  return {GameParams(n, alpha), StrategyProfile(n, std::move(s))};
}

inline ProfileDocument parse_profile_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("profile is not valid JSON: ") + e.what());
  }
  return profile_from_json(doc);
}

// ---------------------------------------------------------------------------

inline Json cost_report_to_json(const GameParams& game, const StrategyProfile& profile,
                                const CostReport& report) {
  Json vertices = Json::array();
  for (Vertex v = 0; v < game.n(); ++v) {
    const auto& vc = report.vertices[v];
    vertices.push_back(Json{
        {"vertex", v},
        {"purchases", profile.purchases(v).size()},
        {"edge_cost", vc.edge_cost.to_string()},
        {"distance_sum", vc.distance_sum ? Json(*vc.distance_sum) : Json(nullptr)},
        {"total", vc.total.to_string()},
    });
  }
  return Json{{"n", game.n()},
              {"alpha", game.alpha().to_string()},
              {"connected", report.connected},
              {"social_cost", report.social_cost.to_string()},
              {"vertices", vertices}};
}

inline Json witness_to_json(const DeviationWitness& w) {
  return Json{{"vertex", w.vertex},
              {"new_purchases", vertices_json(w.new_purchases)},
              {"old_cost", w.old_cost.to_string()},
              {"new_cost", w.new_cost.to_string()}};
}

inline Json verdict_to_json(const NashVerdict& v) {
  return Json{{"is_weak_nash", v.is_weak_nash},
              {"is_strict_nash", v.is_strict_nash},
              {"witness", v.witness ? witness_to_json(*v.witness) : Json(nullptr)}};
}

inline Json partition_to_json(const LayerPartition& p, const ChildrenMap& children) {
  Json layers = Json::array();
  for (const auto& layer : p.layers) layers.push_back(vertices_json(layer));
  Json kids = Json::object();
  for (const auto& [w, cs] : children) kids[std::to_string(w)] = vertices_json(cs);
  return Json{{"root", p.root}, {"layers", layers}, {"children", kids}};
}

inline Json check_to_json(const CheckResult& c) {
  Json comps = Json::array();
  for (const auto& cmp : c.comparisons) {
    comps.push_back(Json{{"subject", cmp.subject ? Json(*cmp.subject) : Json(nullptr)},
                         {"lhs", cmp.lhs.to_string()},
                         {"relation", to_string(cmp.relation)},
                         {"rhs", cmp.rhs.to_string()},
                         {"holds", cmp.holds}});
  }
  Json j{{"name", c.name}, {"status", to_string(c.status)}};
  if (c.status == CheckStatus::kSkipped) j["reason"] = c.skip_reason;
  j["comparisons"] = comps;
  return j;
}

inline Json audit_to_json(const LemmaAuditReport& r) {
  Json agg = Json::object();
  for (const auto& [name, s] : r.aggregate()) agg[name] = to_string(s);
  Json roots = Json::array();
  for (const auto& ra : r.roots) {
    Json cs = Json::array();
    for (const auto& c : ra.checks) cs.push_back(check_to_json(c));
    roots.push_back(Json{{"root", ra.root}, {"checks", cs}});
  }
  return Json{{"n", r.game.n()},
              {"alpha", r.game.alpha().to_string()},
              {"nash_certified", r.nash_certified},
              {"all_applicable_passed", r.all_applicable_passed()},
              {"aggregate", agg},
              {"diameter", check_to_json(r.diameter)},
              {"roots", roots}};
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One line per (root, check); the comparison shown is the first failing one,
// else the tightest.
inline std::string audit_to_csv(const LemmaAuditReport& r) {
  std::ostringstream os;
  os << "root,check,status,comparisons,subject,lhs,relation,rhs,reason\n";
  auto line = [&](const std::string& root, const CheckResult& c) {
    os << root << ',' << c.name << ',' << to_string(c.status) << ',' << c.comparisons.size() << ',';
    if (const Comparison* b = c.binding()) {
      os << (b->subject ? std::to_string(*b->subject) : "") << ',' << b->lhs << ','
         << to_string(b->relation) << ',' << b->rhs << ',';
    } else {
      os << ",,,,";
    }
    os << csv_field(c.skip_reason) << '\n';
  };
  for (const auto& ra : r.roots) {
    for (const auto& c : ra.checks) line(std::to_string(ra.root), c);
  }
  line("all", r.diameter);
  return os.str();
}

inline Json equilibria_to_json(const GameParams& game, NashMode mode,
                               const std::vector<EquilibriumEntry>& eqs) {
  Json list = Json::array();
  for (const auto& e : eqs) {
    list.push_back(Json{{"code", e.code.value}, {"social_cost", e.cost.social_cost.to_string()}});
  }
  return Json{{"n", game.n()},
              {"alpha", game.alpha().to_string()},
              {"mode", to_string(mode)},
              {"count", eqs.size()},
              {"equilibria", list}};
}

inline std::string equilibria_to_csv(const std::vector<EquilibriumEntry>& eqs) {
  std::ostringstream os;
  os << "code,social_cost\n";
  for (const auto& e : eqs) os << e.code.value << ',' << e.cost.social_cost << '\n';
  return os.str();
}

inline Json poa_to_json(const PoaResult& r) {
  return Json{{"n", r.game.n()},
              {"alpha", r.game.alpha().to_string()},
              {"mode", to_string(r.mode)},
              {"equilibrium_count", r.equilibrium_count},
              {"optimum", r.optimum.to_string()},
              {"worst_equilibrium", r.worst_equilibrium.to_string()},
              {"poa", r.poa.to_string()},
              {"optimum_code", r.optimum_code.value},
              {"worst_code", r.worst_code.value}};
}

inline constexpr std::string_view kSweepCsvHeader =
    "n,alpha,mode,equilibrium_count,optimum,worst_equilibrium,poa,optimum_code,worst_code";

inline std::string sweep_row_csv(const PoaResult& r) {
  std::ostringstream os;
  os << r.game.n() << ',' << r.game.alpha() << ',' << to_string(r.mode) << ','
     << r.equilibrium_count << ',' << r.optimum << ',' << r.worst_equilibrium << ',' << r.poa
     << ',' << r.optimum_code.value << ',' << r.worst_code.value;
  return os.str();
}

inline std::string sweep_to_csv(const std::vector<PoaResult>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& r : rows) out += sweep_row_csv(r) + '\n';
  return out;
}

// Purchases as arcs, buyer at the tail. Isolated vertices are listed too.
inline std::string profile_to_dot(const GameParams& game, const StrategyProfile& profile) {
  check_compatible(game, profile);
  std::ostringstream os;
  os << "digraph network {\n";
  os << "  label=\"n=" << game.n() << " alpha=" << game.alpha() << "\";\n";
  for (Vertex v = 0; v < profile.n(); ++v) os << "  " << v << ";\n";
  for (Vertex v = 0; v < profile.n(); ++v) {
    for (Vertex w : profile.purchases(v)) os << "  " << v << " -> " << w << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace netcreate

#endif  // NETCREATE_IO_HPP_
