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

#ifndef NETCREATE_STRUCTURE_HPP_
#define NETCREATE_STRUCTURE_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netcreate/detail/parallel.hpp"
#include "netcreate/equilibria.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/game.hpp"
#include "netcreate/graph.hpp"
#include "netcreate/rational.hpp"

namespace netcreate {

// Distance layers around a root: layers[i-1] holds N_i, each sorted.
struct LayerPartition {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> layer_of;  // per vertex; 0 for the root

  int depth() const { return static_cast<int>(layers.size()); }

  // N_i for i >= 1; empty beyond the last layer.
  std::span<const Vertex> layer(int i) const {
    if (i < 1 || i > depth()) return {};
    return layers[i - 1];
  }
};

inline LayerPartition layer_partition(const NetworkGraph& graph, Vertex root) {
  if (root < 0 || root >= graph.n()) throw InvalidInput("root out of range");
  auto dist = bfs_distances(graph, root);
  LayerPartition p;
  p.root = root;
  p.layer_of.resize(graph.n());
  for (Vertex x = 0; x < graph.n(); ++x) {
    if (dist[x] == kUnreachable) {
      throw PreconditionError("layer partition needs a connected graph; vertex " +
                              std::to_string(x) + " is unreachable from " + std::to_string(root));
    }
    p.layer_of[x] = static_cast<int>(dist[x]);
    if (dist[x] == 0) continue;
    if (static_cast<int>(dist[x]) > p.depth()) p.layers.resize(dist[x]);
    p.layers[dist[x] - 1].push_back(x);
  }
  return p;
}

// For each w in N_2, the vertices of N_3, N_4, ... reachable from w along
// paths that go down exactly one layer per step. Every w in N_2 has an entry.
using ChildrenMap = std::map<Vertex, std::vector<Vertex>>;

inline ChildrenMap children_map(const LayerPartition& partition, const NetworkGraph& graph) {
  ChildrenMap children;
  const auto& layer_of = partition.layer_of;
  std::vector<char> seen(graph.n());
  for (Vertex w : partition.layer(2)) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Vertex> stack{w};
    std::vector<Vertex> found;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : graph.neighbors(x)) {
        if (layer_of[y] == layer_of[x] + 1 && !seen[y]) {
          seen[y] = 1;
          found.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(found.begin(), found.end());
    children[w] = std::move(found);
  }
  return children;
}

inline Distance diameter(const NetworkGraph& graph) {
  Distance best = 0;
  for (Vertex v = 0; v < graph.n(); ++v) {
    Distance e = eccentricity(graph, v);
    if (e == kUnreachable) return kUnreachable;
    best = std::max(best, e);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Lemma audit

enum class CheckStatus { kPassed, kFailed, kSkipped };
enum class Relation { kLessEqual, kLess, kGreaterEqual };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPassed: return "passed";
    case CheckStatus::kFailed: return "failed";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return "<=";
    case Relation::kLess: return "<";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

namespace checks {
inline constexpr std::string_view kChildrenBound = "children_bound";
inline constexpr std::string_view kLayerSize = "layer_size";
inline constexpr std::string_view kDist3 = "dist3";
inline constexpr std::string_view kDiameter = "diameter";
inline constexpr std::string_view kN2PurchaseBound = "n2_purchase_bound";
inline constexpr std::string_view kN34Bound = "n34_bound";
}  // namespace checks

struct Comparison {
  std::optional<Vertex> subject;  // the N_2 vertex for per-w checks
  Rational lhs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  bool holds = false;

  // How far the comparison is from failing; negative when it fails.
  Rational slack() const { return relation == Relation::kGreaterEqual ? lhs - rhs : rhs - lhs; }
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::string skip_reason;
  std::vector<Comparison> comparisons;

  static CheckResult named(std::string_view name) {
    CheckResult c;
    c.name = std::string(name);
    return c;
  }

  static CheckResult skipped(std::string_view name, std::string reason) {
    CheckResult c = named(name);
    c.skip_reason = std::move(reason);
    return c;
  }

  void add(std::optional<Vertex> subject, Rational lhs, Relation rel, Rational rhs) {
    bool ok = rel == Relation::kLessEqual ? lhs <= rhs
              : rel == Relation::kLess    ? lhs < rhs
                                          : lhs >= rhs;
    comparisons.push_back({subject, std::move(lhs), rel, std::move(rhs), ok});
    if (!ok) status = CheckStatus::kFailed;
    else if (status == CheckStatus::kSkipped) status = CheckStatus::kPassed;
  }

  // First failing comparison, else the tightest one.
  const Comparison* binding() const {
    const Comparison* out = nullptr;
    for (const auto& c : comparisons) {
      if (!c.holds) return &c;
      if (!out || c.slack() < out->slack()) out = &c;
    }
    return out;
  }
};

struct RootAudit {
  Vertex root = 0;
  std::vector<CheckResult> checks;
};

struct LemmaAuditReport {
  LemmaAuditReport(GameParams g) : game(std::move(g)) {}  // NOLINT

  GameParams game;
  bool nash_certified = false;
  std::vector<RootAudit> roots;
  CheckResult diameter;

  // Per check name: failed if any root failed, passed if some root passed,
  // skipped if every root skipped.
  CheckStatus status(std::string_view name) const {
    if (name == checks::kDiameter) return diameter.status;
    CheckStatus agg = CheckStatus::kSkipped;
    for (const auto& r : roots) {
      for (const auto& c : r.checks) {
        if (c.name != name) continue;
        if (c.status == CheckStatus::kFailed) return CheckStatus::kFailed;
        if (c.status == CheckStatus::kPassed) agg = CheckStatus::kPassed;
      }
    }
    return agg;
  }

  std::vector<std::pair<std::string, CheckStatus>> aggregate() const {
    std::vector<std::pair<std::string, CheckStatus>> out;
    for (auto name : {checks::kChildrenBound, checks::kLayerSize, checks::kDist3,
                      checks::kDiameter, checks::kN2PurchaseBound, checks::kN34Bound}) {
      out.emplace_back(std::string(name), status(name));
    }
    return out;
  }

  bool all_applicable_passed() const {
    for (const auto& [name, s] : aggregate()) {
      if (s == CheckStatus::kFailed) return false;
    }
    return true;
  }
};

namespace detail {

inline RootAudit audit_root(const GameParams& game, const StrategyProfile& profile,
                            const NetworkGraph& graph, Vertex root) {
  const Rational& a = game.alpha();
  const bool integral = a.is_integer();
  const Rational frac = a.fractional_part();
  const Rational floor_a(a.floor(), 1);

  LayerPartition part = layer_partition(graph, root);
  ChildrenMap kids = children_map(part, graph);
  const Rational n1 = part.layer(1).size();
  const Rational n2 = part.layer(2).size();
  const auto n2_members = part.layer(2);

  RootAudit out;
  out.root = root;

  {  // Every N_2 vertex has at most floor(alpha - 1) children.
    if (n2_members.empty()) {
      out.checks.push_back(CheckResult::skipped(checks::kChildrenBound, "N_2 is empty"));
    } else {
      auto c = CheckResult::named(checks::kChildrenBound);
      for (Vertex w : n2_members) {
        c.add(w, Rational(kids[w].size()), Relation::kLessEqual, floor_a - Rational(1));
      }
      out.checks.push_back(std::move(c));
    }
  }
  {  // |N_1| + |N_2| + 1 >= n / alpha.
    if (a < Rational(1)) {
      out.checks.push_back(CheckResult::skipped(
          checks::kLayerSize, "dividing alpha|N_2| + |N_1| + 1 >= n by alpha needs alpha >= 1"));
    } else {
      auto c = CheckResult::named(checks::kLayerSize);
      c.add(std::nullopt, n1 + n2 + Rational(1), Relation::kGreaterEqual, Rational(game.n()) / a);
      out.checks.push_back(std::move(c));
    }
  }
  {  // deg(root) >= alpha implies every vertex is within distance 3.
    if (Rational(graph.degree(root)) < a) {
      out.checks.push_back(CheckResult::skipped(checks::kDist3, "root degree below alpha"));
    } else {
      auto c = CheckResult::named(checks::kDist3);
      c.add(std::nullopt, Rational(part.depth()), Relation::kLessEqual, Rational(3));
      out.checks.push_back(std::move(c));
    }
  }
  {  // d(w) = |S_w ∩ N_2| <= |N_1| alpha / (alpha - floor alpha).
    if (integral) {
      out.checks.push_back(CheckResult::skipped(checks::kN2PurchaseBound, "alpha is integral"));
    } else if (n2_members.empty()) {
      out.checks.push_back(CheckResult::skipped(checks::kN2PurchaseBound, "N_2 is empty"));
    } else {
      auto c = CheckResult::named(checks::kN2PurchaseBound);
      const Rational bound = n1 * a / frac;
      for (Vertex w : n2_members) {
        std::size_t d = 0;
        for (Vertex x : profile.purchases(w)) {
          if (part.layer_of[x] == 2) ++d;
        }
        c.add(w, Rational(d), Relation::kLessEqual, bound);
      }
      out.checks.push_back(std::move(c));
    }
  }
  {  // |N_3 ∪ N_4| < |N_1| 5 alpha^3 / (alpha - floor alpha).
    if (integral) {
      out.checks.push_back(CheckResult::skipped(checks::kN34Bound, "alpha is integral"));
    } else {
      auto c = CheckResult::named(checks::kN34Bound);
      Rational n34 = Rational(part.layer(3).size() + part.layer(4).size());
      c.add(std::nullopt, n34, Relation::kLess, n1 * Rational(5) * a * a * a / frac);
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace detail

// Evaluates every structural inequality for every root. With require_nash the
// profile is first certified weak-Nash by exhaustive search; the inequalities
// are only claimed for equilibria.
inline LemmaAuditReport lemma_audit(const GameParams& game, const StrategyProfile& profile,
                                    bool require_nash, const ExhaustiveOptions& opts = {}) {
  check_compatible(game, profile);
  LemmaAuditReport report(game);
  if (require_nash) {
    NashVerdict verdict = is_nash(game, profile, opts);
    if (!verdict.is_weak_nash) {
      throw PreconditionError("lemma audit requires a weak Nash equilibrium; vertex " +
                              std::to_string(verdict.witness->vertex) + " can improve");
    }
    report.nash_certified = true;
  }
  NetworkGraph graph = build_graph(profile);
  const int n = game.n();
  report.roots = detail::run_sharded(detail::make_shards(n, n), opts.threads,
                                     [&](const detail::Shard& s) {
                                       return detail::audit_root(game, profile, graph,
                                                                 static_cast<Vertex>(s.begin));
                                     });

  const Rational& a = game.alpha();
  if (!(Rational(n) > a * a * a)) {
    report.diameter = CheckResult::skipped(checks::kDiameter, "n <= alpha^3");
  } else {
    report.diameter.name = std::string(checks::kDiameter);
    Distance d = diameter(graph);
    report.diameter.add(std::nullopt, Rational(d), Relation::kLessEqual, Rational(4));
  }
  return report;
}

}  // namespace netcreate

#endif  // NETCREATE_STRUCTURE_HPP_
