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

#ifndef NETCREATE_GAME_HPP_
#define NETCREATE_GAME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcreate/constructions.hpp"
#include "netcreate/cost.hpp"
#include "netcreate/detail/parallel.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/graph.hpp"
#include "netcreate/rational.hpp"

namespace netcreate {

// n agents, each edge costs alpha.
class GameParams {
 public:
  GameParams() = default;
  GameParams(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
    if (n_ < 1) throw InvalidInput("game needs n >= 1, got " + std::to_string(n_));
    if (alpha_.is_negative()) throw InvalidInput("alpha must be >= 0, got " + alpha_.to_string());
  }

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }

  friend bool operator==(const GameParams&, const GameParams&) = default;

 private:
  int n_ = 1;
  Rational alpha_;
};

inline void check_compatible(const GameParams& game, const StrategyProfile& profile) {
  if (game.n() != profile.n()) {
    throw InvalidInput("profile has n = " + std::to_string(profile.n()) + " but game has n = " +
                       std::to_string(game.n()));
  }
}

struct VertexCost {
  Rational edge_cost;                         // alpha * |S_v|
  std::optional<std::uint64_t> distance_sum;  // nullopt when some vertex is unreachable
  Cost total;
};

struct CostReport {
  std::vector<VertexCost> vertices;
  Cost social_cost;
  bool connected = true;
};

inline Cost vertex_cost(const GameParams& game, const StrategyProfile& profile, Vertex v) {
  check_compatible(game, profile);
  if (v < 0 || v >= game.n()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  auto sum = distance_sum_from(build_graph(profile), v);
  if (!sum) return Cost::infinite();
  return Cost(game.alpha() * Rational(profile.purchases(v).size()) + Rational(*sum));
}

inline CostReport social_cost(const GameParams& game, const StrategyProfile& profile,
                              unsigned threads = 1) {
  check_compatible(game, profile);
  NetworkGraph graph = build_graph(profile);
  const int n = game.n();
  std::vector<std::optional<std::uint64_t>> sums(n);
  auto shards = detail::make_shards(n, std::max(1u, threads) * 4);
  detail::run_sharded(shards, threads, [&](const detail::Shard& s) {
    for (auto v = s.begin; v < s.end; ++v) {
      sums[v] = distance_sum_from(graph, static_cast<Vertex>(v));
    }
    return 0;
  });

  CostReport report;
  report.vertices.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexCost vc;
    vc.edge_cost = game.alpha() * Rational(profile.purchases(v).size());
    vc.distance_sum = sums[v];
    vc.total = sums[v] ? Cost(vc.edge_cost + Rational(*sums[v])) : Cost::infinite();
    if (!sums[v]) report.connected = false;
    report.social_cost = report.social_cost + vc.total;
    report.vertices.push_back(std::move(vc));
  }
  return report;
}

struct SocialOptimum {
  Rational cost;
  StrategyProfile witness;
};

// Clique below alpha = 2, star from alpha = 2 on (the boundary goes to the
// star).
inline SocialOptimum social_optimum_cost(const GameParams& game) {
  const int n = game.n();
  if (n == 1) return {Rational(0), StrategyProfile(1)};
  const Rational& a = game.alpha();
  const Rational m = n - 1;
  if (a < Rational(2)) {
    Rational pairs = Rational(n) * m / Rational(2);
    return {a * pairs + Rational(n) * m, make_clique(n)};
  }
  return {a * m + Rational(2) * m * m, make_star(n)};
}

}  // namespace netcreate

#endif  // NETCREATE_GAME_HPP_
