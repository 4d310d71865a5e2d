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

#ifndef NETCREATE_DETAIL_EVALUATORS_HPP_
#define NETCREATE_DETAIL_EVALUATORS_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "netcreate/cost.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/game.hpp"
#include "netcreate/graph.hpp"
#include "netcreate/rational.hpp"

// Unilateral-deviation evaluators. Both exploit the same fact: when v
// replaces S_v, a BFS rooted at v only needs v's new neighborhood (in-buyers
// plus the new strategy); every other adjacency list is untouched, and edges
// back into v are never relaxed because v is visited first.
namespace netcreate::detail {

using Mask = std::uint64_t;
inline constexpr int kMaxMaskVertices = 64;
inline constexpr std::int64_t kInfiniteScaled = std::numeric_limits<std::int64_t>::max();

inline Mask bit(Vertex v) { return Mask(1) << v; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : bit(n) - 1; }

// Maps the (n-1)-bit counter t onto a subset of [0, n) that skips v.
inline Mask spread_skipping(Mask t, Vertex v) {
  Mask low = t & (bit(v) - 1);
  Mask high = v >= 63 ? 0 : (t >> v) << (v + 1);
  return low | high;
}

inline std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline Mask vertices_to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

// Lexicographic order on the ascending id sequences of two sets:
// {} < {0} < {0,1} < {0,1,2} < {0,2} < {1} < ...
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int d = std::countr_zero(a ^ b);
  Mask above = d >= 63 ? 0 : ~((bit(d) << 1) - 1);
  if (a & bit(d)) return (b & above) != 0;
  return (a & above) == 0;
}

// alpha = num/den with both parts small enough for exact int64 scaled costs
// on graphs of up to 64 vertices.
struct ScaledAlpha {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static ScaledAlpha from(const Rational& alpha) {
    const BigInt limit = BigInt(1) << 31;
    if (alpha.numerator() >= limit || alpha.denominator() >= limit) {
      throw LimitExceeded("alpha " + alpha.to_string() +
                          " is too large for exact exhaustive search (numerator and "
                          "denominator must be below 2^31)");
    }
    return {alpha.numerator().convert_to<std::int64_t>(),
            alpha.denominator().convert_to<std::int64_t>()};
  }

  Cost to_cost(std::int64_t scaled) const {
    if (scaled == kInfiniteScaled) return Cost::infinite();
    return Cost(Rational(BigInt(scaled), BigInt(den)));
  }
};

// Bitset evaluator for n <= 64. Costs are reported scaled by alpha's
// denominator so comparisons stay in exact integer arithmetic.
class MaskEvaluator {
 public:
  MaskEvaluator(int n, ScaledAlpha alpha) : n_(n), alpha_(alpha), full_(full_mask(n)) {
    if (n < 1 || n > kMaxMaskVertices) {
      throw LimitExceeded("bitset evaluator", kMaxMaskVertices, n);
    }
  }

  static MaskEvaluator from_profile(const GameParams& game, const StrategyProfile& profile) {
    check_compatible(game, profile);
    MaskEvaluator e(game.n(), ScaledAlpha::from(game.alpha()));
    std::vector<Mask> bought(game.n());
    for (Vertex v = 0; v < game.n(); ++v) bought[v] = vertices_to_mask(profile.purchases(v));
    e.load(bought);
    return e;
  }

  void load(std::span<const Mask> bought) {
    adj_.fill(0);
    bought_by_.fill(0);
    for (Vertex v = 0; v < n_; ++v) {
      bought_[v] = bought[v];
      for (Mask m = bought[v]; m; m &= m - 1) {
        Vertex w = std::countr_zero(m);
        adj_[v] |= bit(w);
        adj_[w] |= bit(v);
        bought_by_[w] |= bit(v);
      }
    }
  }

  int n() const { return n_; }
  const ScaledAlpha& alpha() const { return alpha_; }
  Mask bought(Vertex v) const { return bought_[v]; }

  // Distance sum from v after v switches to `strategy`; -1 if disconnected.
  std::int64_t distance_sum(Vertex v, Mask strategy) const {
    Mask visited = bit(v);
    Mask frontier = (bought_by_[v] | strategy) & ~visited;
    std::int64_t sum = 0;
    std::int64_t depth = 1;
    while (frontier) {
      sum += depth * std::popcount(frontier);
      visited |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & ~visited;
      ++depth;
    }
    return visited == full_ ? sum : -1;
  }

  std::int64_t scaled_cost(Vertex v, Mask strategy) const {
    std::int64_t d = distance_sum(v, strategy);
    if (d < 0) return kInfiniteScaled;
    return alpha_.num * std::popcount(strategy) + alpha_.den * d;
  }

  std::int64_t scaled_incumbent_cost(Vertex v) const { return scaled_cost(v, bought_[v]); }

  std::int64_t scaled_social_cost() const {
    std::int64_t total = 0;
    for (Vertex v = 0; v < n_; ++v) {
      std::int64_t c = scaled_incumbent_cost(v);
      if (c == kInfiniteScaled) return kInfiniteScaled;
      total += c;
    }
    return total;
  }

 private:
  int n_;
  ScaledAlpha alpha_;
  Mask full_;
  std::array<Mask, kMaxMaskVertices> adj_{};
  std::array<Mask, kMaxMaskVertices> bought_{};
  std::array<Mask, kMaxMaskVertices> bought_by_{};
};

// Adjacency-list evaluator for any n.
class ListEvaluator {
 public:
  explicit ListEvaluator(const StrategyProfile& profile)
      : graph_(build_graph(profile)), bought_by_(profile.n()) {
    for (Vertex v = 0; v < profile.n(); ++v) {
      for (Vertex w : profile.purchases(v)) bought_by_[w].push_back(v);
    }
  }

  struct Reach {
    std::optional<std::uint64_t> distance_sum;  // nullopt if disconnected
    Distance eccentricity = 0;                  // kUnreachable if disconnected
  };

  Reach reach(Vertex v, std::span<const Vertex> strategy) const {
    const int n = graph_.n();
    std::vector<Distance> dist(n, kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(n);
    dist[v] = 0;
    auto visit = [&](Vertex y, Distance d) {
      if (dist[y] == kUnreachable) {
        dist[y] = d;
        queue.push_back(y);
      }
    };
    for (Vertex y : bought_by_[v]) visit(y, 1);
    for (Vertex y : strategy) visit(y, 1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : graph_.neighbors(x)) visit(y, dist[x] + 1);
    }
    Reach r;
    if (static_cast<int>(queue.size()) + 1 < n) {
      r.eccentricity = kUnreachable;
      return r;
    }
    std::uint64_t sum = 0;
    for (Distance d : dist) {
      sum += d;
      r.eccentricity = std::max(r.eccentricity, d);
    }
    r.distance_sum = sum;
    return r;
  }

  Cost cost(const Rational& alpha, Vertex v, std::span<const Vertex> strategy) const {
    auto r = reach(v, strategy);
    if (!r.distance_sum) return Cost::infinite();
    return Cost(alpha * Rational(strategy.size()) + Rational(*r.distance_sum));
  }

  const NetworkGraph& graph() const { return graph_; }

 private:
  NetworkGraph graph_;
  std::vector<std::vector<Vertex>> bought_by_;
};

}  // namespace netcreate::detail

#endif  // NETCREATE_DETAIL_EVALUATORS_HPP_
