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

#ifndef NETCREATE_GRAPH_HPP_
#define NETCREATE_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netcreate/detail/parallel.hpp"
#include "netcreate/errors.hpp"

namespace netcreate {

using Vertex = int;
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Per-vertex purchase sets S_v. Each set is kept sorted and duplicate-free.
// The same pair may be bought from both ends; that is a legal (if wasteful)
// profile.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n) : purchases_(check_n(n)) {}

  StrategyProfile(int n, std::vector<std::vector<Vertex>> purchases)
      : purchases_(std::move(purchases)) {
    check_n(n);
    if (static_cast<int>(purchases_.size()) != n) {
      throw InvalidInput("profile has " + std::to_string(purchases_.size()) +
                         " purchase lists for n = " + std::to_string(n));
    }
    for (Vertex v = 0; v < n; ++v) normalize(v, purchases_[v]);
  }

  int n() const { return static_cast<int>(purchases_.size()); }

  std::span<const Vertex> purchases(Vertex v) const { return purchases_.at(v); }
  const std::vector<std::vector<Vertex>>& all_purchases() const { return purchases_; }

  bool buys(Vertex v, Vertex w) const {
    const auto& s = purchases_.at(v);
    return std::binary_search(s.begin(), s.end(), w);
  }

  // Sum of |S_v|, duplicates counted twice.
  std::size_t purchase_count() const {
    std::size_t total = 0;
    for (const auto& s : purchases_) total += s.size();
    return total;
  }

  bool has_double_purchase() const {
    for (Vertex v = 0; v < n(); ++v) {
      for (Vertex w : purchases_[v]) {
        if (w > v && buys(w, v)) return true;
      }
    }
    return false;
  }

  StrategyProfile with_strategy(Vertex v, std::vector<Vertex> strategy) const {
    StrategyProfile copy = *this;
    copy.normalize(v, strategy);
    copy.purchases_.at(v) = std::move(strategy);
    return copy;
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  static int check_n(int n) {
    if (n < 1) throw InvalidInput("vertex count must be at least 1, got " + std::to_string(n));
    return n;
  }

  void normalize(Vertex v, std::vector<Vertex>& s) const {
    if (v < 0 || v >= n()) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= n()) {
        throw InvalidInput("vertex " + std::to_string(v) + " buys out-of-range id " +
                           std::to_string(s[i]));
      }
      if (s[i] == v) throw InvalidInput("vertex " + std::to_string(v) + " buys itself");
      if (i > 0 && s[i] == s[i - 1]) {
        throw InvalidInput("vertex " + std::to_string(v) + " lists id " +
                           std::to_string(s[i]) + " twice");
      }
    }
  }

  std::vector<std::vector<Vertex>> purchases_;
};

// Simple undirected graph; neighbor lists are sorted.
class NetworkGraph {
 public:
  explicit NetworkGraph(int n = 0) : adjacency_(std::max(n, 0)) {}

  NetworkGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : adjacency_(n) {
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
        throw InvalidInput("bad edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
      }
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    finalize();
  }

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool adjacent(Vertex v, Vertex w) const {
    const auto& a = adjacency_.at(v);
    return std::binary_search(a.begin(), a.end(), w);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += a.size();
    return twice / 2;
  }

 private:
  friend NetworkGraph build_graph(const StrategyProfile& profile);

  void finalize() {
    for (auto& a : adjacency_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  std::vector<std::vector<Vertex>> adjacency_;
};

inline NetworkGraph build_graph(const StrategyProfile& profile) {
  NetworkGraph g(profile.n());
  for (Vertex v = 0; v < profile.n(); ++v) {
    for (Vertex w : profile.purchases(v)) {
      g.adjacency_[v].push_back(w);
      g.adjacency_[w].push_back(v);
    }
  }
  g.finalize();
  return g;
}

// Hop counts from `source`; kUnreachable outside its component.
inline std::vector<Distance> bfs_distances(const NetworkGraph& graph, Vertex source) {
  std::vector<Distance> dist(graph.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(graph.n());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : graph.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// Sum of hop counts from `source`, or nullopt when some vertex is unreachable.
inline std::optional<std::uint64_t> distance_sum_from(const NetworkGraph& graph, Vertex source) {
  auto dist = bfs_distances(graph, source);
  std::uint64_t sum = 0;
  for (Distance d : dist) {
    if (d == kUnreachable) return std::nullopt;
    sum += d;
  }
  return sum;
}

inline Distance eccentricity(const NetworkGraph& graph, Vertex v) {
  auto dist = bfs_distances(graph, v);
  return *std::max_element(dist.begin(), dist.end());
}

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int n() const { return n_; }
  Distance at(Vertex v, Vertex w) const { return dist_.at(index(v, w)); }
  std::span<const Distance> row(Vertex v) const {
    return std::span<const Distance>(dist_).subspan(static_cast<std::size_t>(v) * n_, n_);
  }

  void set_row(Vertex v, std::span<const Distance> values) {
    std::copy(values.begin(), values.end(), dist_.begin() + static_cast<std::size_t>(v) * n_);
  }

 private:
  std::size_t index(Vertex v, Vertex w) const {
    if (v < 0 || w < 0 || v >= n_ || w >= n_) throw InvalidInput("distance index out of range");
    return static_cast<std::size_t>(v) * n_ + w;
  }

  int n_ = 0;
  std::vector<Distance> dist_;
};

inline DistanceMatrix all_pairs_distances(const NetworkGraph& graph, unsigned threads = 1) {
  DistanceMatrix m(graph.n());
  auto shards = detail::make_shards(graph.n(), std::max(1u, threads) * 4);
  detail::run_sharded(shards, threads, [&](const detail::Shard& s) {
    for (auto v = s.begin; v < s.end; ++v) {
      m.set_row(static_cast<Vertex>(v), bfs_distances(graph, static_cast<Vertex>(v)));
    }
    return 0;
  });
  return m;
}

}  // namespace netcreate

#endif  // NETCREATE_GRAPH_HPP_
