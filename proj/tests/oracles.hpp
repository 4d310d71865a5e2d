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

// Deliberately naive reference implementations used to check the library.
// Nothing here shares code with the BFS or bitmask evaluators.

#ifndef NETCREATE_TESTS_ORACLES_HPP_
#define NETCREATE_TESTS_ORACLES_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "netcreate/graph.hpp"
#include "netcreate/rational.hpp"

namespace oracle {

using Purchases = std::vector<std::vector<int>>;
inline constexpr long kInf = std::numeric_limits<long>::max() / 4;

inline Purchases of(const netcreate::StrategyProfile& p) {
  Purchases s(p.n());
  for (int v = 0; v < p.n(); ++v) s[v].assign(p.purchases(v).begin(), p.purchases(v).end());
  return s;
}

// Floyd-Warshall on the undirected graph of all purchases.
inline std::vector<std::vector<long>> distances(const Purchases& s) {
  const int n = static_cast<int>(s.size());
  std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int v = 0; v < n; ++v) {
    for (int w : s[v]) d[v][w] = d[w][v] = 1;
  }
  for (int m = 0; m < n; ++m) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (d[a][m] + d[m][b] < d[a][b]) d[a][b] = d[a][m] + d[m][b];
      }
    }
  }
  return d;
}

// nullopt means infinite.
inline std::optional<netcreate::Rational> vertex_cost(const Purchases& s,
                                                      const netcreate::Rational& alpha, int v) {
  auto d = distances(s);
  long sum = 0;
  for (long x : d[v]) {
    if (x >= kInf) return std::nullopt;
    sum += x;
  }
  return alpha * netcreate::Rational(static_cast<long>(s[v].size())) + netcreate::Rational(sum);
}

inline std::optional<netcreate::Rational> social_cost(const Purchases& s,
                                                      const netcreate::Rational& alpha) {
  netcreate::Rational total = 0;
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    auto c = vertex_cost(s, alpha, v);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

// -1 / 0 / +1 with nullopt treated as +infinity.
inline int compare(const std::optional<netcreate::Rational>& a,
                   const std::optional<netcreate::Rational>& b) {
  if (!a && !b) return 0;
  if (!a) return 1;
  if (!b) return -1;
  return *a < *b ? -1 : (*a == *b ? 0 : 1);
}

struct Deviations {
  std::optional<netcreate::Rational> current;
  std::optional<netcreate::Rational> best;
  bool improving = false;
  bool break_even = false;  // some other strategy costs exactly the current cost
};

// Every subset of the other vertices.
inline Deviations scan(const Purchases& s, const netcreate::Rational& alpha, int v) {
  const int n = static_cast<int>(s.size());
  Deviations out;
  out.current = vertex_cost(s, alpha, v);
  out.best = out.current;
  std::vector<int> others;
  for (int w = 0; w < n; ++w) {
    if (w != v) others.push_back(w);
  }
  std::vector<int> incumbent = s[v];
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << others.size()); ++m) {
    Purchases t = s;
    t[v].clear();
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (m >> i & 1) t[v].push_back(others[i]);
    }
    if (t[v] == incumbent) continue;
    auto c = vertex_cost(t, alpha, v);
    int cmp = compare(c, out.current);
    if (cmp < 0) out.improving = true;
    if (cmp == 0) out.break_even = true;
    if (compare(c, out.best) < 0) out.best = c;
  }
  return out;
}

inline bool is_weak_nash(const Purchases& s, const netcreate::Rational& alpha) {
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    if (scan(s, alpha, v).improving) return false;
  }
  return true;
}

inline bool is_strict_nash(const Purchases& s, const netcreate::Rational& alpha) {
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    auto d = scan(s, alpha, v);
    if (d.improving || d.break_even) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // NETCREATE_TESTS_ORACLES_HPP_
