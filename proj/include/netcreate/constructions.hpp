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

#ifndef NETCREATE_CONSTRUCTIONS_HPP_
#define NETCREATE_CONSTRUCTIONS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "netcreate/detail/random.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/graph.hpp"
#include "netcreate/rational.hpp"

namespace netcreate {

/// Vertex 0 buys an edge to every other vertex.
inline StrategyProfile make_star(int n) {
  if (n < 1) throw InvalidInput("star needs n >= 1");
  std::vector<std::vector<Vertex>> s(n);
  for (Vertex w = 1; w < n; ++w) s[0].push_back(w);
  return StrategyProfile(n, std::move(s));
}

/// Complete graph, each pair bought once by its lower id.
inline StrategyProfile make_clique(int n) {
  if (n < 1) throw InvalidInput("clique needs n >= 1");
  std::vector<std::vector<Vertex>> s(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) s[v].push_back(w);
  }
  return StrategyProfile(n, std::move(s));
}

/// Parameters of the clique-with-pendant-leaves equilibrium at integer edge
/// price. Vertices 0..k-1 form the clique; clique vertex i owns leaves
/// k + i*(alpha-1) + j for j in [0, alpha-1).
struct CliqueLeavesSpec {
  int k = 3;
  int alpha = 2;

  int n() const { return k * alpha; }
  int leaves_per_vertex() const { return alpha - 1; }
  Vertex leaf(int clique_vertex, int j) const { return k + clique_vertex * (alpha - 1) + j; }

  void validate() const {
    if (k < 3) throw PreconditionError("clique-with-leaves needs k >= 3, got " + std::to_string(k));
    if (alpha < 2) {
      throw PreconditionError("clique-with-leaves needs integer alpha >= 2, got " +
                              std::to_string(alpha));
    }
    if (static_cast<long long>(k) * alpha > (1LL << 30)) {
      throw PreconditionError("clique-with-leaves instance too large");
    }
  }
};

inline StrategyProfile make_clique_with_leaves(const CliqueLeavesSpec& spec) {
  spec.validate();
  std::vector<std::vector<Vertex>> s(spec.n());
  for (Vertex v = 0; v < spec.k; ++v) {
    for (Vertex w = v + 1; w < spec.k; ++w) s[v].push_back(w);
    for (int j = 0; j < spec.leaves_per_vertex(); ++j) s[v].push_back(spec.leaf(v, j));
  }
  return StrategyProfile(spec.n(), std::move(s));
}

// Closed-form social cost of make_clique_with_leaves(spec): edge payments,
// then clique-vertex distance sums, then leaf distance sums.
//   clique vertex: k-1 clique peers and alpha-1 own leaves at 1,
//                  (k-1)(alpha-1) foreign leaves at 2
//   leaf:          owner at 1, k-1 other clique vertices and alpha-2 siblings
//                  at 2, (k-1)(alpha-1) foreign leaves at 3
inline Rational counterexample_cost_exact(const CliqueLeavesSpec& spec) {
  spec.validate();
  const BigInt k = spec.k;
  const BigInt a = spec.alpha;
  BigInt edges = k * (k - 1) / 2 + (a - 1) * k;
  BigInt clique = k * ((k - 1) + (a - 1) + 2 * (k - 1) * (a - 1));
  BigInt leaves = k * (a - 1) * (1 + 2 * (k - 1) + 2 * (a - 2) + 3 * (k - 1) * (a - 1));
  return Rational(a * edges + clique + leaves, 1);
}

/// 3/2 - 3/(4a) + 1/a^2 for integer a >= 2, the stated lower-bound asymptote.
inline Rational poa_lower_bound_asymptote(const Rational& alpha) {
  if (!alpha.is_integer()) {
    throw PreconditionError("lower-bound asymptote needs integral alpha, got " + alpha.to_string());
  }
  if (alpha < Rational(2)) {
    throw PreconditionError("lower-bound asymptote needs alpha >= 2, got " + alpha.to_string());
  }
  return Rational(3, 2) - Rational(3) / (Rational(4) * alpha) + Rational(1) / (alpha * alpha);
}

// 1 + 150 a^6 / (a - floor a)^2 * sqrt(ln n / n). The coefficient is exact;
// only the final sqrt/log step is floating point.
inline double poa_upper_bound_formula(const Rational& alpha, std::uint64_t n) {
  if (alpha.is_integer()) {
    throw PreconditionError("upper bound undefined for integral alpha " + alpha.to_string());
  }
  if (alpha <= Rational(2)) {
    throw PreconditionError("upper bound needs alpha > 2, got " + alpha.to_string());
  }
  Rational cube = alpha * alpha * alpha;
  if (!(Rational(BigInt(n), 1) > cube)) {
    throw PreconditionError("upper bound needs n > alpha^3 = " + cube.to_string() + ", got n = " +
                            std::to_string(n));
  }
  Rational frac = alpha.fractional_part();
  Rational coefficient = Rational(150) * cube * cube / (frac * frac);
  double nd = static_cast<double>(n);
  return 1.0 + coefficient.to_double() * std::sqrt(std::log(nd) / nd);
}

/// Each pair v<w is present with probability edge_prob and bought by a
/// uniformly chosen endpoint. Deterministic for a fixed seed.
inline StrategyProfile make_random_profile(int n, double edge_prob, std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
  if (n < 1) throw InvalidInput("random profile needs n >= 1");
  detail::Rng rng(seed);
  std::vector<std::vector<Vertex>> s(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      bool present = detail::uniform_unit(rng) < edge_prob;
      bool lower_buys = detail::coin(rng);
      if (!present) continue;
      if (lower_buys) {
        s[v].push_back(w);
      } else {
        s[w].push_back(v);
      }
    }
  }
  return StrategyProfile(n, std::move(s));
}

}  // namespace netcreate

#endif  // NETCREATE_CONSTRUCTIONS_HPP_
