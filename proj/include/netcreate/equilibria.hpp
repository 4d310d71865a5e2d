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

#ifndef NETCREATE_EQUILIBRIA_HPP_
#define NETCREATE_EQUILIBRIA_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcreate/cost.hpp"
#include "netcreate/detail/evaluators.hpp"
#include "netcreate/detail/parallel.hpp"
#include "netcreate/detail/random.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/game.hpp"
#include "netcreate/graph.hpp"

namespace netcreate {

enum class NashMode { kWeak, kStrict };

struct ExhaustiveOptions {
  int exhaustive_limit = 20;  // largest n for which all 2^(n-1) strategies are tried
  unsigned threads = 1;
};

struct DeviationWitness {
  Vertex vertex = 0;
  std::vector<Vertex> new_purchases;
  Cost old_cost;
  Cost new_cost;
};

struct NashVerdict {
  bool is_weak_nash = false;
  bool is_strict_nash = false;
  // Improving deviation when not weak; break-even deviation when weak but
  // not strict; empty for strict equilibria.
  std::optional<DeviationWitness> witness;
};

struct BestResponse {
  Cost cost;
  std::vector<Vertex> purchases;  // lexicographically least minimizer
};

namespace detail {

inline void check_exhaustive(int n, const ExhaustiveOptions& opts) {
  if (n > opts.exhaustive_limit) throw LimitExceeded("exhaustive_limit", opts.exhaustive_limit, n);
  if (n > kMaxMaskVertices - 1) throw LimitExceeded("exhaustive search", kMaxMaskVertices - 1, n);
}

inline void check_vertex(const GameParams& game, Vertex v) {
  if (v < 0 || v >= game.n()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

// Result of trying every strategy of one vertex over a range of the
// (n-1)-bit subset counter.
struct VertexScan {
  std::int64_t current = kInfiniteScaled;
  std::int64_t best = kInfiniteScaled;
  Mask best_set = 0;
  bool has_best = false;
  std::optional<Mask> break_even;  // lex-least non-incumbent set at the incumbent's cost

  void offer(Mask set, std::int64_t cost, Mask incumbent) {
    if (!has_best || cost < best || (cost == best && lex_less(set, best_set))) {
      best = cost;
      best_set = set;
      has_best = true;
    }
    if (set != incumbent && cost == current && (!break_even || lex_less(set, *break_even))) {
      break_even = set;
    }
  }

  void merge(const VertexScan& other, Mask incumbent) {
    if (other.has_best) offer(other.best_set, other.best, incumbent);
    if (other.break_even && (!break_even || lex_less(*other.break_even, *break_even))) {
      break_even = other.break_even;
    }
  }
};

inline VertexScan scan_range(const MaskEvaluator& e, Vertex v, std::uint64_t begin,
                             std::uint64_t end) {
  VertexScan scan;
  const Mask incumbent = e.bought(v);
  scan.current = e.scaled_incumbent_cost(v);
  for (std::uint64_t t = begin; t < end; ++t) {
    Mask set = spread_skipping(t, v);
    scan.offer(set, e.scaled_cost(v, set), incumbent);
  }
  return scan;
}

inline VertexScan scan_vertex(const MaskEvaluator& e, Vertex v, unsigned threads = 1) {
  const std::uint64_t count = std::uint64_t(1) << (e.n() - 1);
  if (threads <= 1) return scan_range(e, v, 0, count);
  auto parts = run_sharded(make_shards(count, threads * 4), threads, [&](const Shard& s) {
    return scan_range(e, v, s.begin, s.end);
  });
  VertexScan scan = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) scan.merge(parts[i], e.bought(v));
  return scan;
}

// Early-exit equilibrium test used by the enumerators.
inline bool is_equilibrium(const MaskEvaluator& e, NashMode mode) {
  const int n = e.n();
  const std::uint64_t count = std::uint64_t(1) << (n - 1);
  for (Vertex v = 0; v < n; ++v) {
    const Mask incumbent = e.bought(v);
    const std::int64_t current = e.scaled_incumbent_cost(v);
    for (std::uint64_t t = 0; t < count; ++t) {
      Mask set = spread_skipping(t, v);
      if (set == incumbent) continue;
      std::int64_t c = e.scaled_cost(v, set);
      if (c < current) return false;
      if (mode == NashMode::kStrict && c == current) return false;
    }
  }
  return true;
}

inline StrategyProfile profile_from_masks(int n, std::span<const Mask> bought) {
  std::vector<std::vector<Vertex>> s(n);
  for (Vertex v = 0; v < n; ++v) s[v] = mask_to_vertices(bought[v]);
  return StrategyProfile(n, std::move(s));
}

inline std::vector<Vertex> normalized_strategy(const GameParams& game, Vertex v,
                                               std::span<const Vertex> strategy) {
  std::vector<Vertex> s(strategy.begin(), strategy.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= game.n()) {
      throw InvalidInput("strategy id " + std::to_string(s[i]) + " out of range");
    }
    if (s[i] == v) throw PreconditionError("vertex " + std::to_string(v) + " cannot buy itself");
    if (i > 0 && s[i] == s[i - 1]) throw InvalidInput("strategy lists an id twice");
  }
  return s;
}

}  // namespace detail

// cost(v) after v alone switches to `new_purchases`.
inline Cost deviation_cost(const GameParams& game, const StrategyProfile& profile, Vertex v,
                           std::span<const Vertex> new_purchases) {
  check_compatible(game, profile);
  detail::check_vertex(game, v);
  auto s = detail::normalized_strategy(game, v, new_purchases);
  return detail::ListEvaluator(profile).cost(game.alpha(), v, s);
}

inline BestResponse best_response_exact(const GameParams& game, const StrategyProfile& profile,
                                        Vertex v, const ExhaustiveOptions& opts = {}) {
  check_compatible(game, profile);
  detail::check_vertex(game, v);
  detail::check_exhaustive(game.n(), opts);
  auto e = detail::MaskEvaluator::from_profile(game, profile);
  auto scan = detail::scan_vertex(e, v, opts.threads);
  return {e.alpha().to_cost(scan.best), detail::mask_to_vertices(scan.best_set)};
}

inline NashVerdict is_nash(const GameParams& game, const StrategyProfile& profile,
                           const ExhaustiveOptions& opts = {}) {
  check_compatible(game, profile);
  detail::check_exhaustive(game.n(), opts);
  auto e = detail::MaskEvaluator::from_profile(game, profile);
  const int n = game.n();

  // Parallel over vertices; the verdict is assembled in vertex order.
  auto scans = detail::run_sharded(detail::make_shards(n, n), opts.threads,
                                   [&](const detail::Shard& s) {
                                     return detail::scan_vertex(e, static_cast<Vertex>(s.begin));
                                   });

  auto witness = [&](Vertex v, detail::Mask set, std::int64_t cost) {
    return DeviationWitness{v, detail::mask_to_vertices(set),
                            e.alpha().to_cost(scans[v].current), e.alpha().to_cost(cost)};
  };

  NashVerdict verdict;
  for (Vertex v = 0; v < n; ++v) {
    if (scans[v].best < scans[v].current) {
      verdict.witness = witness(v, scans[v].best_set, scans[v].best);
      return verdict;
    }
  }
  verdict.is_weak_nash = true;
  for (Vertex v = 0; v < n; ++v) {
    if (scans[v].break_even) {
      verdict.witness = witness(v, *scans[v].break_even, scans[v].current);
      return verdict;
    }
  }
  verdict.is_strict_nash = true;
  return verdict;
}

// Polynomial deviation families for graphs beyond the exhaustive limit.
// Sound but not complete: a nullopt result does not certify an equilibrium.
struct DeviationClasses {
  bool add = true;               // S_v + {w}
  bool remove = true;            // S_v - {w}
  bool swap = true;              // S_v - {a} + {b}
  bool connect_to_layer = true;  // for a root r with v in N_2(r): S_v - N_2(r) + N_1(r)
};

inline std::optional<DeviationWitness> improving_move_heuristic(
    const GameParams& game, const StrategyProfile& profile, Vertex v,
    const DeviationClasses& classes = {}) {
  check_compatible(game, profile);
  detail::check_vertex(game, v);
  const int n = game.n();
  detail::ListEvaluator eval(profile);
  const auto incumbent = std::vector<Vertex>(profile.purchases(v).begin(),
                                             profile.purchases(v).end());
  const Cost old_cost = eval.cost(game.alpha(), v, incumbent);

  std::optional<DeviationWitness> best;
  auto consider = [&](std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    Cost c = eval.cost(game.alpha(), v, s);
    if (!(c < old_cost)) return;
    if (!best || c < best->new_cost || (c == best->new_cost && s < best->new_purchases)) {
      best = DeviationWitness{v, std::move(s), old_cost, c};
    }
  };

  std::vector<char> owned(n, 0);
  for (Vertex w : incumbent) owned[w] = 1;

  if (classes.add) {
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || owned[w]) continue;
      auto s = incumbent;
      s.push_back(w);
      consider(std::move(s));
    }
  }
  if (classes.remove) {
    for (Vertex a : incumbent) {
      std::vector<Vertex> s;
      for (Vertex x : incumbent) {
        if (x != a) s.push_back(x);
      }
      consider(std::move(s));
    }
  }
  if (classes.swap) {
    for (Vertex a : incumbent) {
      for (Vertex b = 0; b < n; ++b) {
        if (b == v || owned[b]) continue;
        std::vector<Vertex> s;
        for (Vertex x : incumbent) s.push_back(x == a ? b : x);
        consider(std::move(s));
      }
    }
  }
  if (classes.connect_to_layer) {
    const NetworkGraph& g = eval.graph();
    for (Vertex r = 0; r < n; ++r) {
      if (r == v) continue;
      auto dist = bfs_distances(g, r);
      if (dist[v] != 2) continue;
      std::vector<Vertex> s;
      for (Vertex x : incumbent) {
        if (dist[x] != 2) s.push_back(x);
      }
      for (Vertex x = 0; x < n; ++x) {
        if (dist[x] == 1) s.push_back(x);
      }
      consider(std::move(s));
    }
  }
  return best;
}

enum class Schedule { kRoundRobin, kSeededRandom };
enum class TieBreak {
  kPreferIncumbent,  // move only on strict improvement, then to the lex-least best set
  kLexLeast,         // always move to the lex-least best set
};

struct DynamicsOptions {
  Schedule schedule = Schedule::kRoundRobin;
  std::uint64_t seed = 0;
  TieBreak tie_break = TieBreak::kPreferIncumbent;
  int max_rounds = 100;
  ExhaustiveOptions exhaustive;
};

struct DynamicsResult {
  std::vector<StrategyProfile> trajectory;  // initial profile, then one entry per change
  bool fixed_point = false;
  int rounds = 0;  // passes performed, including the final quiet pass
};

inline DynamicsResult best_response_dynamics(const GameParams& game, const StrategyProfile& initial,
                                             const DynamicsOptions& opts = {}) {
  check_compatible(game, initial);
  detail::check_exhaustive(game.n(), opts.exhaustive);
  const int n = game.n();
  auto e = detail::MaskEvaluator::from_profile(game, initial);
  std::vector<detail::Mask> bought(n);
  for (Vertex v = 0; v < n; ++v) bought[v] = e.bought(v);

  DynamicsResult result;
  result.trajectory.push_back(initial);
  detail::Rng rng(opts.seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);

  for (int round = 0; round < opts.max_rounds; ++round) {
    if (opts.schedule == Schedule::kSeededRandom) detail::shuffle(rng, order);
    bool changed = false;
    for (Vertex v : order) {
      auto scan = detail::scan_vertex(e, v, opts.exhaustive.threads);
      bool move = opts.tie_break == TieBreak::kPreferIncumbent ? scan.best < scan.current
                                                               : scan.best_set != bought[v];
      if (!move) continue;
      bought[v] = scan.best_set;
      e.load(bought);
      result.trajectory.push_back(detail::profile_from_masks(n, bought));
      changed = true;
    }
    result.rounds = round + 1;
    if (!changed) {
      result.fixed_point = true;
      break;
    }
  }
  return result;
}

// Oracle for the single-edge reduction of pure additions: if buying all of
// `additions` strictly lowers v's cost, some single element already does.
// Returns whether that implication holds on this instance. It can fail when
// v's current cost is infinite (two missing components need two edges).
inline bool addition_convexity_check(const GameParams& game, const StrategyProfile& profile,
                                     Vertex v, std::span<const Vertex> additions) {
  check_compatible(game, profile);
  detail::check_vertex(game, v);
  auto extra = detail::normalized_strategy(game, v, additions);
  for (Vertex s : extra) {
    if (profile.buys(v, s)) {
      throw PreconditionError("addition " + std::to_string(s) + " is already bought by " +
                              std::to_string(v));
    }
  }
  if (extra.empty()) return true;
  detail::ListEvaluator eval(profile);
  std::vector<Vertex> base(profile.purchases(v).begin(), profile.purchases(v).end());
  const Cost before = eval.cost(game.alpha(), v, base);

  auto with = [&](std::span<const Vertex> add) {
    auto s = base;
    s.insert(s.end(), add.begin(), add.end());
    std::sort(s.begin(), s.end());
    return eval.cost(game.alpha(), v, s);
  };
  if (!(with(extra) < before)) return true;
  for (Vertex s : extra) {
    if (with(std::span<const Vertex>(&s, 1)) < before) return true;
  }
  return false;
}

struct RandomRestartResult {
  std::vector<Vertex> purchases;
  Rational cost;
  int trials = 0;
  Distance eccentricity = 0;
};

inline int random_restart_target_count(int n) {
  double x = std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)));
  return std::min(n - 1, static_cast<int>(std::ceil(x)));
}

// Drops all of w's purchases and buys ceil(sqrt(n ln n)) distinct uniformly
// random targets, resampling until w is within distance 2 of everyone.
inline RandomRestartResult random_restart_strategy(const GameParams& game,
                                                   const StrategyProfile& profile, Vertex w,
                                                   std::uint64_t seed, int max_trials) {
  check_compatible(game, profile);
  detail::check_vertex(game, w);
  const int n = game.n();
  const double threshold = std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)));
  detail::ListEvaluator eval(profile);
  for (Vertex x = 0; x < n; ++x) {
    if (!(eval.graph().degree(x) > threshold)) {
      throw PreconditionError("vertex " + std::to_string(x) + " has degree " +
                              std::to_string(eval.graph().degree(x)) +
                              ", not above sqrt(n ln n) = " + std::to_string(threshold));
    }
  }
  const int targets = random_restart_target_count(n);
  std::vector<Vertex> population;
  for (Vertex x = 0; x < n; ++x) {
    if (x != w) population.push_back(x);
  }
  detail::Rng rng(seed);
  for (int trial = 1; trial <= max_trials; ++trial) {
    auto sample = detail::sample_distinct(rng, population, targets);
    std::sort(sample.begin(), sample.end());
    auto reach = eval.reach(w, sample);
    if (reach.distance_sum && reach.eccentricity <= 2) {
      Rational cost = game.alpha() * Rational(targets) + Rational(*reach.distance_sum);
      return {std::move(sample), std::move(cost), trial, reach.eccentricity};
    }
  }
  throw TrialsExhausted(static_cast<std::size_t>(std::max(max_trials, 0)));
}

}  // namespace netcreate

#endif  // NETCREATE_EQUILIBRIA_HPP_
