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

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "netcreate/netcreate.hpp"
#include "oracles.hpp"

namespace netcreate {
namespace {

std::vector<Vertex> random_subset(std::mt19937_64& rng, int n, Vertex v) {
  std::vector<Vertex> s;
  for (Vertex w = 0; w < n; ++w) {
    if (w != v && rng() % 2) s.push_back(w);
  }
  return s;
}

TEST(DeviationCostTest, Examples) {
  GameParams g(5, Rational(3, 2));
  auto star = make_star(5);
  std::vector<Vertex> same(star.purchases(0).begin(), star.purchases(0).end());
  EXPECT_EQ(deviation_cost(g, star, 0, same), vertex_cost(g, star, 0));
  for (Vertex drop = 1; drop < 5; ++drop) {
    std::vector<Vertex> s;
    for (Vertex w : same) {
      if (w != drop) s.push_back(w);
    }
    EXPECT_TRUE(deviation_cost(g, star, 0, s).is_infinite());
  }
  std::vector<Vertex> one{1};
  EXPECT_EQ(deviation_cost(GameParams(2, Rational(1, 2)), StrategyProfile(2), 0, one),
            Cost(Rational(3, 2)));
}

TEST(DeviationCostTest, RejectsSelfAndRange) {
  GameParams g(3, 1);
  std::vector<Vertex> self{0};
  std::vector<Vertex> out{3};
  EXPECT_THROW(deviation_cost(g, make_star(3), 0, self), PreconditionError);
  EXPECT_THROW(deviation_cost(g, make_star(3), 0, out), InvalidInput);
}

TEST(DeviationCostTest, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    auto p = make_random_profile(n, 0.4, seed);
    Rational a(1 + static_cast<int>(seed % 5), 2);
    Vertex v = static_cast<Vertex>(rng() % n);
    auto s = random_subset(rng, n, v);
    auto t = oracle::of(p);
    t[v] = s;
    auto expect = oracle::vertex_cost(t, a, v);
    auto got = deviation_cost(GameParams(n, a), p, v, s);
    ASSERT_EQ(got.is_infinite(), !expect.has_value());
    if (expect) ASSERT_EQ(got.value(), *expect);
  }
}

TEST(BestResponseTest, StarLeafKeepsEmpty) {
  auto br = best_response_exact(GameParams(4, Rational(3, 2)), make_star(4), 1);
  EXPECT_TRUE(br.purchases.empty());
  EXPECT_EQ(br.cost, Cost(Rational(5)));
}

TEST(BestResponseTest, StarLeafBuysOtherLeavesWhenCheap) {
  auto br = best_response_exact(GameParams(5, Rational(9, 10)), make_star(5), 1);
  EXPECT_EQ(br.purchases, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(br.cost, Cost(Rational(27, 10) + Rational(4)));
}

TEST(BestResponseTest, IsolatedVertexConnects) {
  StrategyProfile p(4, {{1, 2}, {}, {}, {}});
  auto br = best_response_exact(GameParams(4, 2), p, 3);
  EXPECT_TRUE(br.cost.is_finite());
  EXPECT_EQ(br.purchases, (std::vector<Vertex>{0}));
}

TEST(BestResponseTest, LimitIsEnforced) {
  GameParams g(8, 2);
  ExhaustiveOptions opts;
  opts.exhaustive_limit = 7;
  EXPECT_THROW(best_response_exact(g, make_star(8), 1, opts), LimitExceeded);
  EXPECT_THROW(is_nash(g, make_star(8), opts), LimitExceeded);
  try {
    is_nash(g, make_star(8), opts);
  } catch (const LimitExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("exhaustive_limit"), std::string::npos);
  }
}

TEST(BestResponseTest, NeverAboveRandomSubsets) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    auto p = make_random_profile(n, 0.35, seed);
    GameParams g(n, Rational(1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3)));
    Vertex v = static_cast<Vertex>(seed % n);
    auto br = best_response_exact(g, p, v);
    EXPECT_EQ(deviation_cost(g, p, v, br.purchases), br.cost);
    for (int i = 0; i < 100; ++i) {
      auto s = random_subset(rng, n, v);
      ASSERT_LE(br.cost, deviation_cost(g, p, v, s));
    }
  }
}

TEST(BestResponseTest, MatchesOracleMinimum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    auto p = make_random_profile(n, 0.4, seed + 100);
    Rational a(1 + static_cast<int>(seed % 7), 3);
    Vertex v = static_cast<Vertex>(seed % n);
    auto br = best_response_exact(GameParams(n, a), p, v, {20, 2});
    auto ref = oracle::scan(oracle::of(p), a, v);
    ASSERT_TRUE(ref.best.has_value());
    ASSERT_EQ(br.cost.value(), *ref.best);
  }
}

TEST(IsNashTest, StarAtThreeHalves) {
  for (int n = 2; n <= 10; ++n) {
    auto v = is_nash(GameParams(n, Rational(3, 2)), make_star(n));
    EXPECT_TRUE(v.is_weak_nash) << n;
  }
}

TEST(IsNashTest, StarAtOneHalfHasLeafWitness) {
  auto v = is_nash(GameParams(4, Rational(1, 2)), make_star(4));
  EXPECT_FALSE(v.is_weak_nash);
  EXPECT_FALSE(v.is_strict_nash);
  ASSERT_TRUE(v.witness);
  EXPECT_NE(v.witness->vertex, 0);
  EXPECT_FALSE(v.witness->new_purchases.empty());
  for (Vertex w : v.witness->new_purchases) EXPECT_NE(w, 0);
  EXPECT_LT(v.witness->new_cost, v.witness->old_cost);
}

TEST(IsNashTest, CliqueWithLeavesBreaksEven) {
  CliqueLeavesSpec spec{4, 2};
  auto p = make_clique_with_leaves(spec);
  auto v = is_nash(GameParams(spec.n(), 2), p, {20, 2});
  EXPECT_TRUE(v.is_weak_nash);
  EXPECT_FALSE(v.is_strict_nash);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->new_cost, v.witness->old_cost);
  std::vector<Vertex> cur(p.purchases(v.witness->vertex).begin(),
                          p.purchases(v.witness->vertex).end());
  EXPECT_NE(v.witness->new_purchases, cur);
  EXPECT_EQ(deviation_cost(GameParams(spec.n(), 2), p, v.witness->vertex,
                           v.witness->new_purchases),
            v.witness->new_cost);
}

TEST(IsNashTest, StarIsNashIffAlphaAtLeastOne) {
  for (int n = 3; n <= 10; ++n) {
    for (auto a : {Rational(1, 3), Rational(9, 10), Rational(1), Rational(11, 10), Rational(2),
                   Rational(7, 2)}) {
      auto v = is_nash(GameParams(n, a), make_star(n));
      EXPECT_EQ(v.is_weak_nash, a >= Rational(1)) << "n=" << n << " alpha=" << a;
    }
  }
}

TEST(IsNashTest, AgreesWithOracle) {
  int weak = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    auto p = make_random_profile(n, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
    Rational a(1 + static_cast<int>(seed % 9), 2);
    auto v = is_nash(GameParams(n, a), p);
    auto s = oracle::of(p);
    ASSERT_EQ(v.is_weak_nash, oracle::is_weak_nash(s, a)) << seed;
    ASSERT_EQ(v.is_strict_nash, oracle::is_strict_nash(s, a)) << seed;
    if (v.is_strict_nash) ASSERT_TRUE(v.is_weak_nash);
    if (!v.is_strict_nash) ASSERT_TRUE(v.witness);
    weak += v.is_weak_nash;
  }
  EXPECT_GT(weak, 10);
}

TEST(IsNashTest, ThreadCountDoesNotChangeVerdict) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = make_random_profile(8, 0.4, seed);
    GameParams g(8, Rational(3, 2));
    auto a = verdict_to_json(is_nash(g, p, {20, 1})).dump();
    auto b = verdict_to_json(is_nash(g, p, {20, 4})).dump();
    ASSERT_EQ(a, b);
  }
}

TEST(IsNashTest, DuplicatePurchaseIsNeverWeakNash) {
  // n = 3, alpha = 1: duplicates are representable but never stable.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = oracle::of(make_random_profile(3, 0.7, seed));
    std::mt19937_64 rng(seed);
    int v = static_cast<int>(rng() % 3);
    int w = (v + 1 + static_cast<int>(rng() % 2)) % 3;
    if (std::find(s[v].begin(), s[v].end(), w) == s[v].end()) s[v].push_back(w);
    if (std::find(s[w].begin(), s[w].end(), v) == s[w].end()) s[w].push_back(v);
    StrategyProfile p(3, s);
    ASSERT_TRUE(p.has_double_purchase());
    EXPECT_FALSE(is_nash(GameParams(3, 1), p).is_weak_nash);
  }
}

TEST(HeuristicTest, StarCenterHasNoMove) {
  for (auto a : {Rational(1, 2), Rational(2), Rational(7)}) {
    EXPECT_FALSE(improving_move_heuristic(GameParams(6, a), make_star(6), 0));
  }
}

TEST(HeuristicTest, FarVertexAddsToHub) {
  // Hub 0 with three pendant vertices, then a path 0-4-5-6-7; vertex 7 is
  // at distance 4 from the hub of degree 4 >= alpha.
  StrategyProfile p(8, {{1, 2, 3, 4}, {}, {}, {}, {5}, {6}, {7}, {}});
  GameParams g(8, 2);
  std::vector<Vertex> to_hub{0};
  EXPECT_LT(deviation_cost(g, p, 7, to_hub), vertex_cost(g, p, 7));
  auto w = improving_move_heuristic(g, p, 7);
  ASSERT_TRUE(w);
  EXPECT_LT(w->new_cost, w->old_cost);
}

TEST(HeuristicTest, ChildRichSecondLayerAttractsEdge) {
  // From v = 0: N1 = {1}, N2 = {2}, and 2 has children 3, 4.
  StrategyProfile p(5, {{1}, {2}, {3, 4}, {}, {}});
  GameParams g(5, Rational(3, 2));
  std::vector<Vertex> add{1, 2};
  EXPECT_LT(deviation_cost(g, p, 0, add), vertex_cost(g, p, 0));
  DeviationClasses only_add{true, false, false, false};
  auto w = improving_move_heuristic(g, p, 0, only_add);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->new_purchases, (std::vector<Vertex>{1, 2}));
}

TEST(HeuristicTest, WitnessesAreSound) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    auto p = make_random_profile(n, 0.35, seed);
    GameParams g(n, Rational(1 + static_cast<int>(seed % 6), 2));
    for (Vertex v = 0; v < n; ++v) {
      auto w = improving_move_heuristic(g, p, v);
      if (!w) continue;
      ++found;
      ASSERT_LT(w->new_cost, w->old_cost);
      ASSERT_EQ(deviation_cost(g, p, v, w->new_purchases), w->new_cost);
      ASSERT_EQ(vertex_cost(g, p, v), w->old_cost);
    }
  }
  EXPECT_GT(found, 50);
}

TEST(HeuristicTest, SilentOnCertifiedEquilibria) {
  CliqueLeavesSpec spec{4, 3};
  auto p = make_clique_with_leaves(spec);
  GameParams g(spec.n(), 3);
  for (Vertex v = 0; v < spec.n(); ++v) EXPECT_FALSE(improving_move_heuristic(g, p, v));
}

TEST(DynamicsTest, NashStartIsFixedImmediately) {
  auto r = best_response_dynamics(GameParams(6, 2), make_star(6));
  EXPECT_TRUE(r.fixed_point);
  EXPECT_EQ(r.trajectory.size(), 1u);
  EXPECT_EQ(r.rounds, 1);
}

TEST(DynamicsTest, EmptyStartReachesNash) {
  GameParams g(4, Rational(3, 2));
  for (auto sched : {Schedule::kRoundRobin, Schedule::kSeededRandom}) {
    for (auto tie : {TieBreak::kPreferIncumbent, TieBreak::kLexLeast}) {
      DynamicsOptions opts;
      opts.schedule = sched;
      opts.tie_break = tie;
      opts.seed = 42;
      auto r = best_response_dynamics(g, StrategyProfile(4), opts);
      ASSERT_TRUE(r.fixed_point);
      EXPECT_TRUE(is_nash(g, r.trajectory.back()).is_weak_nash);
      EXPECT_EQ(r.trajectory.front(), StrategyProfile(4));
      for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
        EXPECT_NE(r.trajectory[i], r.trajectory[i - 1]);
      }
    }
  }
}

TEST(DynamicsTest, SeededRunsRepeat) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DynamicsOptions opts;
    opts.schedule = Schedule::kSeededRandom;
    opts.seed = seed;
    auto p = make_random_profile(6, 0.3, seed);
    GameParams g(6, Rational(5, 2));
    auto a = best_response_dynamics(g, p, opts);
    auto b = best_response_dynamics(g, p, opts);
    EXPECT_EQ(a.trajectory, b.trajectory);
    EXPECT_EQ(a.rounds, b.rounds);
  }
}

TEST(DynamicsTest, FixedPointsAreWeakNash) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    GameParams g(n, Rational(1 + static_cast<int>(seed % 6), 2));
    auto r = best_response_dynamics(g, make_random_profile(n, 0.4, seed));
    if (r.fixed_point) {
      EXPECT_TRUE(is_nash(g, r.trajectory.back()).is_weak_nash);
    } else {
      EXPECT_EQ(r.rounds, 100);
    }
  }
}

TEST(ConvexityTest, Examples) {
  GameParams g(5, Rational(1, 2));
  auto star = make_star(5);
  EXPECT_TRUE(addition_convexity_check(g, star, 1, {}));
  std::vector<Vertex> leaves{2, 3, 4};
  EXPECT_LT(deviation_cost(g, star, 1, leaves), vertex_cost(g, star, 1));
  std::vector<Vertex> one{2};
  EXPECT_LT(deviation_cost(g, star, 1, one), vertex_cost(g, star, 1));
  EXPECT_TRUE(addition_convexity_check(g, star, 1, leaves));
  std::vector<Vertex> owned{1};
  EXPECT_THROW(addition_convexity_check(g, star, 0, owned), PreconditionError);
}

TEST(ConvexityTest, DisconnectedBaselineCanFail) {
  // From an empty profile vertex 0 needs both edges at once.
  std::vector<Vertex> both{1, 2};
  EXPECT_FALSE(addition_convexity_check(GameParams(3, 1), StrategyProfile(3), 0, both));
}

TEST(RandomRestartTest, CliqueSucceedsFirstTry) {
  GameParams g(64, 3);
  auto k = make_clique(64);
  EXPECT_EQ(random_restart_target_count(64), 17);
  auto r = random_restart_strategy(g, k, 5, 1234, 64);
  EXPECT_EQ(r.trials, 1);
  EXPECT_LE(r.eccentricity, 2u);
  EXPECT_EQ(r.purchases.size(), 17u);
  EXPECT_LE(r.cost, Rational(3 * 17 + 128));
  EXPECT_EQ(deviation_cost(g, k, 5, r.purchases), Cost(r.cost));
  auto again = random_restart_strategy(g, k, 5, 1234, 64);
  EXPECT_EQ(again.purchases, r.purchases);
}

TEST(RandomRestartTest, Preconditions) {
  EXPECT_THROW(random_restart_strategy(GameParams(10, 3), make_star(10), 1, 1, 10),
               PreconditionError);
  try {
    random_restart_strategy(GameParams(64, 3), make_clique(64), 0, 1, 0);
    FAIL();
  } catch (const TrialsExhausted& e) {
    EXPECT_EQ(e.trials(), 0u);
  }
}

}  // namespace
}  // namespace netcreate
