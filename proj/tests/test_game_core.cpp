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

#include <random>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "netcreate/netcreate.hpp"
#include "oracles.hpp"

namespace netcreate {
namespace {

TEST(RationalTest, ParsesExactForms) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-1/3"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("4/2").to_string(), "2");
}

TEST(RationalTest, RejectsFloatsAndJunk) {
  for (const char* bad : {"1.5", "1e3", "", "/2", "3/", "3/0", " 3", "3/2/1", "a", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), InvalidInput) << bad;
  }
}

TEST(RationalTest, FloorAndFraction) {
  EXPECT_EQ(Rational(5, 2).floor(), 2);
  EXPECT_EQ(Rational(-5, 2).floor(), -3);
  EXPECT_EQ(Rational(3).floor(), 3);
  EXPECT_EQ(Rational(9, 4).fractional_part(), Rational(1, 4));
  EXPECT_EQ(Rational(3).fractional_part(), Rational(0));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(5, 2).is_integer());
}

TEST(RationalTest, ArithmeticAndOrder) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), PreconditionError);
}

TEST(CostTest, InfiniteSaturatesAndOrdersLast) {
  Cost inf = Cost::infinite();
  Cost big(Rational(1000000));
  EXPECT_LT(big, inf);
  EXPECT_TRUE((inf + big).is_infinite());
  EXPECT_EQ(inf, Cost::infinite());
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_THROW(inf.value(), PreconditionError);
}

TEST(ProfileTest, RejectsBadPurchases) {
  EXPECT_THROW(StrategyProfile(3, {{0}, {}, {}}), InvalidInput);
  EXPECT_THROW(StrategyProfile(3, {{3}, {}, {}}), InvalidInput);
  EXPECT_THROW(StrategyProfile(3, {{-1}, {}, {}}), InvalidInput);
  EXPECT_THROW(StrategyProfile(3, {{1, 1}, {}, {}}), InvalidInput);
  EXPECT_THROW(StrategyProfile(2, {{1}, {}, {}}), InvalidInput);
  EXPECT_NO_THROW(StrategyProfile(3, {{2, 1}, {}, {}}));
}

TEST(BuildGraphTest, EmptyProfileHasNoEdges) {
  auto g = build_graph(StrategyProfile(3));
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraphTest, DuplicatePurchaseCollapses) {
  StrategyProfile p(2, {{1}, {0}});
  EXPECT_TRUE(p.has_double_purchase());
  auto g = build_graph(p);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(BuildGraphTest, StarIsK13) {
  auto g = build_graph(StrategyProfile(4, {{1, 2, 3}, {}, {}, {}}));
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 3);
  for (Vertex v = 1; v < 4; ++v) EXPECT_EQ(g.degree(v), 1);
}

TEST(DistanceTest, SmallCases) {
  auto k3 = all_pairs_distances(build_graph(make_clique(3)));
  for (Vertex v = 0; v < 3; ++v) {
    for (Vertex w = 0; w < 3; ++w) EXPECT_EQ(k3.at(v, w), v == w ? 0u : 1u);
  }
  auto path = all_pairs_distances(build_graph(StrategyProfile(3, {{1}, {2}, {}})));
  EXPECT_EQ(path.at(0, 2), 2u);
  auto two = all_pairs_distances(build_graph(StrategyProfile(2)));
  EXPECT_EQ(two.at(0, 1), kUnreachable);
}

TEST(DistanceTest, MatchesFloydWarshallSymmetricTriangle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto p = make_random_profile(9, 0.3, seed);
    auto d = all_pairs_distances(build_graph(p), 2);
    auto ref = oracle::distances(oracle::of(p));
    for (Vertex a = 0; a < 9; ++a) {
      for (Vertex b = 0; b < 9; ++b) {
        long expect = ref[a][b] >= oracle::kInf ? -1 : ref[a][b];
        long got = d.at(a, b) == kUnreachable ? -1 : static_cast<long>(d.at(a, b));
        ASSERT_EQ(got, expect);
        ASSERT_EQ(d.at(a, b), d.at(b, a));
        for (Vertex c = 0; c < 9; ++c) {
          if (d.at(a, c) == kUnreachable || d.at(c, b) == kUnreachable) continue;
          ASSERT_LE(d.at(a, b), d.at(a, c) + d.at(c, b));
        }
      }
    }
  }
}

TEST(VertexCostTest, Examples) {
  EXPECT_EQ(vertex_cost(GameParams(1, 2), StrategyProfile(1), 0), Cost(Rational(0)));
  GameParams g(3, Rational(5, 2));
  auto star = make_star(3);
  EXPECT_EQ(vertex_cost(g, star, 0), Cost(Rational(7)));
  EXPECT_EQ(vertex_cost(g, star, 1), Cost(Rational(3)));
  EXPECT_EQ(vertex_cost(g, star, 2), Cost(Rational(3)));
  GameParams g2(2, 1);
  EXPECT_TRUE(vertex_cost(g2, StrategyProfile(2), 0).is_infinite());
  EXPECT_TRUE(vertex_cost(g2, StrategyProfile(2), 1).is_infinite());
  EXPECT_THROW(vertex_cost(g2, StrategyProfile(2), 2), InvalidInput);
}

TEST(SocialCostTest, Examples) {
  auto r = social_cost(GameParams(3, Rational(5, 2)), make_star(3));
  EXPECT_EQ(r.social_cost, Cost(Rational(13)));
  EXPECT_TRUE(r.connected);
  for (int n = 1; n <= 8; ++n) {
    Rational a(3, 4);
    auto c = social_cost(GameParams(n, a), make_clique(n));
    EXPECT_EQ(c.social_cost, Cost(a * Rational(n * (n - 1) / 2) + Rational(n * (n - 1))));
  }
  auto disc = social_cost(GameParams(4, 1), StrategyProfile(4, {{1}, {}, {3}, {}}));
  EXPECT_FALSE(disc.connected);
  EXPECT_TRUE(disc.social_cost.is_infinite());
}

TEST(SocialCostTest, CountsDuplicatePurchasesTwice) {
  auto r = social_cost(GameParams(2, 1), StrategyProfile(2, {{1}, {0}}));
  EXPECT_EQ(r.social_cost, Cost(Rational(4)));
}

TEST(SocialCostTest, MatchesOracleAndVertexSums) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    auto p = make_random_profile(n, 0.45, seed);
    Rational a(static_cast<int>(seed % 7) + 1, 2);
    GameParams g(n, a);
    auto r = social_cost(g, p, 3);
    auto ref = oracle::social_cost(oracle::of(p), a);
    ASSERT_EQ(r.connected, ref.has_value());
    if (!ref) {
      ASSERT_TRUE(r.social_cost.is_infinite());
      continue;
    }
    ASSERT_EQ(r.social_cost.value(), *ref);
    Cost sum;
    for (Vertex v = 0; v < n; ++v) sum = sum + vertex_cost(g, p, v);
    ASSERT_EQ(sum, r.social_cost);
  }
}

TEST(SocialCostTest, OrientationInvariance) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto p = make_random_profile(8, 0.5, seed);
    auto s = oracle::of(p);
    // Reverse one random purchase.
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < 8; ++v) {
      for (int w : s[v]) arcs.emplace_back(v, w);
    }
    if (arcs.empty()) continue;
    auto [v, w] = arcs[rng() % arcs.size()];
    std::erase(s[v], w);
    s[w].push_back(v);
    StrategyProfile q(8, s);
    auto d1 = all_pairs_distances(build_graph(p));
    auto d2 = all_pairs_distances(build_graph(q));
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) ASSERT_EQ(d1.at(a, b), d2.at(a, b));
    }
    GameParams g(8, Rational(3, 2));
    auto c1 = social_cost(g, p);
    auto c2 = social_cost(g, q);
    ASSERT_EQ(c1.social_cost, c2.social_cost);
    for (int x = 0; x < 8; ++x) ASSERT_EQ(c1.vertices[x].distance_sum, c2.vertices[x].distance_sum);
  }
}

TEST(SocialOptimumTest, Examples) {
  auto o = social_optimum_cost(GameParams(6, 2));
  EXPECT_EQ(o.cost, Rational(60));
  EXPECT_EQ(o.witness, make_star(6));
  auto c = social_optimum_cost(GameParams(4, Rational(1, 2)));
  EXPECT_EQ(c.cost, Rational(15));
  EXPECT_EQ(c.witness, make_clique(4));
  EXPECT_EQ(social_optimum_cost(GameParams(1, 5)).cost, Rational(0));
  EXPECT_EQ(social_optimum_cost(GameParams(2, Rational(1, 2))).cost, Rational(5, 2));
  EXPECT_EQ(social_optimum_cost(GameParams(2, 3)).cost, Rational(5));
}

TEST(SocialOptimumTest, WitnessRealizesCostAndStarFloor) {
  for (int n = 1; n <= 12; ++n) {
    for (auto a : {Rational(1, 2), Rational(1), Rational(19, 10), Rational(2), Rational(3),
                   Rational(7, 2)}) {
      GameParams g(n, a);
      auto o = social_optimum_cost(g);
      EXPECT_EQ(social_cost(g, o.witness).social_cost, Cost(o.cost));
      if (a >= Rational(2)) EXPECT_GE(o.cost, Rational(2 * n * (n - 1)));
    }
  }
}

TEST(GameParamsTest, Validation) {
  EXPECT_THROW(GameParams(0, 1), InvalidInput);
  EXPECT_THROW(GameParams(3, Rational(-1, 2)), InvalidInput);
  EXPECT_NO_THROW(GameParams(3, 0));
  EXPECT_THROW(social_cost(GameParams(3, 1), make_star(4)), InvalidInput);
}

}  // namespace
}  // namespace netcreate
