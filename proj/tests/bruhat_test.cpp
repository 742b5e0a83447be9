// Copyright 2026 The bruhatkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bruhatkit/bruhat.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_oracles.hpp"

namespace bruhatkit {
namespace {

using testing::perm;

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
  return {v.begin(), v.end()};
}

TEST(BruhatLeqTest, Examples) {
  EXPECT_TRUE(bruhat_leq(perm({1, 4, 3, 2}), perm({3, 4, 1, 2})));
  EXPECT_TRUE(bruhat_leq(perm({2, 4, 1, 3}), perm({2, 4, 1, 3})));
  EXPECT_FALSE(bruhat_leq(perm({2, 1, 4, 3}), perm({1, 2, 3, 4})));
  EXPECT_THROW(bruhat_leq(perm({2, 1}), perm({1, 2, 3})), PermutationError);
}

TEST(BruhatLeqOracleTest, Examples) {
  EXPECT_TRUE(bruhat_leq_oracle(perm({1, 2, 3}), perm({3, 2, 1})));
  EXPECT_FALSE(bruhat_leq_oracle(perm({2, 1, 3}), perm({1, 3, 2})));
  EXPECT_FALSE(bruhat_leq_oracle(perm({1, 3, 2}), perm({2, 1, 3})));
  EXPECT_TRUE(bruhat_leq_oracle(perm({1, 4, 3, 2}), perm({3, 4, 1, 2})));
  EXPECT_THROW(bruhat_leq_oracle(perm({1}), perm({1, 2})), PermutationError);
}

TEST(BruhatLeqTest, AgreesWithOracleExhaustivelyUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto group = all_permutations(n);
    for (const auto& u : group)
      for (const auto& v : group) ASSERT_EQ(bruhat_leq(u, v), bruhat_leq_oracle(u, v));
  }
}

TEST(BruhatLeqTest, ComparableImpliesLengthOrder) {
  const auto group = all_permutations(5);
  for (const auto& u : group)
    for (const auto& v : group) {
      if (!bruhat_leq(u, v)) continue;
      ASSERT_LE(coxeter_length(u), coxeter_length(v));
      ASSERT_EQ(coxeter_length(u) == coxeter_length(v), u == v);
    }
}

TEST(LowerIntervalTest, Examples) {
  const std::set<Permutation> square{perm({1, 2, 3, 4}), perm({2, 1, 3, 4}),
                                     perm({1, 2, 4, 3}), perm({2, 1, 4, 3})};
  EXPECT_EQ(testing::brute_interval(perm({2, 1, 4, 3})), square);
  EXPECT_EQ(as_set(lower_interval(perm({2, 1, 4, 3}))), square);

  EXPECT_EQ(lower_interval(Permutation::identity(5)),
            std::vector<Permutation>{Permutation::identity(5)});
  EXPECT_EQ(lower_interval(perm({3, 2, 1})).size(), 6u);
}

TEST(LowerIntervalTest, MatchesFilterOfWholeGroup) {
  for (int n = 1; n <= 5; ++n) {
    const auto group = all_permutations(n);
    for (const auto& sigma : group) {
      const auto interval = lower_interval(sigma);
      std::size_t filtered = 0;
      for (const auto& x : group) filtered += bruhat_leq(x, sigma) ? 1 : 0;
      ASSERT_EQ(interval.size(), filtered);
      ASSERT_EQ(interval.front(), Permutation::identity(n));
      ASSERT_EQ(interval.back(), sigma);
      for (const auto& x : interval) ASSERT_TRUE(bruhat_leq(x, sigma));
    }
  }
  for (const auto& sigma : all_permutations(4))
    ASSERT_EQ(as_set(lower_interval(sigma)), testing::brute_interval(sigma));
}

TEST(LowerIntervalTest, VertexCap) {
  EXPECT_THROW(lower_interval(Permutation::reversal(6), 100), IntervalTooLarge);
  EXPECT_EQ(lower_interval(Permutation::reversal(4), 24).size(), 24u);
  EXPECT_THROW(bruhat_graph(Permutation::reversal(4), 23), IntervalTooLarge);
}

TEST(BruhatGraphTest, Examples) {
  const DirectedGraph b321 = bruhat_graph(perm({3, 2, 1}));
  EXPECT_EQ(b321.vertex_count(), 6);
  EXPECT_EQ(b321.edge_count(), 9);
  // K_{3,3}: every even-length vertex meets every odd-length vertex.
  const UndirectedGraph k33 = underlying_undirected(b321);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) {
      const bool parity_differs =
          (b321.vertices()[u].length - b321.vertices()[v].length) % 2 != 0;
      EXPECT_EQ(u != v && k33.has_edge(u, v), parity_differs);
    }

  const DirectedGraph point = bruhat_graph(Permutation::identity(3));
  EXPECT_EQ(point.vertex_count(), 1);
  EXPECT_EQ(point.edge_count(), 0);

  const Permutation sq = perm({2, 1, 4, 3});
  EXPECT_EQ(testing::brute_edges(sq).size(), 4u);
  const DirectedGraph square = bruhat_graph(sq);
  EXPECT_EQ(square.vertex_count(), 4);
  EXPECT_EQ(square.edge_count(), 4);
  const UndirectedGraph cycle = underlying_undirected(square);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(cycle.degree(v), 2);
}

TEST(BruhatGraphTest, NonCoverEdgesArePresent) {
  // 123 -> 321 jumps three levels.
  const DirectedGraph g = bruhat_graph(perm({3, 2, 1}));
  const auto id = g.find(perm({1, 2, 3}));
  const auto top = g.find(perm({3, 2, 1}));
  ASSERT_TRUE(id && top);
  const auto& out = g.out_neighbors(*id);
  EXPECT_NE(std::find(out.begin(), out.end(), *top), out.end());
}

TEST(BruhatGraphTest, EdgeSetMatchesOracleOnS4) {
  for (const auto& sigma : all_permutations(4)) {
    const DirectedGraph g = bruhat_graph(sigma);
    std::set<std::pair<Permutation, Permutation>> edges;
    for (const auto& e : g.edges())
      edges.emplace(g.vertices()[e.source].label, g.vertices()[e.target].label);
    ASSERT_EQ(edges.size(), g.edges().size());  // no parallel edges
    ASSERT_EQ(edges, testing::brute_edges(sigma)) << sigma.to_string();
  }
}

TEST(BruhatGraphTest, StructuralInvariantsUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& sigma : all_permutations(n)) {
      const DirectedGraph g = bruhat_graph(sigma);
      ASSERT_EQ(g.sources(), std::vector<int>{0});
      ASSERT_EQ(g.sinks(), std::vector<int>{g.vertex_count() - 1});
      ASSERT_EQ(g.vertices().front().label, Permutation::identity(n));
      ASSERT_EQ(g.vertices().back().label, sigma);
      for (int v = 1; v < g.vertex_count(); ++v) {
        const auto& a = g.vertices()[v - 1];
        const auto& b = g.vertices()[v];
        ASSERT_TRUE(a.length < b.length || (a.length == b.length && a.label < b.label));
      }
      for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        const auto& from = g.vertices()[e.source];
        const auto& to = g.vertices()[e.target];
        ASSERT_NE(e.source, e.target);
        ASSERT_EQ(apply_transposition(e.transposition, from.label), to.label);
        ASSERT_LT(from.length, to.length);
        ASSERT_EQ(from.length, coxeter_length(from.label));
        if (i > 0) {
          const auto& prev = g.edges()[i - 1];
          ASSERT_LT(std::pair(prev.source, prev.target), std::pair(e.source, e.target));
        }
      }
    }
}

TEST(BruhatGraphTest, PathLengthsAreLengthAndAbsoluteLength) {
  for (const auto& sigma : all_permutations(4)) {
    const DirectedGraph g = bruhat_graph(sigma);
    EXPECT_EQ(longest_source_sink_path(g), coxeter_length(sigma)) << sigma.to_string();
    EXPECT_EQ(shortest_source_sink_path(g), absolute_length(sigma)) << sigma.to_string();
  }
}

TEST(BruhatGraphTest, PatternContainmentIsMonotone) {
  std::vector<std::pair<Permutation, DirectedGraph>> graphs;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) graphs.emplace_back(p, bruhat_graph(p));
  for (const auto& [pi, gp] : graphs)
    for (const auto& [tau, gt] : graphs) {
      if (pi.size() > tau.size() || !contains_pattern(pi, tau)) continue;
      ASSERT_LE(gp.vertex_count(), gt.vertex_count());
      ASSERT_LE(gp.edge_count(), gt.edge_count());
    }
}

TEST(UnderlyingUndirectedTest, Examples) {
  EXPECT_EQ(underlying_undirected(bruhat_graph(perm({1}))).vertex_count(), 1);
  const UndirectedGraph g = underlying_undirected(bruhat_graph(perm({3, 2, 1})));
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.edge_count(), 9);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(IsHypercubeTest, Examples) {
  EXPECT_TRUE(is_hypercube(bruhat_graph(perm({2, 1, 4, 3})), 2));
  EXPECT_TRUE(is_hypercube(bruhat_graph(Permutation::identity(4)), 0));
  EXPECT_TRUE(is_hypercube(bruhat_graph(perm({2, 1})), 1));
  EXPECT_TRUE(is_hypercube(bruhat_graph(perm({2, 1, 4, 3, 6, 5})), 3));
  EXPECT_FALSE(is_hypercube(bruhat_graph(perm({3, 2, 1})), 3));
  EXPECT_FALSE(is_hypercube(bruhat_graph(perm({2, 1, 4, 3})), 1));
  // 2341 avoids 321 and 3412, so its interval is Boolean.
  const DirectedGraph b2341 = bruhat_graph(perm({2, 3, 4, 1}));
  EXPECT_EQ(b2341.vertex_count(), 8);
  EXPECT_TRUE(is_hypercube(b2341, 3));
  // 14 vertices, not a cube.
  const DirectedGraph b3412 = bruhat_graph(perm({3, 4, 1, 2}));
  EXPECT_FALSE(is_hypercube(b3412, 4));
}

TEST(IsHypercubeTest, BooleanIntervalsUpToFive) {
  const std::vector<Permutation> avoid{perm({3, 2, 1}), perm({3, 4, 1, 2})};
  int cubes = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& sigma : all_permutations(n)) {
      const bool boolean = avoids_all(sigma, avoid);
      const DirectedGraph g = bruhat_graph(sigma);
      if (boolean) {
        ASSERT_TRUE(is_hypercube(g, coxeter_length(sigma))) << sigma.to_string();
        ++cubes;
      } else {
        ASSERT_FALSE(is_hypercube(g, coxeter_length(sigma))) << sigma.to_string();
      }
    }
  EXPECT_GT(cubes, 0);
}

TEST(InducedPatternSubgraphTest, Examples) {
  // 321 inside 1432 at positions 2..4 is a copy of K_{3,3}.
  const Embedding e234{{2, 3, 4}};
  const DirectedGraph k33 = induced_pattern_subgraph(perm({3, 2, 1}), perm({1, 4, 3, 2}), e234);
  EXPECT_EQ(k33.vertex_count(), 6);
  EXPECT_EQ(k33.edge_count(), 9);
  EXPECT_TRUE(testing::induced_subgraph_matches_pattern_graph(perm({3, 2, 1}),
                                                              perm({1, 4, 3, 2}), e234));

  const Permutation p = perm({2, 4, 1, 3});
  const DirectedGraph whole = induced_pattern_subgraph(p, p, Embedding{{1, 2, 3, 4}});
  const DirectedGraph direct = bruhat_graph(p);
  EXPECT_EQ(whole.vertex_count(), direct.vertex_count());
  EXPECT_EQ(whole.edges(), direct.edges());

  // 21 in 321 at (1,2): vertices x <= 321 with x(3) = 1, i.e. 231 -> 321.
  const DirectedGraph edge =
      induced_pattern_subgraph(perm({2, 1}), perm({3, 2, 1}), Embedding{{1, 2}});
  ASSERT_EQ(edge.vertex_count(), 2);
  ASSERT_EQ(edge.edge_count(), 1);
  EXPECT_EQ(edge.vertices()[0].label, perm({2, 3, 1}));
  EXPECT_EQ(edge.vertices()[1].label, perm({3, 2, 1}));
  EXPECT_EQ(edge.edges()[0].transposition, Transposition(2, 3));
}

TEST(InducedPatternSubgraphTest, RejectsInvalidEmbeddings) {
  const Permutation tau = perm({1, 4, 3, 2});
  EXPECT_THROW(induced_pattern_subgraph(perm({3, 2, 1}), tau, Embedding{{1, 2, 3}}),
               PermutationError);  // not an occurrence
  EXPECT_THROW(induced_pattern_subgraph(perm({3, 2, 1}), tau, Embedding{{2, 3}}),
               PermutationError);  // wrong length
  EXPECT_THROW(induced_pattern_subgraph(perm({3, 2, 1}), tau, Embedding{{3, 2, 4}}),
               PermutationError);  // not increasing
  EXPECT_THROW(induced_pattern_subgraph(perm({2, 1}), tau, Embedding{{4, 5}}),
               PermutationError);  // out of range
}

TEST(InducedPatternSubgraphTest, IsomorphicToPatternGraphUpToFour) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& tau : all_permutations(n))
      for (int k = 1; k <= n; ++k)
        for (const auto& pi : all_permutations(k))
          for (const auto& e : embeddings(pi, tau))
            ASSERT_TRUE(testing::induced_subgraph_matches_pattern_graph(pi, tau, e))
                << pi.to_string() << " in " << tau.to_string();
}

}  // namespace
}  // namespace bruhatkit
