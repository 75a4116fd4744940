// Copyright 2026 The cagegen Authors
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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cagegen/fixtures.hpp"
#include "cagegen/graph.hpp"
#include "oracles.hpp"

namespace cagegen {
namespace {

TEST(GraphTest, AddEdgeIsIdempotentAndSymmetric) {
  Graph g(4);
  EXPECT_TRUE(g.add_edge(0, 3));
  EXPECT_FALSE(g.add_edge(3, 0));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_TRUE(g.remove_edge(0, 3));
  EXPECT_FALSE(g.remove_edge(0, 3));
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GraphTest, RejectsLoopsAndBadVertices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  EXPECT_THROW(Graph(kMaxOrder + 1), std::invalid_argument);
}

TEST(GraphTest, RelabelMovesVertexToPermImage) {
  const Graph p = fixtures::path(3);  // 0-1-2
  const std::vector<int> perm{2, 0, 1};
  const Graph q = p.relabeled(perm);
  EXPECT_TRUE(q.has_edge(2, 0));
  EXPECT_TRUE(q.has_edge(0, 1));
  EXPECT_FALSE(q.has_edge(2, 1));
  EXPECT_THROW(p.relabeled(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(GraphTest, WithoutVerticesCompactsLabels) {
  const Graph c = fixtures::cycle(5);
  const std::vector<int> removed{0};
  const Graph p = c.without_vertices(removed);
  EXPECT_EQ(p.order(), 4);
  EXPECT_EQ(p.edge_count(), 3u);
  EXPECT_FALSE(girth(p).has_value());
}

TEST(GraphTest, DistancesAndComponents) {
  Graph g = fixtures::path(5);
  EXPECT_EQ(distance(g, 0, 4), 4);
  EXPECT_EQ(bfs_distances(g, 2), (std::vector<int>{2, 1, 0, 1, 2}));
  g.remove_edge(1, 2);
  EXPECT_FALSE(distance(g, 0, 4).has_value());
  EXPECT_EQ(component_count(g), 2);
  EXPECT_EQ(component_count(Graph(0)), 0);
}

TEST(GraphTest, KnownGirths) {
  EXPECT_EQ(girth(fixtures::petersen()), 5);
  EXPECT_EQ(girth(fixtures::heawood()), 6);
  EXPECT_EQ(girth(fixtures::hypercube(4)), 4);
  EXPECT_EQ(girth(fixtures::complete(4)), 3);
  EXPECT_EQ(girth(fixtures::cycle(17)), 17);
  EXPECT_FALSE(girth(fixtures::path(6)).has_value());
  EXPECT_EQ(odd_girth(fixtures::petersen()), 5);
  EXPECT_FALSE(odd_girth(fixtures::heawood()).has_value());
  EXPECT_TRUE(is_bipartite(fixtures::hypercube(3)));
  EXPECT_FALSE(is_bipartite(fixtures::petersen()));
}

// Exhaustive over every graph on at most 8 vertices up to isomorphism.
TEST(GraphTest, CycleQueriesMatchPathEnumerationOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const std::set<int> lengths = oracle::cycle_lengths(g);
      const std::optional<int> want =
          lengths.empty() ? std::nullopt : std::optional<int>(*lengths.begin());
      ASSERT_EQ(girth(g), want);
      ASSERT_EQ(girth_serial(g), want);
      std::optional<int> want_odd;
      for (int len : lengths) {
        if (len % 2 == 1) {
          want_odd = len;
          break;
        }
      }
      ASSERT_EQ(odd_girth(g), want_odd);
      ASSERT_EQ(is_bipartite(g), !want_odd.has_value());
      for (int len = 3; len <= n; ++len) {
        ASSERT_EQ(has_cycle_of_length(g, len), lengths.count(len) == 1) << encode_graph6(g) << " " << len;
      }
      const CycleQueryResult sc = shortest_cycle(g);
      ASSERT_EQ(sc.length, want);
      if (sc.length) {
        ASSERT_EQ(static_cast<int>(sc.witness.size()), *sc.length);
        std::set<int> distinct(sc.witness.begin(), sc.witness.end());
        ASSERT_EQ(distinct.size(), sc.witness.size());
        for (std::size_t i = 0; i < sc.witness.size(); ++i) {
          ASSERT_TRUE(g.has_edge(sc.witness[i], sc.witness[(i + 1) % sc.witness.size()]));
        }
      }
    }
  }
}

// Counts cycles of a given length by testing every edge subset of that size
// for being one connected 2-regular subgraph.
int count_cycles_by_edge_subsets(const Graph& g, int length) {
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> pick(static_cast<std::size_t>(length));
  int count = 0;
  std::function<void(int, int)> choose = [&](int from, int depth) {
    if (depth == length) {
      std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
      Graph sub(g.order());
      for (int i : pick) {
        const auto& [u, v] = edges[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        sub.add_edge(u, v);
      }
      int touched = 0;
      for (int d : deg) {
        if (d != 0 && d != 2) return;
        touched += d != 0;
      }
      if (component_count(sub) - (g.order() - touched) == 1) ++count;
      return;
    }
    for (int i = from; i < m; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return count;
}

TEST(GraphTest, EnumerateCyclesMatchesEdgeSubsetOracle) {
  const Graph petersen = fixtures::petersen();
  for (int len = 3; len <= 9; ++len) {
    int seen = 0;
    enumerate_cycles(petersen, len, [&](std::span<const int> c) {
      EXPECT_EQ(static_cast<int>(c.size()), len);
      ++seen;
      return true;
    });
    EXPECT_EQ(seen, count_cycles_by_edge_subsets(petersen, len)) << "length " << len;
  }
  // Frozen from the subset oracle above.
  EXPECT_EQ(count_cycles_by_edge_subsets(petersen, 6), 10);
  EXPECT_EQ(count_cycles_by_edge_subsets(petersen, 5), 12);
}

TEST(GraphTest, EnumerateCyclesStopsWhenVisitorDeclines) {
  int seen = 0;
  enumerate_cycles(fixtures::complete(6), 3, [&](std::span<const int>) {
    ++seen;
    return false;
  });
  EXPECT_EQ(seen, 1);
}

TEST(GraphTest, ParallelGirthMatchesSerialOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(20 + trial, 3.0 / (20 + trial), rng);
    ASSERT_EQ(girth(g), girth_serial(g));
  }
}

}  // namespace
}  // namespace cagegen
