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

#include <algorithm>
#include <numeric>
#include <random>

#include "cagegen/canon.hpp"
#include "cagegen/covers.hpp"
#include "cagegen/fixtures.hpp"
#include "oracles.hpp"

namespace cagegen {
namespace {

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

// Every permutation, checked edge by edge. Small orders only.
struct BruteAut {
  std::uint64_t order = 0;
  int orbits = 0;
};

BruteAut brute_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  BruteAut out;
  do {
    if (!is_automorphism(g, perm)) continue;
    ++out.order;
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(find(v))] = find(perm[static_cast<std::size_t>(v)]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int v = 0; v < n; ++v) out.orbits += find(v) == v;
  return out;
}

TEST(CanonTest, ClassCountsMatchUnlabelledGraphCounts) {
  // Number of graphs on n unlabelled vertices, n = 0..8.
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(oracle::all_graphs(n).size(), expected[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(CanonTest, AutomorphismsMatchPermutationOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const AutomorphismInfo info = automorphisms(g);
      const BruteAut brute = brute_automorphisms(g);
      ASSERT_EQ(info.group_order, brute.order) << encode_graph6(g);
      ASSERT_EQ(info.orbit_count(), brute.orbits) << encode_graph6(g);
      for (const auto& gen : info.generators) ASSERT_TRUE(is_automorphism(g, gen));
    }
  }
}

TEST(CanonTest, KnownGroupOrders) {
  EXPECT_EQ(automorphisms(fixtures::petersen()).group_order, 120u);
  EXPECT_EQ(automorphisms(fixtures::petersen()).orbit_count(), 1);
  EXPECT_EQ(automorphisms(fixtures::hypercube(3)).group_order, 48u);
  EXPECT_EQ(automorphisms(fixtures::heawood()).group_order, 336u);
  EXPECT_EQ(automorphisms(fixtures::cycle(12)).group_order, 24u);
  Graph k6_plus_two(8);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) k6_plus_two.add_edge(u, v);
  }
  const AutomorphismInfo info = automorphisms(k6_plus_two);
  EXPECT_EQ(info.group_order, 1440u);
  EXPECT_EQ(info.orbit_count(), 2);
  EXPECT_EQ(automorphisms(Graph(5)).group_order, 120u);
}

TEST(CanonTest, FormsAreInvariantUnderRelabelling) {
  std::mt19937_64 rng(2024);
  const std::vector<Graph> graphs{fixtures::petersen(), fixtures::heawood(), fixtures::cage_378(),
                                  fixtures::campbell(), oracle::random_graph(30, 0.2, rng)};
  for (const Graph& g : graphs) {
    const CanonicalForm base = canonical_form(g);
    const Graph canon = canonical_graph(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph h = g.relabeled(oracle::random_permutation(g.order(), rng));
      ASSERT_EQ(canonical_form(h), base);
      ASSERT_EQ(canonical_graph(h), canon);
    }
  }
}

TEST(CanonTest, CanonicalLabelingProducesCanonicalGraph) {
  const Graph g = fixtures::cage_3910();
  EXPECT_EQ(g.relabeled(canonical_labeling(g)), canonical_graph(g));
}

TEST(CanonTest, DistinguishesNonIsomorphicRegularGraphs) {
  EXPECT_FALSE(is_isomorphic(fixtures::tricorn(), fixtures::second_334_cage()));
  EXPECT_FALSE(is_isomorphic(fixtures::petersen_line_graph(), fixtures::other_434_cage()));
  EXPECT_TRUE(is_isomorphic(fixtures::hypercube(3), fixtures::generalized_petersen(4, 1)));
  EXPECT_FALSE(is_isomorphic(fixtures::cycle(6), fixtures::cycle(5)));
}

// Brute force over all 8! bijections for cover(K4) against the 3-cube.
TEST(CanonTest, DoubleCoverOfK4IsTheCubeByExhaustiveSearch) {
  const Graph cover = canonical_double_cover(fixtures::complete(4));
  const Graph cube = fixtures::hypercube(3);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  int matches = 0;
  do {
    if (cover.relabeled(perm) == cube) ++matches;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(matches, 48);
  EXPECT_TRUE(is_isomorphic(cover, cube));
}

TEST(CanonTest, IsolatedVerticesRecordedInForm) {
  Graph a(5);
  a.add_edge(0, 1);
  Graph b(6);
  b.add_edge(0, 1);
  EXPECT_NE(canonical_form(a), canonical_form(b));
}

TEST(CanonTest, DedupStoreEnforcesCapacity) {
  DedupStore store(2);
  EXPECT_TRUE(store.insert_if_new(canonical_form(fixtures::cycle(3))));
  EXPECT_FALSE(store.insert_if_new(canonical_form(fixtures::cycle(3))));
  EXPECT_TRUE(store.insert_if_new(canonical_form(fixtures::cycle(4))));
  EXPECT_THROW(store.insert_if_new(canonical_form(fixtures::cycle(5))), DedupCapacityError);
  EXPECT_EQ(store.size(), 2u);
}

TEST(CanonTest, DedupStoreRankOrdersClaims) {
  DedupStore store;
  const CanonicalForm f = canonical_form(fixtures::petersen());
  EXPECT_TRUE(store.insert_if_new(f, 5));
  EXPECT_TRUE(store.insert_if_new(f, 3));   // lower rank takes over
  EXPECT_FALSE(store.insert_if_new(f, 3));
  EXPECT_FALSE(store.insert_if_new(f, 4));
}

}  // namespace
}  // namespace cagegen
