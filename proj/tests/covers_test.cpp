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
#include <random>
#include <set>

#include "cagegen/canon.hpp"
#include "cagegen/covers.hpp"
#include "cagegen/fixtures.hpp"
#include "cagegen/generator.hpp"
#include "oracles.hpp"

namespace cagegen {
namespace {

TEST(DoubleCoverTest, CycleCovers) {
  EXPECT_TRUE(is_isomorphic(canonical_double_cover(fixtures::cycle(5)), fixtures::cycle(10)));
  const Graph c6 = canonical_double_cover(fixtures::cycle(6));
  EXPECT_EQ(component_count(c6), 2);
  EXPECT_EQ(girth(c6), 6);
}

TEST(DoubleCoverTest, CoverOfPetersenIsDesargues) {
  const Graph d = canonical_double_cover(fixtures::petersen());
  EXPECT_TRUE(is_isomorphic(d, fixtures::generalized_petersen(10, 3)));
  EXPECT_EQ(automorphisms(d).group_order, 240u);
}

// On every graph with at most 8 vertices: the cover's girth is the shorter of
// the shortest even cycle and twice the odd girth, and the cover-based test
// for a (g+1)-cycle agrees with direct enumeration.
TEST(DoubleCoverTest, GirthLawAgainstCycleEnumeration) {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const std::set<int> lengths = oracle::cycle_lengths(g);
      std::optional<int> want;
      for (int len : lengths) {
        const int lifted = len % 2 == 0 ? len : 2 * len;
        if (!want || lifted < *want) want = lifted;
      }
      const Graph cover = canonical_double_cover(g);
      ASSERT_EQ(cover.order(), 2 * n);
      ASSERT_EQ(cover.edge_count(), 2 * g.edge_count());
      ASSERT_TRUE(is_bipartite(cover));
      ASSERT_EQ(girth(cover), want) << encode_graph6(g);
      if (lengths.empty()) continue;
      const int gg = *lengths.begin();
      ASSERT_EQ(cover_excludes_next_cycle(g, gg), lengths.count(gg + 1) == 0) << encode_graph6(g);
    }
  }
}

TEST(DoubleCoverTest, CoverIsTheZ2LiftWithAllOnes) {
  for (const Graph& g : {fixtures::petersen(), fixtures::complete(4), fixtures::gp92(), fixtures::tricorn()}) {
    VoltageAssignment a(DartGraph::from_graph(g), make_cyclic_group(2));
    for (int d = 0; d < a.base().dart_count(); d += 2) a.set(d, 1);
    EXPECT_TRUE(is_isomorphic(voltage_lift(a), canonical_double_cover(g)));
  }
}

TEST(DartGraphTest, K13WithLoops) {
  const DartGraph b = make_k13_loop();
  EXPECT_EQ(b.vertex_count(), 4);
  EXPECT_EQ(b.dart_count(), 12);
  EXPECT_TRUE(b.connected());
  for (int d = 0; d < 6; ++d) EXPECT_FALSE(b.is_loop(d));
  for (int d : kK13LoopDart) {
    EXPECT_TRUE(b.is_loop(d));
    EXPECT_EQ(b.inverse(d), d + 1);
  }
  for (int v = 0; v < 4; ++v) EXPECT_EQ(b.darts_from(v).size(), 3u);
}

TEST(VoltageTest, SettingADartSetsItsInverse) {
  VoltageAssignment a(make_k13_loop(), make_cyclic_group(9));
  a.set(kK13LoopDart[0], 2);
  EXPECT_EQ(a.voltage(kK13LoopDart[0] + 1), 7);
  a.set(kK13LoopDart[1] + 1, 4);
  EXPECT_EQ(a.voltage(kK13LoopDart[1]), 5);
  EXPECT_THROW(a.set(12, 1), std::out_of_range);
  EXPECT_THROW(a.set(0, 9), std::out_of_range);
}

TEST(VoltageTest, LiftVertexRule) {
  // Dart u -> v with voltage a joins (u, h) and (v, h a), vertex index v*|G| + h.
  const Group z5 = make_cyclic_group(5);
  DartGraph b(2);
  const int d = b.add_edge(0, 1);
  VoltageAssignment a(b, z5);
  a.set(d, 2);
  const Graph lift = voltage_lift(a);
  ASSERT_EQ(lift.order(), 10);
  for (int h = 0; h < 5; ++h) EXPECT_TRUE(lift.has_edge(0 * 5 + h, 1 * 5 + (h + 2) % 5));
  EXPECT_EQ(lift.edge_count(), 5u);
}

TEST(VoltageTest, LiftErrors) {
  EXPECT_THROW(voltage_lift(k13_loop_assignment(make_cyclic_group(5), {0, 1, 2})), LiftError);
  EXPECT_THROW(voltage_lift(VoltageAssignment(make_k13_loop(), make_cyclic_group(4))), LiftError);
  // Two parallel base edges with equal voltage collide in the lift.
  DartGraph b(2);
  b.add_edge(0, 1);
  b.add_edge(0, 1);
  EXPECT_THROW(voltage_lift(VoltageAssignment(b, make_cyclic_group(3))), LiftError);
}

TEST(VoltageTest, InvolutionLoopsDoNotGiveCubicLifts) {
  const Graph lift = voltage_lift(k13_loop_assignment(make_cyclic_group(2), {1, 1, 1}));
  EXPECT_EQ(lift.order(), 8);
  EXPECT_FALSE(lift.is_regular(3));
  EXPECT_EQ(girth(lift), 6);
}

TEST(VoltageTest, NetVoltageAlongWalk) {
  const Group z9 = make_cyclic_group(9);
  const VoltageAssignment a = k13_loop_assignment(z9, {1, 2, 4});
  const int out = a.base().darts_from(0).front();
  const int leaf = a.base().head(out);
  int loop_at_leaf = -1;
  for (int d : a.base().darts_from(leaf)) {
    if (a.base().is_loop(d)) loop_at_leaf = d;
  }
  ASSERT_GE(loop_at_leaf, 0);
  const std::vector<int> walk{out, loop_at_leaf, loop_at_leaf, DartGraph::inverse(out)};
  const int v = a.voltage(loop_at_leaf);
  EXPECT_EQ(net_voltage(a, walk), z9.op(v, v));
  const std::vector<int> broken{out, out};
  EXPECT_THROW(net_voltage(a, broken), std::invalid_argument);
}

std::vector<Group> sample_groups() {
  std::vector<Group> out;
  for (int m = 3; m <= 24; ++m) out.push_back(make_cyclic_group(m));
  for (int m = 3; m <= 10; ++m) out.push_back(make_dihedral_group(m));
  out.push_back(direct_product(make_cyclic_group(2), make_cyclic_group(6)));
  for (auto& g : groups_from_source(std::string(CAGEGEN_FIXTURES_DIR) + "/groups")) out.push_back(g);
  return out;
}

// 200 random assignments, random groups and loop voltages: closed-walk search
// on the base agrees with cycle search on the explicit lift, length by length.
TEST(LiftCycleTest, WalkSearchAgreesWithExplicitLift) {
  std::mt19937_64 rng(200);
  const auto groups = sample_groups();
  for (int trial = 0; trial < 200; ++trial) {
    const Group& grp = groups[rng() % groups.size()];
    std::uniform_int_distribution<int> el(1, grp.size() - 1);
    VoltageAssignment a = k13_loop_assignment(grp, {el(rng), el(rng), el(rng)});
    if (trial % 2 == 1) {
      for (int d = 0; d < 6; d += 2) a.set(d, el(rng));
    }
    const int max_len = 10;
    ASSERT_EQ(lift_cycle_check(a, max_len), lift_cycle_check_explicit(a, max_len))
        << grp.name() << " trial " << trial;
  }
}

TEST(LiftCycleTest, WalkSearchOnGeneralBase) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Group grp = make_cyclic_group(3 + static_cast<int>(rng() % 8));
    VoltageAssignment a(DartGraph::from_graph(fixtures::complete(4)), grp);
    for (int d = 0; d < a.base().dart_count(); d += 2) a.set(d, static_cast<int>(rng() % static_cast<unsigned>(grp.size())));
    ASSERT_EQ(lift_cycle_check(a, 9), lift_cycle_check_explicit(a, 9));
  }
}

TEST(LiftCycleTest, NormalizationKillsTreeVoltagesAndPreservesLift) {
  std::mt19937_64 rng(11);
  const auto groups = sample_groups();
  for (int trial = 0; trial < 50; ++trial) {
    const Group& grp = groups[rng() % groups.size()];
    std::uniform_int_distribution<int> el(1, grp.size() - 1);
    VoltageAssignment a = k13_loop_assignment(grp, {el(rng), el(rng), el(rng)});
    for (int d = 0; d < 6; d += 2) a.set(d, el(rng));
    const VoltageAssignment b = normalize_to_spanning_tree(a);
    for (int d = 0; d < 6; ++d) EXPECT_EQ(b.voltage(d), grp.identity());
    for (int d : kK13LoopDart) EXPECT_EQ(grp.element_order(b.voltage(d)), grp.element_order(a.voltage(d)));
    EXPECT_TRUE(is_isomorphic(voltage_lift(a), voltage_lift(b))) << grp.name();
  }
}

TEST(LiftSearchTest, SevenAndNine) {
  const auto r7 = search_k13loop_lifts(7, groups_from_source("cyclic:40"));
  ASSERT_TRUE(r7.order.has_value());
  EXPECT_EQ(*r7.order, 36);
  ASSERT_FALSE(r7.witnesses.empty());
  EXPECT_EQ(r7.witnesses.front().group_name, "Z9");
  EXPECT_EQ(r7.witnesses.front().loops, (std::array<int, 3>{1, 2, 4}));

  const auto r9 = search_k13loop_lifts(9, groups_from_source("cyclic:19"));
  ASSERT_TRUE(r9.order.has_value());
  EXPECT_EQ(*r9.order, 76);
  EXPECT_EQ(r9.witnesses.front().loops, (std::array<int, 3>{1, 7, 8}));
}

TEST(LiftSearchTest, WitnessesAreValidTargets) {
  const auto groups = groups_from_source("builtin:60");
  for (int g = 3; g <= 8; ++g) {
    const auto r = search_k13loop_lifts(g, groups);
    ASSERT_TRUE(r.order.has_value()) << g;
    for (const auto& w : r.witnesses) {
      const Graph lift = voltage_lift(k13_loop_assignment(groups[w.group_index], w.loops));
      EXPECT_EQ(lift.order(), *r.order);
      EXPECT_TRUE(is_valid_target(lift, 3, g)) << g << " " << w.group_name;
    }
  }
}

TEST(LiftSearchTest, CapIsAnUpperLimitOnLiftOrder) {
  const auto groups = groups_from_source("cyclic:40");
  EXPECT_FALSE(search_k13loop_lifts(7, groups, 35).order.has_value());
  EXPECT_EQ(search_k13loop_lifts(7, groups, 36).order, 36);
}

TEST(LiftSearchTest, ParallelSearchMatchesSerial) {
  const auto groups = groups_from_source("builtin:48");
  for (int g : {5, 7, 8}) {
    const auto a = search_k13loop_lifts(g, groups, 0, 1);
    const auto b = search_k13loop_lifts(g, groups, 0, 4);
    EXPECT_EQ(a.order, b.order);
    ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
      EXPECT_EQ(a.witnesses[i].group_index, b.witnesses[i].group_index);
      EXPECT_EQ(a.witnesses[i].loops, b.witnesses[i].loops);
    }
  }
}

}  // namespace
}  // namespace cagegen
