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

#ifndef CAGEGEN_COVERS_HPP_
#define CAGEGEN_COVERS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cagegen/graph.hpp"
#include "cagegen/groups.hpp"

namespace cagegen {

// Vertices (u,0) = u and (u,1) = u + n; each edge uv becomes the crossed
// pair (u,0)-(v,1), (u,1)-(v,0).
Graph canonical_double_cover(const Graph& graph);

// Decides "no (g+1)-cycle" for a graph of girth >= g through its double
// cover only. Odd g: the cover has girth >= g+3. Even g: the shortest path
// between the two copies of any vertex, which is the odd girth, is >= g+3.
bool cover_excludes_next_cycle(const Graph& graph, int g);

// Multigraph with loops. Edge i owns darts 2i (tail -> head) and 2i+1
// (head -> tail); a loop's two darts both start and end at its vertex.
class DartGraph {
 public:
  DartGraph() = default;
  explicit DartGraph(int vertices);
  static DartGraph from_graph(const Graph& graph);

  // Returns the dart u -> v.
  int add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  int dart_count() const { return static_cast<int>(tail_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int tail(int d) const { return tail_[static_cast<std::size_t>(d)]; }
  int head(int d) const { return tail_[static_cast<std::size_t>(d ^ 1)]; }
  static int inverse(int d) { return d ^ 1; }
  bool is_loop(int d) const { return tail(d) == head(d); }
  std::span<const int> darts_from(int v) const { return out_[static_cast<std::size_t>(v)]; }
  bool connected() const;

 private:
  std::vector<int> tail_;
  std::vector<std::vector<int>> out_;
};

// K_{1,3} with a loop on every leaf: centre 0, leaves 1..3. Darts 0..5 are
// the star edges (dart 2i runs 0 -> i+1), darts 6..11 the loops (dart 6+2i
// at leaf i+1).
DartGraph make_k13_loop();
inline constexpr int kK13LoopDart[3] = {6, 8, 10};

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dart -> group element with alpha(inverse(d)) = alpha(d)^-1 by construction.
class VoltageAssignment {
 public:
  // All voltages start at the identity.
  VoltageAssignment(DartGraph base, Group group);

  const DartGraph& base() const { return base_; }
  const Group& group() const { return group_; }
  int voltage(int dart) const { return volt_[static_cast<std::size_t>(dart)]; }
  // Sets dart and, implicitly, its inverse.
  void set(int dart, int element);

 private:
  DartGraph base_;
  Group group_;
  std::vector<int> volt_;
};

VoltageAssignment k13_loop_assignment(const Group& group, const std::array<int, 3>& loops);

// Vertex (v, h) of the derived graph is v * |G| + h; dart u -> v with voltage
// a joins (u, h) and (v, h a). Throws LiftError on a loop with identity
// voltage or when two base edges produce the same lift edge.
Graph voltage_lift(const VoltageAssignment& a);

// Left-to-right product along a walk; throws std::invalid_argument when
// consecutive darts do not meet.
int net_voltage(const VoltageAssignment& a, std::span<const int> walk);

// exists[l] for 0 <= l <= max_len: whether the lift has an l-cycle, from
// closed non-reversing base walks with identity net voltage whose lifted
// vertices are distinct. Only darts with enabled[d] != 0 are used when a
// mask is given.
std::vector<bool> lift_cycle_check(const VoltageAssignment& a, int max_len,
                                   std::span<const char> enabled = {});

// Same question answered on the explicit lift.
std::vector<bool> lift_cycle_check_explicit(const VoltageAssignment& a, int max_len);

// Equivalent assignment that is the identity on a BFS spanning tree of the
// base (rooted at vertex 0, loops excluded).
VoltageAssignment normalize_to_spanning_tree(const VoltageAssignment& a);

struct LiftWitness {
  std::size_t group_index = 0;
  std::string group_name;
  int group_order = 0;
  std::array<int, 3> loops{};
};

struct LiftSearchResult {
  // Smallest lift order with a valid witness, if any within the cap.
  std::optional<int> order;
  // Every sorted loop triple at that order, ordered by group then triple.
  std::vector<LiftWitness> witnesses;
  std::size_t groups_searched = 0;
  std::uint64_t triples_checked = 0;
};

// Looks for cubic (3,g,g+1)-graphs among lifts of K_{1,3}^loop with star
// darts at the identity and loop triples v1 <= v2 <= v3 of elements of order
// >= 3. Groups are visited in nondecreasing order; lifts above max_order
// (0 = unbounded) are not considered.
LiftSearchResult search_k13loop_lifts(int g, const std::vector<Group>& groups, int max_order = 0,
                                      int workers = 1);

}  // namespace cagegen

#endif  // CAGEGEN_COVERS_HPP_
