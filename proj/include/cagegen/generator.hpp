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

#ifndef CAGEGEN_GENERATOR_HPP_
#define CAGEGEN_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cagegen/bitset.hpp"
#include "cagegen/canon.hpp"
#include "cagegen/graph.hpp"

namespace cagegen {

// The radius-t ball every (k,g)-graph contains, labelled in BFS order.
struct MooreTree {
  Graph graph;
  int k = 0;
  int g = 0;
  // Leaf depth, floor((g-1)/2).
  int t = 0;
  // Vertex 0 for odd g. For even g the root edge is {0, 1}.
  int root = 0;
  std::optional<Edge> root_edge;
  // Distance from the root vertex or root edge.
  std::vector<int> depth;
};

MooreTree build_moore_tree(int k, int g);

// One node of the add/skip search: a partial graph plus the pairs that may
// still become edges. Eligibility only ever shrinks along a branch.
class SearchState {
 public:
  SearchState() = default;
  // The Moore tree on vertices [0, M(k,g)) plus isolated vertices up to n.
  // Throws std::invalid_argument if n < M(k,g).
  SearchState(int n, int k, int g);

  int order() const { return graph_.order(); }
  int k() const { return k_; }
  int g() const { return g_; }
  const Graph& graph() const { return graph_; }
  const VertexSet& isolated() const { return isolated_; }
  const BitMatrix& eligible() const { return eligible_; }
  const BitMatrix& forbidden() const { return forbidden_; }

  bool is_eligible(int u, int w) const {
    return eligible_.test(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
  }
  std::size_t eligible_count(int v) const {
    return bits::count(eligible_.row(static_cast<std::size_t>(v)));
  }
  // Edges still missing from a k-regular graph.
  std::int64_t edge_budget() const {
    return static_cast<std::int64_t>(order()) * k_ / 2 -
           static_cast<std::int64_t>(graph_.edge_count());
  }
  bool complete() const { return edge_budget() == 0; }

  // Some vertex can no longer reach degree k.
  bool stuck() const;

  // Open vertex with the fewest eligible pairs (lowest index on ties) and its
  // smallest eligible partner; nullopt when every vertex is saturated.
  std::optional<Edge> choose_branch() const;

  // Adds an eligible pair and updates eligibility incrementally.
  void add_edge(int u, int w);
  // Forbids a pair for the rest of the branch. When an endpoint is isolated
  // the pair stands for every isolated vertex, so the whole class goes.
  void skip_edge(int u, int w);

  // Eligibility recomputed from scratch: open endpoints, no path of length
  // 1..g-2 or g between them, not forbidden.
  BitMatrix compute_eligible() const;

 private:
  int k_ = 0;
  int g_ = 0;
  Graph graph_;
  VertexSet isolated_;
  BitMatrix eligible_;
  BitMatrix forbidden_;
};

// k-regular, girth exactly g, no (g+1)-cycle.
bool is_valid_target(const Graph& graph, int k, int g);

struct GeneratorOptions {
  int workers = 1;
  bool dedup = true;
  std::size_t dedup_capacity = kDefaultDedupCapacity;
  // When false, orders below the refined lower bound are searched anyway.
  bool enforce_lower_bound = true;
  // Add/skip decisions taken serially before handing subtrees to workers.
  // 0 picks a depth from the worker count.
  int split_depth = 0;
};

struct GeneratorStats {
  std::uint64_t nodes = 0;
  std::uint64_t dedup_pruned = 0;
  std::uint64_t stuck_pruned = 0;
  std::uint64_t complete_graphs = 0;
  std::size_t forms_stored = 0;
  std::size_t tasks = 1;
  bool dedup_overflowed = false;
  bool below_lower_bound = false;
};

struct GenerationResult {
  // One canonically labelled graph per isomorphism class, sorted by form.
  std::vector<Graph> graphs;
  GeneratorStats stats;
  std::vector<std::string> warnings;
};

GenerationResult generate_all(int n, int k, int g, const GeneratorOptions& options = {});

// Streams the graphs of generate_all() to `emit` and returns their count.
std::size_t generate_all(int n, int k, int g, const std::function<void(const Graph&)>& emit,
                         const GeneratorOptions& options = {});

// CAGEGEN_DEDUP_CAP if set to a positive integer, else `fallback`.
std::size_t dedup_capacity_from_env(std::size_t fallback = kDefaultDedupCapacity);

}  // namespace cagegen

#endif  // CAGEGEN_GENERATOR_HPP_
