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

#ifndef CAGEGEN_GRAPH_HPP_
#define CAGEGEN_GRAPH_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cagegen/bitset.hpp"

namespace cagegen {

// Largest order a Graph may have.
inline constexpr int kMaxOrder = 8192;

using Edge = std::pair<int, int>;

// Simple undirected graph on the vertices 0..order-1 with bit-vector
// adjacency rows. Symmetric and loop-free by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const {
    return adj_.test(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }

  // Returns false if the edge was already present. Throws
  // std::invalid_argument on a loop or an out-of-range endpoint.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  std::span<const Word> neighbors(int v) const {
    return adj_.row(static_cast<std::size_t>(v));
  }
  std::vector<int> neighbor_list(int v) const;
  template <typename F>
  void for_each_neighbor(int v, F&& f) const {
    bits::for_each(neighbors(v), std::forward<F>(f));
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool is_regular(int k) const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;

  // Vertex v of *this becomes perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;
  // Drops the given vertices and renumbers the survivors in increasing order.
  Graph without_vertices(std::span<const int> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  BitMatrix adj_;
  std::vector<int> deg_;
};

struct CycleQueryResult {
  std::optional<int> length;  // nullopt: acyclic
  std::vector<int> witness;   // a shortest cycle, consecutive vertices adjacent
};

// Length of a shortest cycle, nullopt for forests. BFS from every vertex,
// parallelised over sources with OpenMP.
std::optional<int> girth(const Graph& g);
// Single-threaded reference for girth().
std::optional<int> girth_serial(const Graph& g);
CycleQueryResult shortest_cycle(const Graph& g);

// True iff g has a cycle on exactly `length` distinct vertices.
bool has_cycle_of_length(const Graph& g, int length);

// Calls `visit` once per cycle of the given length. The sequence starts at
// the cycle's smallest vertex and runs in the direction of its smaller
// neighbour. Enumeration stops early when `visit` returns false.
void enumerate_cycles(const Graph& g, int length,
                      const std::function<bool(std::span<const int>)>& visit);

std::optional<int> odd_girth(const Graph& g);
std::optional<int> distance(const Graph& g, int u, int v);
// Hop counts from source, -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_bipartite(const Graph& g);
int component_count(const Graph& g);

}  // namespace cagegen

#endif  // CAGEGEN_GRAPH_HPP_
