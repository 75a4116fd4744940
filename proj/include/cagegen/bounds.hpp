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

#ifndef CAGEGEN_BOUNDS_HPP_
#define CAGEGEN_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cagegen/graph.hpp"

namespace cagegen {

// All closed-form lower bounds for one (k, g) pair. The odd-girth fields are
// empty for even g, where only the Moore bound is reported.
struct BoundsReport {
  int k = 0;
  int g = 0;
  std::int64_t moore = 0;
  std::optional<std::int64_t> prop1;
  std::optional<bool> prop2_divisible;
  std::optional<std::int64_t> cover_bound;
  std::int64_t parity_adjusted_final = 0;
  // One line per field explaining where its value comes from.
  std::vector<std::string> notes;
};

// Throws std::invalid_argument for k < 3 or g < 3 and std::overflow_error
// when the value does not fit in 64 bits.
std::int64_t moore_bound(int k, int g);

// M(k, 2t+1) + (k-2) k (k-1)^(t-1). Throws std::domain_error for even g.
std::int64_t prop1_lower_bound(int k, int g);

// Whether 4t+2 divides prop1 * k (k-1)^(t-1), the necessary condition for a
// graph attaining the counting bound.
bool prop2_divisibility_holds(int k, int t);

BoundsReport refined_lower_bound(int k, int g);

// floor(k (k-1)^(t-1) / 2).
std::int64_t horizontal_edge_cap(int k, int t);

// Smallest order the generator has to consider for (k, g): the refined bound
// for odd g and the parity-adjusted Moore bound for even g.
std::int64_t search_lower_bound(int k, int g);

// Facts about the depth-t BFS balls of a (k, 2t+1)-graph, one ball per root.
struct MooreTreeAudit {
  bool balls_are_trees = true;
  std::int64_t max_horizontal_edges = 0;
  // Some leaf is an endpoint of two horizontal edges.
  bool leaf_on_two_horizontal = false;
  // Some vertex outside a ball is adjacent to two of its leaves.
  bool shared_outer_neighbor = false;
  int worst_root = -1;
};

// Throws std::invalid_argument unless g is odd and >= 3.
MooreTreeAudit audit_moore_trees(const Graph& graph, int g);

}  // namespace cagegen

#endif  // CAGEGEN_BOUNDS_HPP_
