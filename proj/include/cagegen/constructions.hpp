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

#ifndef CAGEGEN_CONSTRUCTIONS_HPP_
#define CAGEGEN_CONSTRUCTIONS_HPP_

#include <vector>

#include "cagegen/graph.hpp"

namespace cagegen {

// Removing adjacent u, v of a shortest cycle and joining x[i] to y[i], where
// x are u's other neighbours and y are v's. x[0] and y[0] lie on the cycle.
struct ExcisionPlan {
  std::vector<int> cycle;
  int u = -1;
  int v = -1;
  std::vector<int> x;
  std::vector<int> y;
};

// Builds the plan for edge cycle[i] - cycle[i+1] of a girth cycle, pairing
// the off-cycle neighbours in ascending order.
ExcisionPlan make_excision_plan(const Graph& graph, std::vector<int> cycle, int i);

// The excised graph on |V| - 2 vertices; survivors keep their relative order.
Graph apply_excision(const Graph& graph, const ExcisionPlan& plan);

// Takes a k-regular graph of girth h >= 5 without (h+1)-cycles to a k-regular
// graph on two fewer vertices with girth h-2 and no (h-1)-cycle, using the
// lexicographically least girth cycle and its first edge. Throws
// std::domain_error for h < 5, std::invalid_argument when the input fails
// its preconditions, and std::logic_error if the output is ever invalid.
Graph reduce_by_cycle(const Graph& graph, int k, int h);

struct ExcisionOutcome {
  ExcisionPlan plan;
  Graph result;
  bool valid = false;
};

// Every girth cycle, every edge on it and every pairing of the off-cycle
// neighbours. Outcomes are ordered by (cycle, edge, pairing).
std::vector<ExcisionOutcome> reduce_all_choices(const Graph& graph, int k, int h, int workers = 1);

}  // namespace cagegen

#endif  // CAGEGEN_CONSTRUCTIONS_HPP_
