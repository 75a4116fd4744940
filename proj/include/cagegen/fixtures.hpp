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

#ifndef CAGEGEN_FIXTURES_HPP_
#define CAGEGEN_FIXTURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cagegen/graph.hpp"

namespace cagegen::fixtures {

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph hypercube(int dimension);
Graph line_graph(const Graph& graph);
// Outer cycle 0..n-1, spokes i -> n+i, inner edges n+i -> n+(i+k mod n).
Graph generalized_petersen(int n, int k);
Graph petersen();
Graph heawood();

// Centre, three inner vertices and an outer hexagon.
Graph tricorn();
// Same skeleton with the outer vertices forming two triangles.
Graph second_334_cage();
Graph gp92();
// Three 9-cycles whose vertices are matched to nine centre vertices.
Graph cage_378();
// Lift of K_{1,3}^loop over Z19 with loop voltages 1, 7, 8.
Graph cage_3910();
Graph petersen_line_graph();
// 15 vertices: hexagon, inner triangles and three apex vertices.
Graph other_434_cage();
// 28 vertices, girth 6, no 7-cycle, odd girth 11.
Graph campbell();

struct NamedFixture {
  std::string name;
  std::string description;
  Graph (*build)();
  int k;
  int g;
  std::optional<int> odd_girth;
};

const std::vector<NamedFixture>& catalog();
// Throws std::invalid_argument for an unknown name.
const NamedFixture& find(const std::string& name);

}  // namespace cagegen::fixtures

#endif  // CAGEGEN_FIXTURES_HPP_
