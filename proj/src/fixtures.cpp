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

#include "cagegen/fixtures.hpp"

#include <array>
#include <stdexcept>

#include "cagegen/covers.hpp"
#include "cagegen/groups.hpp"

namespace cagegen::fixtures {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph hypercube(int dimension) {
  const int n = 1 << dimension;
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dimension; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

Graph line_graph(const Graph& graph) {
  const auto edges = graph.edges();
  Graph out(static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Graph generalized_petersen(int n, int k) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph heawood() {
  Graph g(14);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

namespace {

// Vertex 0 is the centre, 1..3 the inner vertices, 4..9 the hexagon.
Graph centred_hexagon(const std::array<std::array<int, 2>, 3>& spokes, int outer_step) {
  Graph g(10);
  for (int x = 0; x < 3; ++x) {
    g.add_edge(0, 1 + x);
    for (int h : spokes[static_cast<std::size_t>(x)]) g.add_edge(1 + x, 4 + h);
  }
  for (int h = 0; h < 6; ++h) g.add_edge(4 + h, 4 + (h + outer_step) % 6);
  return g;
}

}  // namespace

Graph tricorn() { return centred_hexagon({{{0, 5}, {2, 1}, {4, 3}}}, 1); }

Graph second_334_cage() { return centred_hexagon({{{2, 3}, {4, 5}, {0, 1}}}, 2); }

Graph gp92() { return generalized_petersen(9, 2); }

Graph cage_378() {
  // Centre vertex i is 0..8; cycle z occupies 9 + 9z .. 17 + 9z, with the
  // cycle vertex matched to centre i at offset i. Each row lists the centre
  // indices met walking once around that cycle.
  constexpr std::array<std::array<int, 9>, 3> kCycles = {{
      {6, 3, 0, 7, 4, 1, 8, 5, 2},
      {6, 0, 4, 8, 2, 3, 7, 1, 5},
      {7, 2, 4, 6, 1, 3, 8, 0, 5},
  }};
  Graph g(36);
  for (int z = 0; z < 3; ++z) {
    const auto& c = kCycles[static_cast<std::size_t>(z)];
    const int base = 9 + 9 * z;
    for (int j = 0; j < 9; ++j) {
      g.add_edge(c[static_cast<std::size_t>(j)], base + c[static_cast<std::size_t>(j)]);
      g.add_edge(base + c[static_cast<std::size_t>(j)], base + c[static_cast<std::size_t>((j + 1) % 9)]);
    }
  }
  return g;
}

Graph cage_3910() {
  return voltage_lift(k13_loop_assignment(make_cyclic_group(19), {1, 7, 8}));
}

Graph petersen_line_graph() { return line_graph(petersen()); }

Graph other_434_cage() {
  // Outer hexagon 0..5, inner 6..11 (inner x is 6+x), apexes 12, 13, 14.
  Graph g(15);
  for (int x = 0; x < 6; ++x) {
    g.add_edge(x, (x + 1) % 6);
    g.add_edge(x, 6 + x);
    g.add_edge(6 + x, 6 + (x + 2) % 6);
  }
  constexpr std::array<std::array<int, 2>, 3> kApex = {{{5, 2}, {0, 3}, {1, 4}}};
  for (int a = 0; a < 3; ++a) {
    for (int x : kApex[static_cast<std::size_t>(a)]) {
      g.add_edge(12 + a, x);
      g.add_edge(12 + a, 6 + x);
    }
  }
  return g;
}

Graph campbell() {
  // Each half: octagon P1..P8 at offset 0..7, then A, B, C, D at 8..11.
  // Halves start at 0 and 12; the four middle vertices are 24..27.
  Graph g(28);
  auto p = [](int half, int i) { return 12 * half + i - 1; };
  auto named = [](int half, char c) { return 12 * half + 8 + (c - 'A'); };
  for (int half = 0; half < 2; ++half) {
    for (int i = 1; i <= 8; ++i) g.add_edge(p(half, i), p(half, i % 8 + 1));
    g.add_edge(named(half, 'C'), p(half, 2));
    g.add_edge(named(half, 'C'), p(half, 6));
    g.add_edge(named(half, 'D'), p(half, 1));
    g.add_edge(named(half, 'D'), p(half, 5));
    g.add_edge(named(half, 'A'), named(half, 'B'));
    g.add_edge(named(half, 'A'), named(half, 'C'));
    g.add_edge(named(half, 'B'), named(half, 'D'));
  }
  auto m = [](int i) { return 23 + i; };
  g.add_edge(named(0, 'A'), m(2));
  g.add_edge(named(0, 'B'), m(1));
  g.add_edge(p(0, 8), m(3));
  g.add_edge(p(0, 3), m(4));
  g.add_edge(p(0, 4), m(3));
  g.add_edge(p(0, 7), m(4));
  g.add_edge(named(1, 'A'), m(3));
  g.add_edge(named(1, 'B'), m(4));
  g.add_edge(p(1, 8), m(1));
  g.add_edge(p(1, 3), m(2));
  g.add_edge(p(1, 4), m(1));
  g.add_edge(p(1, 7), m(2));
  return g;
}

const std::vector<NamedFixture>& catalog() {
  static const std::vector<NamedFixture> kCatalog = {
      {"tricorn", "(3,3,4)-cage, 10 vertices", &tricorn, 3, 3, std::nullopt},
      {"cage334b", "second (3,3,4)-cage, 10 vertices", &second_334_cage, 3, 3, std::nullopt},
      {"gp92", "generalized Petersen GP(9,2), the (3,5,6)-cage", &gp92, 3, 5, std::nullopt},
      {"cage378", "(3,7,8)-cage, 36 vertices", &cage_378, 3, 7, std::nullopt},
      {"cage3910", "(3,9,10)-cage, Z19 lift with loops 1,7,8", &cage_3910, 3, 9, std::nullopt},
      {"petersen-line", "line graph of the Petersen graph, a (4,3,4)-cage", &petersen_line_graph, 4, 3,
       std::nullopt},
      {"cage434b", "second (4,3,4)-cage, 15 vertices", &other_434_cage, 4, 3, std::nullopt},
      {"campbell", "(3,6,7)-graph with odd girth 11, 28 vertices", &campbell, 3, 6, 11},
  };
  return kCatalog;
}

const NamedFixture& find(const std::string& name) {
  for (const auto& f : catalog()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace cagegen::fixtures
