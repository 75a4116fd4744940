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


// Brute-force oracles shared by the unit tests and the acceptance binary.
// Everything here favours obviousness over speed.

#ifndef CAGEGEN_TESTS_ORACLES_HPP_
#define CAGEGEN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "cagegen/canon.hpp"
#include "cagegen/generator.hpp"
#include "cagegen/graph.hpp"
#include "cagegen/graph6.hpp"

namespace cagegen::oracle {

// Every cycle length present in g, found by extending simple paths whose
// start is their smallest vertex.
inline std::set<int> cycle_lengths(const Graph& g) {
  std::set<int> lengths;
  const int n = g.order();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> extend = [&](int start, int v, int len) {
    for (int w : g.neighbor_list(v)) {
      if (w == start && len >= 3) lengths.insert(len);
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      extend(start, w, len + 1);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s, s, 1);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return lengths;
}

// One representative per isomorphism class on n vertices, built by adding a
// vertex with every neighbourhood to each class on n - 1 vertices.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> level{Graph(0)};
  for (int order = 1; order <= n; ++order) {
    std::vector<Graph> next;
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    for (const Graph& base : level) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (order - 1)); ++mask) {
        Graph h(order);
        for (const auto& [u, v] : base.edges()) h.add_edge(u, v);
        for (int u = 0; u < order - 1; ++u) {
          if (mask >> u & 1U) h.add_edge(u, order - 1);
        }
        if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Reference census: breadth-first over edge counts, every possible added edge,
// isomorphism rejection at each level, and pruning only on forbidden cycle
// lengths (a property inherited by every supergraph).
inline std::vector<Graph> naive_generate(int n, int k, int g) {
  auto violates = [&](const Graph& h) {
    const std::set<int> lengths = cycle_lengths(h);
    for (int len : lengths) {
      if (len < g || len == g + 1) return true;
    }
    return false;
  };
  std::vector<Graph> result;
  if (n * k % 2 != 0) return result;
  std::vector<Graph> level{Graph(n)};
  const int target_edges = n * k / 2;
  for (int m = 0; m < target_edges && !level.empty(); ++m) {
    std::vector<Graph> next;
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    for (const Graph& h : level) {
      for (int u = 0; u < n; ++u) {
        if (h.degree(u) >= k) continue;
        for (int v = u + 1; v < n; ++v) {
          if (h.degree(v) >= k || h.has_edge(u, v)) continue;
          Graph child = h;
          child.add_edge(u, v);
          if (violates(child)) continue;
          if (seen.insert(canonical_form(child)).second) next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
  }
  for (const Graph& h : level) {
    const std::set<int> lengths = cycle_lengths(h);
    if (h.is_regular(k) && !lengths.empty() && *lengths.begin() == g && !lengths.count(g + 1)) {
      result.push_back(h);
    }
  }
  return result;
}

inline std::set<CanonicalForm> form_set(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const Graph& h : graphs) out.insert(canonical_form(h));
  return out;
}

inline std::vector<Graph> read_fixture_file(const std::string& name) {
  std::ifstream in(std::string(CAGEGEN_FIXTURES_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture file " + name);
  return read_graph6_stream(in);
}

}  // namespace cagegen::oracle

#endif  // CAGEGEN_TESTS_ORACLES_HPP_
