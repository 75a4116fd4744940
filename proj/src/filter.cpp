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

#include "cagegen/filter.hpp"

#include <istream>
#include <ostream>

#include "cagegen/covers.hpp"
#include "cagegen/graph6.hpp"

namespace cagegen {

FilterVerdict verify_target(const Graph& graph, const FilterOptions& options) {
  const int k = options.k;
  const int g = options.g;
  if (!graph.is_regular(k)) return {false, "not " + std::to_string(k) + "-regular"};
  const auto gi = girth(graph);
  if (!gi) return {false, "acyclic"};
  if (*gi != g) return {false, "girth " + std::to_string(*gi) + " != " + std::to_string(g)};

  const bool by_search = !has_cycle_of_length(graph, g + 1);
  const bool by_cover = cover_excludes_next_cycle(graph, g);
  if (by_search != by_cover) {
    throw VerifierDisagreement("cycle search and double cover disagree on a " + std::to_string(g + 1) +
                               "-cycle in " + encode_graph6(graph));
  }
  if (!by_search) return {false, "contains a " + std::to_string(g + 1) + "-cycle"};

  if (options.odd_girth) {
    const auto og = odd_girth(graph);
    if (!og || *og != *options.odd_girth) {
      return {false, "odd girth " + (og ? std::to_string(*og) : std::string("inf")) +
                         " != " + std::to_string(*options.odd_girth)};
    }
  }
  return {true, "ok"};
}

FilterReport run_filter(std::istream& in, std::ostream& out, std::ostream& log,
                        const FilterOptions& options) {
  FilterReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    Graph graph;
    try {
      graph = decode_graph6(line);
    } catch (const Graph6Error& e) {
      ++report.malformed;
      log << "warning: line " << line_no << ": " << e.what() << '\n';
      continue;
    }
    ++report.read;
    const FilterVerdict verdict = verify_target(graph, options);
    if (options.verbose) {
      log << "line " << line_no << ": " << (verdict.pass ? "pass" : "reject") << " (" << verdict.reason
          << ")\n";
    }
    if (verdict.pass) {
      ++report.passed;
      write_graph6(out, graph);
    }
  }
  return report;
}

}  // namespace cagegen
