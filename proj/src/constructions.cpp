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

#include "cagegen/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cagegen/generator.hpp"

namespace cagegen {

namespace {

void check_preconditions(const Graph& graph, int k, int h) {
  if (h < 5) throw std::domain_error("excision needs girth h >= 5");
  if (!is_valid_target(graph, k, h)) {
    throw std::invalid_argument("input is not a k-regular graph of girth h without (h+1)-cycles");
  }
}

std::vector<std::vector<int>> girth_cycles(const Graph& graph, int h) {
  std::vector<std::vector<int>> cycles;
  enumerate_cycles(graph, h, [&](std::span<const int> c) {
    cycles.emplace_back(c.begin(), c.end());
    return true;
  });
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace

ExcisionPlan make_excision_plan(const Graph& graph, std::vector<int> cycle, int i) {
  const int h = static_cast<int>(cycle.size());
  if (h < 3 || i < 0 || i >= h) throw std::invalid_argument("bad cycle position");
  ExcisionPlan plan;
  plan.u = cycle[static_cast<std::size_t>(i)];
  plan.v = cycle[static_cast<std::size_t>((i + 1) % h)];
  const int x1 = cycle[static_cast<std::size_t>((i + h - 1) % h)];
  const int y1 = cycle[static_cast<std::size_t>((i + 2) % h)];
  plan.x.push_back(x1);
  plan.y.push_back(y1);
  graph.for_each_neighbor(plan.u, [&](int w) {
    if (w != plan.v && w != x1) plan.x.push_back(w);
  });
  graph.for_each_neighbor(plan.v, [&](int w) {
    if (w != plan.u && w != y1) plan.y.push_back(w);
  });
  plan.cycle = std::move(cycle);
  return plan;
}

Graph apply_excision(const Graph& graph, const ExcisionPlan& plan) {
  if (plan.x.size() != plan.y.size()) throw std::invalid_argument("unbalanced pairing");
  Graph work = graph;
  for (std::size_t i = 0; i < plan.x.size(); ++i) {
    const int a = plan.x[i];
    const int b = plan.y[i];
    if (a == b || a == plan.u || a == plan.v || b == plan.u || b == plan.v) {
      throw std::logic_error("pairing joins " + std::to_string(a) + " and " + std::to_string(b));
    }
    if (!work.add_edge(a, b)) {
      throw std::logic_error("pairing repeats edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  const int removed[] = {plan.u, plan.v};
  return work.without_vertices(removed);
}

Graph reduce_by_cycle(const Graph& graph, int k, int h) {
  check_preconditions(graph, k, h);
  const auto cycles = girth_cycles(graph, h);
  if (cycles.empty()) throw std::invalid_argument("no cycle of length h");
  const ExcisionPlan plan = make_excision_plan(graph, cycles.front(), 0);
  Graph out = apply_excision(graph, plan);
  if (!is_valid_target(out, k, h - 2)) {
    throw std::logic_error("excision produced an invalid graph");
  }
  return out;
}

std::vector<ExcisionOutcome> reduce_all_choices(const Graph& graph, int k, int h, int workers) {
  check_preconditions(graph, k, h);
  const auto cycles = girth_cycles(graph, h);
  std::vector<ExcisionPlan> base;
  for (const auto& c : cycles) {
    for (int i = 0; i < h; ++i) base.push_back(make_excision_plan(graph, c, i));
  }
  std::vector<std::vector<ExcisionOutcome>> per(base.size());
  const auto count = static_cast<std::int64_t>(base.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers)) if (workers > 1)
  for (std::int64_t t = 0; t < count; ++t) {
    ExcisionPlan plan = base[static_cast<std::size_t>(t)];
    // x[0] <-> y[0] is fixed; permute the remaining y's.
    std::sort(plan.y.begin() + 1, plan.y.end());
    do {
      ExcisionOutcome o;
      o.plan = plan;
      o.result = apply_excision(graph, plan);
      o.valid = is_valid_target(o.result, k, h - 2);
      per[static_cast<std::size_t>(t)].push_back(std::move(o));
    } while (std::next_permutation(plan.y.begin() + 1, plan.y.end()));
  }
  std::vector<ExcisionOutcome> out;
  for (auto& p : per) {
    for (auto& o : p) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace cagegen
