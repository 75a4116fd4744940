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

#include "cagegen/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cagegen/generator.hpp"

namespace cagegen {

Graph canonical_double_cover(const Graph& graph) {
  const int n = graph.order();
  if (2 * n > kMaxOrder) throw std::invalid_argument("double cover exceeds the maximum order");
  Graph cover(2 * n);
  for (const auto& [u, v] : graph.edges()) {
    cover.add_edge(u, v + n);
    cover.add_edge(u + n, v);
  }
  return cover;
}

bool cover_excludes_next_cycle(const Graph& graph, int g) {
  const Graph cover = canonical_double_cover(graph);
  if (g % 2 == 1) {
    const auto cg = girth(cover);
    return !cg || *cg >= g + 3;
  }
  const int n = graph.order();
  for (int v = 0; v < n; ++v) {
    const auto d = distance(cover, v, v + n);
    if (d && *d < g + 3) return false;
  }
  return true;
}

DartGraph::DartGraph(int vertices) : out_(static_cast<std::size_t>(vertices)) {}

DartGraph DartGraph::from_graph(const Graph& graph) {
  DartGraph d(graph.order());
  for (const auto& [u, v] : graph.edges()) d.add_edge(u, v);
  return d;
}

int DartGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::out_of_range("dart graph vertex out of range");
  }
  const int d = dart_count();
  tail_.push_back(u);
  tail_.push_back(v);
  out_[static_cast<std::size_t>(u)].push_back(d);
  out_[static_cast<std::size_t>(v)].push_back(d + 1);
  return d;
}

bool DartGraph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()));
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int d : darts_from(x)) {
      const int y = head(d);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == vertex_count();
}

DartGraph make_k13_loop() {
  DartGraph d(4);
  for (int leaf = 1; leaf <= 3; ++leaf) d.add_edge(0, leaf);
  for (int leaf = 1; leaf <= 3; ++leaf) d.add_edge(leaf, leaf);
  return d;
}

VoltageAssignment::VoltageAssignment(DartGraph base, Group group)
    : base_(std::move(base)), group_(std::move(group)),
      volt_(static_cast<std::size_t>(base_.dart_count()), group_.identity()) {}

void VoltageAssignment::set(int dart, int element) {
  if (dart < 0 || dart >= base_.dart_count()) throw std::out_of_range("dart out of range");
  if (element < 0 || element >= group_.size()) throw std::out_of_range("group element out of range");
  volt_[static_cast<std::size_t>(dart)] = element;
  volt_[static_cast<std::size_t>(DartGraph::inverse(dart))] = group_.inverse(element);
}

VoltageAssignment k13_loop_assignment(const Group& group, const std::array<int, 3>& loops) {
  VoltageAssignment a(make_k13_loop(), group);
  for (int i = 0; i < 3; ++i) a.set(kK13LoopDart[i], loops[static_cast<std::size_t>(i)]);
  return a;
}

Graph voltage_lift(const VoltageAssignment& a) {
  const DartGraph& base = a.base();
  const Group& grp = a.group();
  const int m = grp.size();
  const long long order = static_cast<long long>(base.vertex_count()) * m;
  if (order > kMaxOrder) throw LiftError("lift exceeds the maximum order");
  Graph lift(static_cast<int>(order));
  std::set<Edge> own;
  for (int d = 0; d < base.dart_count(); d += 2) {
    const int u = base.tail(d);
    const int v = base.head(d);
    const int alpha = a.voltage(d);
    if (u == v && alpha == grp.identity()) {
      throw LiftError("loop dart " + std::to_string(d) + " carries the identity voltage");
    }
    own.clear();
    for (int h = 0; h < m; ++h) {
      int x = u * m + h;
      int y = v * m + grp.op(h, alpha);
      if (x > y) std::swap(x, y);
      // An involution on a loop yields each lift edge from both ends.
      if (!own.insert({x, y}).second) continue;
      if (!lift.add_edge(x, y)) {
        throw LiftError("base edges collide on lift edge " + std::to_string(x) + "-" +
                        std::to_string(y));
      }
    }
  }
  return lift;
}

int net_voltage(const VoltageAssignment& a, std::span<const int> walk) {
  const Group& grp = a.group();
  int net = grp.identity();
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const int d = walk[i];
    if (d < 0 || d >= a.base().dart_count()) throw std::invalid_argument("dart out of range");
    if (i > 0 && a.base().head(walk[i - 1]) != a.base().tail(d)) {
      throw std::invalid_argument("walk is not consecutive at position " + std::to_string(i));
    }
    net = grp.op(net, a.voltage(d));
  }
  return net;
}

namespace {

struct WalkSearch {
  const VoltageAssignment& a;
  std::span<const char> enabled;
  int max_len;
  int m;
  int start;
  std::vector<int> visited;
  std::vector<bool>& exists;

  void extend(int x, int h, int prev_dart, int len) {
    for (int d : a.base().darts_from(x)) {
      if (!enabled.empty() && !enabled[static_cast<std::size_t>(d)]) continue;
      if (prev_dart >= 0 && d == DartGraph::inverse(prev_dart)) continue;
      const int y = a.base().head(d);
      const int hy = a.group().op(h, a.voltage(d));
      const int lifted = y * m + hy;
      if (lifted == start) {
        if (len + 1 >= 3) exists[static_cast<std::size_t>(len) + 1] = true;
        continue;
      }
      if (len + 1 >= max_len) continue;
      if (std::find(visited.begin(), visited.end(), lifted) != visited.end()) continue;
      visited.push_back(lifted);
      extend(y, hy, d, len + 1);
      visited.pop_back();
    }
  }
};

}  // namespace

std::vector<bool> lift_cycle_check(const VoltageAssignment& a, int max_len,
                                   std::span<const char> enabled) {
  std::vector<bool> exists(static_cast<std::size_t>(std::max(max_len, 0)) + 1, false);
  if (max_len < 3) return exists;
  const int m = a.group().size();
  const int e = a.group().identity();
  for (int v = 0; v < a.base().vertex_count(); ++v) {
    WalkSearch s{a, enabled, max_len, m, v * m + e, {v * m + e}, exists};
    s.extend(v, e, -1, 0);
  }
  return exists;
}

std::vector<bool> lift_cycle_check_explicit(const VoltageAssignment& a, int max_len) {
  std::vector<bool> exists(static_cast<std::size_t>(std::max(max_len, 0)) + 1, false);
  const Graph lift = voltage_lift(a);
  for (int len = 3; len <= max_len; ++len) exists[static_cast<std::size_t>(len)] = has_cycle_of_length(lift, len);
  return exists;
}

VoltageAssignment normalize_to_spanning_tree(const VoltageAssignment& a) {
  const DartGraph& base = a.base();
  const Group& grp = a.group();
  const int nv = base.vertex_count();
  // potential[v] is the net voltage of the tree path from vertex 0 to v.
  std::vector<int> potential(static_cast<std::size_t>(nv), -1);
  std::vector<int> queue;
  if (nv > 0) {
    potential[0] = grp.identity();
    queue.push_back(0);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int d : base.darts_from(x)) {
      const int y = base.head(d);
      if (potential[static_cast<std::size_t>(y)] >= 0) continue;
      potential[static_cast<std::size_t>(y)] = grp.op(potential[static_cast<std::size_t>(x)], a.voltage(d));
      queue.push_back(y);
    }
  }
  if (static_cast<int>(queue.size()) != nv) throw std::invalid_argument("base graph is disconnected");
  VoltageAssignment out(base, grp);
  for (int d = 0; d < base.dart_count(); d += 2) {
    const int pu = potential[static_cast<std::size_t>(base.tail(d))];
    const int pv = potential[static_cast<std::size_t>(base.head(d))];
    out.set(d, grp.op(grp.op(pu, a.voltage(d)), grp.inverse(pv)));
  }
  return out;
}

namespace {

// True when the lift restricted to the enabled darts has a cycle that no
// (3,g,g+1)-graph may contain.
bool has_bad_cycle(const VoltageAssignment& a, int g, std::span<const char> enabled) {
  const auto exists = lift_cycle_check(a, g + 1, enabled);
  for (int len = 3; len < g; ++len) {
    if (exists[static_cast<std::size_t>(len)]) return true;
  }
  return exists[static_cast<std::size_t>(g) + 1];
}

struct LiftTask {
  std::size_t group_index;
  int first;
};

}  // namespace

LiftSearchResult search_k13loop_lifts(int g, const std::vector<Group>& groups, int max_order,
                                      int workers) {
  if (g < 3) throw std::invalid_argument("girth must be at least 3");
  LiftSearchResult result;
  std::vector<std::size_t> by_order(groups.size());
  std::iota(by_order.begin(), by_order.end(), std::size_t{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t x, std::size_t y) {
    return groups[x].size() < groups[y].size();
  });

  std::size_t i = 0;
  while (i < by_order.size()) {
    const int order = groups[by_order[i]].size();
    std::size_t j = i;
    while (j < by_order.size() && groups[by_order[j]].size() == order) ++j;
    if (max_order > 0 && 4LL * order > max_order) break;

    std::vector<std::vector<int>> candidates(groups.size());
    std::vector<LiftTask> tasks;
    for (std::size_t b = i; b < j; ++b) {
      const Group& grp = groups[by_order[b]];
      auto& c = candidates[by_order[b]];
      for (int x = 0; x < grp.size(); ++x) {
        if (grp.element_order(x) >= 3) c.push_back(x);
      }
      for (std::size_t p = 0; p < c.size(); ++p) tasks.push_back({by_order[b], static_cast<int>(p)});
    }

    std::vector<std::vector<LiftWitness>> found(tasks.size());
    std::vector<std::uint64_t> checked(tasks.size(), 0);
    const auto task_count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers)) if (workers > 1)
    for (std::int64_t t = 0; t < task_count; ++t) {
      const LiftTask task = tasks[static_cast<std::size_t>(t)];
      const Group& grp = groups[task.group_index];
      const auto& c = candidates[task.group_index];
      VoltageAssignment a(make_k13_loop(), grp);
      std::vector<char> enabled(static_cast<std::size_t>(a.base().dart_count()), 0);
      std::fill(enabled.begin(), enabled.begin() + 6, 1);
      auto enable_loop = [&](int leaf, int element, char on) {
        a.set(kK13LoopDart[leaf], element);
        enabled[static_cast<std::size_t>(kK13LoopDart[leaf])] = on;
        enabled[static_cast<std::size_t>(kK13LoopDart[leaf]) + 1] = on;
      };
      const int v1 = c[static_cast<std::size_t>(task.first)];
      enable_loop(0, v1, 1);
      if (has_bad_cycle(a, g, enabled)) continue;
      for (std::size_t p2 = static_cast<std::size_t>(task.first); p2 < c.size(); ++p2) {
        enable_loop(1, c[p2], 1);
        if (has_bad_cycle(a, g, enabled)) continue;
        for (std::size_t p3 = p2; p3 < c.size(); ++p3) {
          enable_loop(2, c[p3], 1);
          ++checked[static_cast<std::size_t>(t)];
          const auto exists = lift_cycle_check(a, g + 1, enabled);
          bool ok = exists[static_cast<std::size_t>(g)] && !exists[static_cast<std::size_t>(g) + 1];
          for (int len = 3; len < g && ok; ++len) ok = !exists[static_cast<std::size_t>(len)];
          if (!ok || !is_valid_target(voltage_lift(a), 3, g)) continue;
          found[static_cast<std::size_t>(t)].push_back(
              {task.group_index, grp.name(), grp.size(), {v1, c[p2], c[p3]}});
        }
        enable_loop(2, grp.identity() == 0 ? 1 % grp.size() : 0, 0);
      }
    }

    result.groups_searched += j - i;
    for (auto n : checked) result.triples_checked += n;
    for (auto& f : found) {
      result.witnesses.insert(result.witnesses.end(), f.begin(), f.end());
    }
    if (!result.witnesses.empty()) {
      std::sort(result.witnesses.begin(), result.witnesses.end(),
                [](const LiftWitness& x, const LiftWitness& y) {
                  if (x.group_index != y.group_index) return x.group_index < y.group_index;
                  return x.loops < y.loops;
                });
      result.order = 4 * order;
      break;
    }
    i = j;
  }
  return result;
}

}  // namespace cagegen
