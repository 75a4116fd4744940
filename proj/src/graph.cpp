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

#include "cagegen/graph.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

namespace cagegen {

Graph::Graph(int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order out of range: " +
                                std::to_string(order));
  }
  adj_ = BitMatrix(static_cast<std::size_t>(order),
                   static_cast<std::size_t>(order));
  deg_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(n_));
  }
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) return false;
  adj_.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  adj_.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
  ++deg_[static_cast<std::size_t>(u)];
  ++deg_[static_cast<std::size_t>(v)];
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return false;
  adj_.reset(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  adj_.reset(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
  --deg_[static_cast<std::size_t>(u)];
  --deg_[static_cast<std::size_t>(v)];
  --m_;
  return true;
}

std::vector<int> Graph::neighbor_list(int v) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  for_each_neighbor(v, [&](int w) { out.push_back(w); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    bits::for_each(neighbors(u), [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

bool Graph::is_regular(int k) const {
  return std::all_of(deg_.begin(), deg_.end(), [k](int d) { return d == k; });
}

int Graph::max_degree() const {
  return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out = deg_;
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("permutation size does not match order");
  }
  Graph out(n_);
  for (const auto& [u, v] : edges()) {
    out.add_edge(perm[static_cast<std::size_t>(u)],
                 perm[static_cast<std::size_t>(v)]);
  }
  return out;
}

Graph Graph::without_vertices(std::span<const int> removed) const {
  std::vector<int> label(static_cast<std::size_t>(n_), 0);
  for (int r : removed) {
    check_vertex(r);
    label[static_cast<std::size_t>(r)] = -1;
  }
  int next = 0;
  for (auto& l : label) {
    if (l == 0) l = next++;
  }
  Graph out(next);
  for (const auto& [u, v] : edges()) {
    const int a = label[static_cast<std::size_t>(u)];
    const int b = label[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) out.add_edge(a, b);
  }
  return out;
}

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

struct BfsScratch {
  std::vector<int> dist;
  std::vector<int> parent;
  std::vector<int> queue;
  explicit BfsScratch(int n)
      : dist(static_cast<std::size_t>(n), -1),
        parent(static_cast<std::size_t>(n), -1),
        queue(static_cast<std::size_t>(n)) {}
};

struct CycleHit {
  int length = kNone;
  int x = -1;
  int y = -1;
};

// Shortest cycle closed by a non-tree edge in the BFS from `source`, only
// searching while a shorter cycle than `bound` is still possible.
CycleHit shortest_cycle_from(const Graph& g, int source, int bound,
                             BfsScratch& s) {
  CycleHit hit;
  hit.length = bound;
  std::size_t head = 0;
  std::size_t tail = 0;
  s.queue[tail++] = source;
  s.dist[static_cast<std::size_t>(source)] = 0;
  s.parent[static_cast<std::size_t>(source)] = -1;
  while (head < tail) {
    const int x = s.queue[head++];
    const int dx = s.dist[static_cast<std::size_t>(x)];
    if (2 * dx + 1 >= hit.length) break;
    g.for_each_neighbor(x, [&](int y) {
      const auto yi = static_cast<std::size_t>(y);
      if (s.dist[yi] < 0) {
        s.dist[yi] = dx + 1;
        s.parent[yi] = x;
        s.queue[tail++] = y;
      } else if (y != s.parent[static_cast<std::size_t>(x)]) {
        const int len = dx + s.dist[yi] + 1;
        if (len < hit.length) hit = {len, x, y};
      }
    });
  }
  for (std::size_t i = 0; i < tail; ++i) {
    s.dist[static_cast<std::size_t>(s.queue[i])] = -1;
  }
  return hit;
}

}  // namespace

std::optional<int> girth_serial(const Graph& g) {
  BfsScratch scratch(g.order());
  int best = kNone;
  for (int v = 0; v < g.order(); ++v) {
    best = std::min(best, shortest_cycle_from(g, v, best, scratch).length);
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::atomic<int> best{kNone};
#pragma omp parallel
  {
    BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 16)
    for (int v = 0; v < n; ++v) {
      const int bound = best.load(std::memory_order_relaxed);
      const int len = shortest_cycle_from(g, v, bound, scratch).length;
      int cur = best.load(std::memory_order_relaxed);
      while (len < cur &&
             !best.compare_exchange_weak(cur, len, std::memory_order_relaxed)) {
      }
    }
  }
  const int result = best.load();
  if (result == kNone) return std::nullopt;
  return result;
}

CycleQueryResult shortest_cycle(const Graph& g) {
  BfsScratch scratch(g.order());
  int best = kNone;
  int best_source = -1;
  for (int v = 0; v < g.order(); ++v) {
    const CycleHit hit = shortest_cycle_from(g, v, best, scratch);
    if (hit.length < best) {
      best = hit.length;
      best_source = v;
    }
  }
  CycleQueryResult result;
  if (best == kNone) return result;
  result.length = best;
  // Replay the winning search; parent pointers of the vertices it reaches
  // survive the scratch reset. The two tree paths meet only at the source,
  // otherwise a shorter cycle would exist.
  const CycleHit hit = shortest_cycle_from(g, best_source, best + 1, scratch);
  auto path_to_source = [&](int x) {
    std::vector<int> path{x};
    while (x != best_source) {
      x = scratch.parent[static_cast<std::size_t>(x)];
      path.push_back(x);
    }
    return path;
  };
  result.witness = path_to_source(hit.x);
  const std::vector<int> right = path_to_source(hit.y);
  for (auto it = right.rbegin() + 1; it != right.rend(); ++it) {
    result.witness.push_back(*it);
  }
  std::rotate(result.witness.begin(),
              std::min_element(result.witness.begin(), result.witness.end()),
              result.witness.end());
  return result;
}

namespace {

class FixedLengthCycleSearch {
 public:
  FixedLengthCycleSearch(const Graph& g, int length)
      : g_(g), length_(length),
        on_path_(static_cast<std::size_t>(g.order()), 0),
        dist_(static_cast<std::size_t>(g.order()), -1) {
    path_.reserve(static_cast<std::size_t>(length));
  }

  // Enumerates cycles whose smallest vertex is `start`.
  bool run(int start,
           const std::function<bool(std::span<const int>)>* visit) {
    start_ = start;
    visit_ = visit;
    restricted_distances();
    path_.assign(1, start);
    on_path_[static_cast<std::size_t>(start)] = 1;
    const bool stopped = extend(start);
    on_path_[static_cast<std::size_t>(start)] = 0;
    return stopped;
  }

 private:
  // Distances from start inside the subgraph on vertices >= start, explored
  // only as deep as a cycle of the target length can reach.
  void restricted_distances() {
    std::fill(dist_.begin(), dist_.end(), -1);
    std::vector<int> queue{start_};
    dist_[static_cast<std::size_t>(start_)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      const int dx = dist_[static_cast<std::size_t>(x)];
      if (dx >= length_ - 1) continue;
      g_.for_each_neighbor(x, [&](int y) {
        if (y > start_ && dist_[static_cast<std::size_t>(y)] < 0) {
          dist_[static_cast<std::size_t>(y)] = dx + 1;
          queue.push_back(y);
        }
      });
    }
  }

  // Returns true when the search should stop (cycle found and either no
  // visitor or the visitor asked to stop).
  bool extend(int x) {
    const int depth = static_cast<int>(path_.size()) - 1;
    if (depth == length_ - 1) {
      if (!g_.has_edge(x, start_)) return false;
      if (visit_ == nullptr) return true;
      if (path_[1] > path_.back()) return false;
      return !(*visit_)(path_);
    }
    const int remaining = length_ - depth - 1;
    bool stop = false;
    g_.for_each_neighbor(x, [&](int y) {
      if (stop || y <= start_ || on_path_[static_cast<std::size_t>(y)]) return;
      const int dy = dist_[static_cast<std::size_t>(y)];
      if (dy < 0 || dy > remaining) return;
      on_path_[static_cast<std::size_t>(y)] = 1;
      path_.push_back(y);
      stop = extend(y);
      path_.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
    });
    return stop;
  }

  const Graph& g_;
  int length_;
  int start_ = 0;
  const std::function<bool(std::span<const int>)>* visit_ = nullptr;
  std::vector<int> path_;
  std::vector<char> on_path_;
  std::vector<int> dist_;
};

}  // namespace

bool has_cycle_of_length(const Graph& g, int length) {
  if (length < 3 || length > g.order()) return false;
  FixedLengthCycleSearch search(g, length);
  for (int s = 0; s + length <= g.order(); ++s) {
    if (g.degree(s) < 2) continue;
    if (search.run(s, nullptr)) return true;
  }
  return false;
}

void enumerate_cycles(const Graph& g, int length,
                      const std::function<bool(std::span<const int>)>& visit) {
  if (length < 3 || length > g.order()) return;
  FixedLengthCycleSearch search(g, length);
  for (int s = 0; s + length <= g.order(); ++s) {
    if (g.degree(s) < 2) continue;
    if (search.run(s, &visit)) return;
  }
}

std::optional<int> odd_girth(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue(static_cast<std::size_t>(n));
  int best = kNone;
  for (int s = 0; s < n; ++s) {
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    dist[static_cast<std::size_t>(s)] = 0;
    while (head < tail) {
      const int x = queue[head++];
      const int dx = dist[static_cast<std::size_t>(x)];
      if (2 * dx + 1 >= best) break;
      g.for_each_neighbor(x, [&](int y) {
        const auto yi = static_cast<std::size_t>(y);
        if (dist[yi] < 0) {
          dist[yi] = dx + 1;
          queue[tail++] = y;
        } else if (dist[yi] == dx) {
          best = std::min(best, 2 * dx + 1);
        }
      });
    }
    for (std::size_t i = 0; i < tail; ++i) {
      dist[static_cast<std::size_t>(queue[i])] = -1;
    }
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    g.for_each_neighbor(x, [&](int y) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw std::invalid_argument("distance: vertex out of range");
  }
  const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

int component_count(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  int components = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      g.for_each_neighbor(x, [&](int y) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      });
    }
  }
  return components;
}

}  // namespace cagegen
