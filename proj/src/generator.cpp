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

#include "cagegen/generator.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "cagegen/bounds.hpp"

namespace cagegen {

namespace {

using Layers = std::vector<VertexSet>;

// layers[a] collects the endpoints of non-backtracking walks of length a from
// `start` whose first step avoids `avoid`. Walks shorter than the girth of
// the graph are paths, which is all the callers need.
void walk_layers(const Graph& graph, int start, int avoid, int max_len, Layers& layers) {
  for (int a = 0; a <= max_len; ++a) layers[static_cast<std::size_t>(a)].clear();
  layers[0].insert(start);
  struct Step {
    int v;
    int prev;
    int len;
  };
  std::vector<Step> stack{{start, avoid, 0}};
  while (!stack.empty()) {
    const Step s = stack.back();
    stack.pop_back();
    if (s.len == max_len) continue;
    graph.for_each_neighbor(s.v, [&](int y) {
      if (y == s.prev) return;
      layers[static_cast<std::size_t>(s.len) + 1].insert(y);
      stack.push_back({y, s.v, s.len + 1});
    });
  }
}

// Path lengths that must not join two vertices about to be linked: a new
// edge closes a cycle one longer than the path.
bool forbidden_path_length(int len, int g) { return len <= g - 2 || len == g; }

Layers make_layers(int n, int g) {
  return Layers(static_cast<std::size_t>(g) + 1, VertexSet(static_cast<std::size_t>(n)));
}

}  // namespace

MooreTree build_moore_tree(int k, int g) {
  const auto order = moore_bound(k, g);
  if (order > kMaxOrder) throw std::invalid_argument("Moore tree exceeds the maximum order");
  MooreTree tree;
  tree.k = k;
  tree.g = g;
  tree.t = (g - 1) / 2;
  tree.graph = Graph(static_cast<int>(order));
  tree.depth.assign(static_cast<std::size_t>(order), 0);
  std::vector<int> frontier;
  int next = 0;
  if (g % 2 == 1) {
    tree.root = next++;
    frontier.push_back(tree.root);
  } else {
    tree.root = 0;
    tree.root_edge = Edge{0, 1};
    tree.graph.add_edge(0, 1);
    next = 2;
    frontier = {0, 1};
  }
  for (int d = 1; d <= tree.t; ++d) {
    std::vector<int> layer;
    for (int parent : frontier) {
      while (tree.graph.degree(parent) < k) {
        const int child = next++;
        tree.graph.add_edge(parent, child);
        tree.depth[static_cast<std::size_t>(child)] = d;
        layer.push_back(child);
      }
    }
    frontier = std::move(layer);
  }
  return tree;
}

SearchState::SearchState(int n, int k, int g) : k_(k), g_(g) {
  const MooreTree tree = build_moore_tree(k, g);
  if (n < tree.graph.order()) {
    throw std::invalid_argument("order is below the Moore bound");
  }
  if (n > kMaxOrder) throw std::invalid_argument("order exceeds the maximum");
  graph_ = Graph(n);
  for (const auto& [u, v] : tree.graph.edges()) graph_.add_edge(u, v);
  isolated_ = VertexSet(static_cast<std::size_t>(n));
  for (int v = tree.graph.order(); v < n; ++v) isolated_.insert(v);
  forbidden_ = BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  eligible_ = compute_eligible();
}

BitMatrix SearchState::compute_eligible() const {
  const int n = order();
  BitMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  Layers layers = make_layers(n, g_);
  VertexSet blocked(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (graph_.degree(x) >= k_) continue;
    walk_layers(graph_, x, -1, g_, layers);
    blocked.clear();
    blocked.insert(x);
    for (int len = 1; len <= g_; ++len) {
      if (forbidden_path_length(len, g_)) blocked |= layers[static_cast<std::size_t>(len)];
    }
    auto row = out.row(static_cast<std::size_t>(x));
    for (int y = 0; y < n; ++y) {
      if (graph_.degree(y) < k_ && !blocked.contains(y) &&
          !forbidden_.test(static_cast<std::size_t>(x), static_cast<std::size_t>(y))) {
        bits::set(row, static_cast<std::size_t>(y));
      }
    }
  }
  return out;
}

bool SearchState::stuck() const {
  const int n = order();
  for (int v = 0; v < n; ++v) {
    const int d = graph_.degree(v);
    if (d < k_ && static_cast<std::size_t>(d) + eligible_count(v) < static_cast<std::size_t>(k_)) {
      return true;
    }
  }
  return false;
}

std::optional<Edge> SearchState::choose_branch() const {
  const int n = order();
  int best = -1;
  std::size_t best_count = 0;
  for (int v = 0; v < n; ++v) {
    if (graph_.degree(v) >= k_) continue;
    const std::size_t c = eligible_count(v);
    if (best < 0 || c < best_count) {
      best = v;
      best_count = c;
    }
  }
  if (best < 0) return std::nullopt;
  const int w = bits::first(eligible_.row(static_cast<std::size_t>(best)));
  if (w < 0) return std::nullopt;
  return Edge{best, w};
}

void SearchState::add_edge(int u, int w) {
  if (!is_eligible(u, w)) throw std::logic_error("add_edge on an ineligible pair");
  graph_.add_edge(u, w);
  isolated_.erase(u);
  isolated_.erase(w);
  const int n = order();
  eligible_.reset(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
  eligible_.reset(static_cast<std::size_t>(w), static_cast<std::size_t>(u));
  for (int x : {u, w}) {
    if (graph_.degree(x) < k_) continue;
    bits::for_each(eligible_.row(static_cast<std::size_t>(x)), [&](int y) {
      eligible_.reset(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
    });
    std::fill(eligible_.row(static_cast<std::size_t>(x)).begin(),
              eligible_.row(static_cast<std::size_t>(x)).end(), Word{0});
  }
  // Every new path runs x ... u - w ... y; block pairs whose new path length
  // is forbidden.
  thread_local Layers from_u, from_w;
  if (from_u.size() != static_cast<std::size_t>(g_) + 1 ||
      from_u[0].universe() != static_cast<std::size_t>(n)) {
    from_u = make_layers(n, g_);
    from_w = make_layers(n, g_);
  }
  walk_layers(graph_, u, w, g_ - 1, from_u);
  walk_layers(graph_, w, u, g_ - 1, from_w);
  for (int len = 1; len <= g_; ++len) {
    if (!forbidden_path_length(len, g_)) continue;
    for (int a = 0; a < len; ++a) {
      const int b = len - 1 - a;
      const VertexSet& xs = from_u[static_cast<std::size_t>(a)];
      const VertexSet& ys = from_w[static_cast<std::size_t>(b)];
      xs.for_each([&](int x) {
        auto row = eligible_.row(static_cast<std::size_t>(x));
        const auto yw = ys.words();
        for (std::size_t i = 0; i < row.size(); ++i) row[i] &= ~yw[i];
      });
      ys.for_each([&](int y) {
        auto row = eligible_.row(static_cast<std::size_t>(y));
        const auto xw = xs.words();
        for (std::size_t i = 0; i < row.size(); ++i) row[i] &= ~xw[i];
      });
    }
  }
}

void SearchState::skip_edge(int u, int w) {
  auto forbid = [&](int a, int b) {
    for (auto [x, y] : {Edge{a, b}, Edge{b, a}}) {
      forbidden_.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
      eligible_.reset(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
  };
  forbid(u, w);
  const bool u_iso = isolated_.contains(u);
  const bool w_iso = isolated_.contains(w);
  if (u_iso && w_iso) {
    isolated_.for_each([&](int a) { isolated_.for_each([&](int b) { if (a != b) forbid(a, b); }); });
  } else if (w_iso) {
    isolated_.for_each([&](int b) { forbid(u, b); });
  } else if (u_iso) {
    isolated_.for_each([&](int a) { forbid(a, w); });
  }
}

bool is_valid_target(const Graph& graph, int k, int g) {
  if (!graph.is_regular(k)) return false;
  const auto gi = girth(graph);
  if (!gi || *gi != g) return false;
  return !has_cycle_of_length(graph, g + 1);
}

std::size_t dedup_capacity_from_env(std::size_t fallback) {
  const char* raw = std::getenv("CAGEGEN_DEDUP_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

namespace {

struct SharedRun {
  int k = 0;
  int g = 0;
  bool dedup = true;
  DedupStore* store = nullptr;
  std::atomic<bool> dedup_live{true};
  std::atomic<bool> overflowed{false};
};

class Worker {
 public:
  Worker(SharedRun& run, std::uint32_t rank) : run_(run), rank_(rank) {}

  void search(const SearchState& start) {
    const auto depth = static_cast<std::size_t>(std::max<std::int64_t>(start.edge_budget(), 0)) + 1;
    if (frames_.size() < depth) frames_.resize(depth, start);
    frames_[0] = start;
    explore(0);
  }

  std::vector<Graph> found;
  GeneratorStats stats;

 private:
  void explore(std::size_t d) {
    SearchState& s = frames_[d];
    while (true) {
      ++stats.nodes;
      if (s.complete()) {
        ++stats.complete_graphs;
        if (is_valid_target(s.graph(), run_.k, run_.g)) found.push_back(s.graph());
        return;
      }
      if (s.stuck()) {
        ++stats.stuck_pruned;
        return;
      }
      const auto branch = s.choose_branch();
      if (!branch) return;
      const auto [u, w] = *branch;
      SearchState& child = frames_[d + 1];
      child = s;
      const bool fresh = s.isolated().contains(u) || s.isolated().contains(w);
      child.add_edge(u, w);
      if (keep(child, fresh)) explore(d + 1);
      s.skip_edge(u, w);
    }
  }

  bool keep(const SearchState& child, bool fresh) {
    if (child.stuck()) {
      ++stats.stuck_pruned;
      return false;
    }
    if (fresh || !run_.dedup || !run_.dedup_live.load(std::memory_order_relaxed)) return true;
    try {
      if (run_.store->insert_if_new(canon_.canonical_form(child.graph()), rank_)) return true;
    } catch (const DedupCapacityError&) {
      run_.dedup_live.store(false);
      run_.overflowed.store(true);
      return true;
    }
    ++stats.dedup_pruned;
    return false;
  }

  SharedRun& run_;
  std::uint32_t rank_;
  Canonizer canon_;
  std::vector<SearchState> frames_;
};

// Takes `depth` add/skip decisions serially and returns the surviving
// states in depth-first order (add before skip).
void split(SearchState state, int depth, std::vector<SearchState>& out) {
  while (true) {
    if (state.complete() || depth == 0) {
      out.push_back(std::move(state));
      return;
    }
    if (state.stuck()) return;
    const auto branch = state.choose_branch();
    if (!branch) return;
    SearchState child = state;
    child.add_edge(branch->first, branch->second);
    if (!child.stuck()) split(std::move(child), depth - 1, out);
    state.skip_edge(branch->first, branch->second);
    --depth;
  }
}

void accumulate(GeneratorStats& into, const GeneratorStats& from) {
  into.nodes += from.nodes;
  into.dedup_pruned += from.dedup_pruned;
  into.stuck_pruned += from.stuck_pruned;
  into.complete_graphs += from.complete_graphs;
}

}  // namespace

GenerationResult generate_all(int n, int k, int g, const GeneratorOptions& options) {
  GenerationResult result;
  if (k < 3 || g < 3) throw std::invalid_argument("need k >= 3 and g >= 3");
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("order out of range");
  if ((static_cast<std::int64_t>(n) * k) % 2 != 0) return result;
  if (n < moore_bound(k, g)) {
    result.stats.below_lower_bound = true;
    return result;
  }
  const std::int64_t bound = search_lower_bound(k, g);
  if (options.enforce_lower_bound && n < bound) {
    result.stats.below_lower_bound = true;
    result.warnings.push_back("n=" + std::to_string(n) + " is below the lower bound " +
                              std::to_string(bound) + " for k=" + std::to_string(k) +
                              ", g=" + std::to_string(g) + "; nothing to generate");
    return result;
  }

  const int workers = std::max(1, options.workers);
  int split_depth = options.split_depth;
  if (split_depth <= 0) split_depth = workers == 1 ? 0 : 6 + std::bit_width(static_cast<unsigned>(workers));

  std::vector<SearchState> tasks;
  split(SearchState(n, k, g), split_depth, tasks);
  result.stats.tasks = tasks.size();

  DedupStore store(options.dedup_capacity);
  SharedRun run;
  run.k = k;
  run.g = g;
  run.dedup = options.dedup;
  run.store = &store;

  std::vector<std::vector<Graph>> found(tasks.size());
  std::vector<GeneratorStats> task_stats(tasks.size());
  const auto task_count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) if (workers > 1)
  for (std::int64_t i = 0; i < task_count; ++i) {
    Worker worker(run, static_cast<std::uint32_t>(i));
    worker.search(tasks[static_cast<std::size_t>(i)]);
    found[static_cast<std::size_t>(i)] = std::move(worker.found);
    task_stats[static_cast<std::size_t>(i)] = worker.stats;
  }

  std::map<CanonicalForm, Graph> classes;
  Canonizer canon;
  for (auto& batch : found) {
    for (const Graph& graph : batch) {
      auto labeling = canon.canonical_labeling(graph);
      Graph relabeled = graph.relabeled(labeling);
      classes.try_emplace(canon.canonical_form(relabeled), std::move(relabeled));
    }
  }
  for (auto& [form, graph] : classes) result.graphs.push_back(std::move(graph));

  for (const auto& s : task_stats) accumulate(result.stats, s);
  result.stats.forms_stored = store.size();
  result.stats.dedup_overflowed = run.overflowed.load();
  if (result.stats.dedup_overflowed) {
    result.warnings.push_back("dedup store reached its capacity of " +
                              std::to_string(store.capacity()) +
                              " forms; continued without isomorphism pruning");
  }
  return result;
}

std::size_t generate_all(int n, int k, int g, const std::function<void(const Graph&)>& emit,
                         const GeneratorOptions& options) {
  const GenerationResult result = generate_all(n, k, g, options);
  for (const Graph& graph : result.graphs) emit(graph);
  return result.graphs.size();
}

}  // namespace cagegen
