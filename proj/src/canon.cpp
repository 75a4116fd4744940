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

#include "cagegen/canon.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>

namespace cagegen {

namespace {

constexpr std::uint64_t kTraceSeed = 0x6a09e667f3bcc908ULL;

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 31);
}

struct Partition {
  std::vector<int> lab;        // vertices in cell order
  std::vector<int> cell_of;    // vertex -> start position of its cell
  std::vector<int> cell_size;  // valid at cell start positions
  int cells = 0;

  void resize(int m) {
    lab.resize(static_cast<std::size_t>(m));
    cell_of.resize(static_cast<std::size_t>(m));
    cell_size.resize(static_cast<std::size_t>(m));
  }
  bool discrete() const { return cells == static_cast<int>(lab.size()); }
  int first_nonsingleton() const {
    const int m = static_cast<int>(lab.size());
    for (int p = 0; p < m; p += cell_size[static_cast<std::size_t>(p)]) {
      if (cell_size[static_cast<std::size_t>(p)] > 1) return p;
    }
    return -1;
  }
};

struct UnionFind {
  std::vector<int> parent;
  void reset(int m) {
    parent.resize(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

int compare_words(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int compare_traces(const std::vector<std::uint64_t>& a, std::size_t alen,
                   const std::vector<std::uint64_t>& b, std::size_t blen) {
  const std::size_t len = std::min(alen, blen);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (alen == blen) return 0;
  return alen < blen ? -1 : 1;
}

}  // namespace

struct Canonizer::Impl {
  // Core graph: non-isolated vertices renumbered 0..m-1.
  int n = 0;
  int m = 0;
  std::size_t words = 0;
  std::vector<int> core_to_orig;
  std::vector<int> nbr_start;
  std::vector<int> nbr;

  // Refinement scratch.
  std::vector<int> cnt;
  std::vector<int> touched;
  std::vector<int> hit_cells;
  std::vector<char> hit_mark;
  std::vector<char> in_queue;
  std::vector<int> queue;
  std::vector<int> fragments;

  std::vector<Partition> stack;
  std::vector<std::uint64_t> traces;
  std::vector<int> path;
  std::vector<int> pos;
  std::vector<Word> rows;

  bool have_first = false;
  std::vector<int> first_lab, best_lab;
  std::vector<Word> first_rows, best_rows;
  std::vector<std::uint64_t> first_traces, best_traces;
  std::vector<int> first_path, best_path;

  std::vector<std::vector<int>> gens;
  UnionFind uf;

  void load(const Graph& g) {
    n = g.order();
    core_to_orig.clear();
    std::vector<int> orig_to_core(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) > 0) {
        orig_to_core[static_cast<std::size_t>(v)] =
            static_cast<int>(core_to_orig.size());
        core_to_orig.push_back(v);
      }
    }
    m = static_cast<int>(core_to_orig.size());
    words = words_for(static_cast<std::size_t>(m));
    nbr_start.assign(static_cast<std::size_t>(m) + 1, 0);
    nbr.clear();
    for (int c = 0; c < m; ++c) {
      g.for_each_neighbor(core_to_orig[static_cast<std::size_t>(c)], [&](int w) {
        nbr.push_back(orig_to_core[static_cast<std::size_t>(w)]);
      });
      nbr_start[static_cast<std::size_t>(c) + 1] = static_cast<int>(nbr.size());
    }
    const auto mm = static_cast<std::size_t>(m);
    cnt.assign(mm, 0);
    hit_mark.assign(mm, 0);
    in_queue.assign(mm, 0);
    pos.assign(mm, 0);
    rows.assign(mm * words, 0);
    if (stack.size() < mm + 1) stack.resize(mm + 1);
    traces.assign(mm + 1, 0);
    path.assign(mm + 1, -1);
    have_first = false;
    gens.clear();
  }

  // Equitable refinement of p starting from the splitter cells already in
  // `queue`. Returns a label-invariant hash of the splitting sequence.
  std::uint64_t refine(Partition& p, std::uint64_t h) {
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const int w_start = queue[head++];
      in_queue[static_cast<std::size_t>(w_start)] = 0;
      const int w_size = p.cell_size[static_cast<std::size_t>(w_start)];
      touched.clear();
      for (int q = w_start; q < w_start + w_size; ++q) {
        const int w = p.lab[static_cast<std::size_t>(q)];
        for (int e = nbr_start[static_cast<std::size_t>(w)];
             e < nbr_start[static_cast<std::size_t>(w) + 1]; ++e) {
          const int x = nbr[static_cast<std::size_t>(e)];
          if (cnt[static_cast<std::size_t>(x)]++ == 0) touched.push_back(x);
        }
      }
      hit_cells.clear();
      for (int x : touched) {
        const int c = p.cell_of[static_cast<std::size_t>(x)];
        if (p.cell_size[static_cast<std::size_t>(c)] > 1 &&
            !hit_mark[static_cast<std::size_t>(c)]) {
          hit_mark[static_cast<std::size_t>(c)] = 1;
          hit_cells.push_back(c);
        }
      }
      std::sort(hit_cells.begin(), hit_cells.end());
      for (int c : hit_cells) {
        hit_mark[static_cast<std::size_t>(c)] = 0;
        const int size = p.cell_size[static_cast<std::size_t>(c)];
        auto first = p.lab.begin() + c;
        std::sort(first, first + size, [&](int a, int b) {
          return cnt[static_cast<std::size_t>(a)] < cnt[static_cast<std::size_t>(b)];
        });
        if (cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(c)])] ==
            cnt[static_cast<std::size_t>(
                p.lab[static_cast<std::size_t>(c + size - 1)])]) {
          continue;
        }
        h = mix(h, static_cast<std::uint64_t>(c));
        fragments.clear();
        int start = c;
        for (int q = c + 1; q <= c + size; ++q) {
          if (q == c + size ||
              cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(q)])] !=
                  cnt[static_cast<std::size_t>(
                      p.lab[static_cast<std::size_t>(start)])]) {
            p.cell_size[static_cast<std::size_t>(start)] = q - start;
            for (int r = start; r < q; ++r) {
              p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(r)])] =
                  start;
            }
            h = mix(h, (static_cast<std::uint64_t>(cnt[static_cast<std::size_t>(
                            p.lab[static_cast<std::size_t>(start)])])
                        << 32) |
                           static_cast<std::uint64_t>(q - start));
            fragments.push_back(start);
            start = q;
          }
        }
        p.cells += static_cast<int>(fragments.size()) - 1;
        if (in_queue[static_cast<std::size_t>(c)]) {
          for (std::size_t f = 1; f < fragments.size(); ++f) {
            in_queue[static_cast<std::size_t>(fragments[f])] = 1;
            queue.push_back(fragments[f]);
          }
        } else {
          std::size_t largest = 0;
          for (std::size_t f = 1; f < fragments.size(); ++f) {
            if (p.cell_size[static_cast<std::size_t>(fragments[f])] >
                p.cell_size[static_cast<std::size_t>(fragments[largest])]) {
              largest = f;
            }
          }
          for (std::size_t f = 0; f < fragments.size(); ++f) {
            if (f == largest) continue;
            in_queue[static_cast<std::size_t>(fragments[f])] = 1;
            queue.push_back(fragments[f]);
          }
        }
      }
      for (int x : touched) cnt[static_cast<std::size_t>(x)] = 0;
    }
    for (std::size_t i = head; i < queue.size(); ++i) {
      in_queue[static_cast<std::size_t>(queue[i])] = 0;
    }
    queue.clear();
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

  std::uint64_t initial_partition(Partition& p) {
    p.resize(m);
    std::vector<int> degree(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
      degree[static_cast<std::size_t>(v)] =
          nbr_start[static_cast<std::size_t>(v) + 1] -
          nbr_start[static_cast<std::size_t>(v)];
      p.lab[static_cast<std::size_t>(v)] = v;
    }
    std::sort(p.lab.begin(), p.lab.end(), [&](int a, int b) {
      return degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)];
    });
    std::uint64_t h = mix(mix(kTraceSeed, static_cast<std::uint64_t>(n)),
                          static_cast<std::uint64_t>(m));
    p.cells = 0;
    int start = 0;
    for (int q = 1; q <= m; ++q) {
      if (q == m || degree[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(q)])] !=
                        degree[static_cast<std::size_t>(
                            p.lab[static_cast<std::size_t>(start)])]) {
        p.cell_size[static_cast<std::size_t>(start)] = q - start;
        for (int r = start; r < q; ++r) {
          p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(r)])] = start;
        }
        h = mix(h, (static_cast<std::uint64_t>(
                        degree[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(start)])])
                    << 32) |
                       static_cast<std::uint64_t>(q - start));
        ++p.cells;
        queue.push_back(start);
        in_queue[static_cast<std::size_t>(start)] = 1;
        start = q;
      }
    }
    return refine(p, h);
  }

  // Copies stack[level] into stack[level+1], individualises v and refines.
  std::uint64_t individualize(int level, int v) {
    Partition& p = stack[static_cast<std::size_t>(level) + 1];
    p = stack[static_cast<std::size_t>(level)];
    const int c = p.cell_of[static_cast<std::size_t>(v)];
    const int size = p.cell_size[static_cast<std::size_t>(c)];
    auto it = std::find(p.lab.begin() + c, p.lab.begin() + c + size, v);
    std::iter_swap(p.lab.begin() + c, it);
    p.cell_size[static_cast<std::size_t>(c)] = 1;
    p.cell_size[static_cast<std::size_t>(c) + 1] = size - 1;
    for (int r = c + 1; r < c + size; ++r) {
      p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(r)])] = c + 1;
    }
    ++p.cells;
    queue.push_back(c);
    in_queue[static_cast<std::size_t>(c)] = 1;
    const std::uint64_t h =
        mix(mix(kTraceSeed, static_cast<std::uint64_t>(c)),
            static_cast<std::uint64_t>(size));
    return refine(p, h);
  }

  void leaf_rows(const Partition& p) {
    for (int i = 0; i < m; ++i) {
      pos[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = i;
    }
    std::fill(rows.begin(), rows.end(), 0);
    for (int i = 0; i < m; ++i) {
      const int v = p.lab[static_cast<std::size_t>(i)];
      std::span<Word> row(rows.data() + static_cast<std::size_t>(i) * words, words);
      for (int e = nbr_start[static_cast<std::size_t>(v)];
           e < nbr_start[static_cast<std::size_t>(v) + 1]; ++e) {
        bits::set(row, static_cast<std::size_t>(
                           pos[static_cast<std::size_t>(nbr[static_cast<std::size_t>(e)])]));
      }
    }
  }

  // gamma with gamma(from_lab[i]) = to_lab[i].
  void add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> gamma(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      gamma[static_cast<std::size_t>(from_lab[static_cast<std::size_t>(i)])] =
          to_lab[static_cast<std::size_t>(i)];
    }
    bool identity = true;
    for (int i = 0; i < m && identity; ++i) {
      identity = gamma[static_cast<std::size_t>(i)] == i;
    }
    if (!identity) gens.push_back(std::move(gamma));
  }

  // Orbits on the core under generators fixing path[0..level) pointwise.
  void stabilizer_orbits(int level) {
    uf.reset(m);
    for (const auto& gamma : gens) {
      bool fixes = true;
      for (int l = 0; l < level && fixes; ++l) {
        const int v = path[static_cast<std::size_t>(l)];
        fixes = gamma[static_cast<std::size_t>(v)] == v;
      }
      if (!fixes) continue;
      for (int v = 0; v < m; ++v) uf.unite(v, gamma[static_cast<std::size_t>(v)]);
    }
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b,
                           int len) {
    int i = 0;
    while (i < len && a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]) ++i;
    return i;
  }

  // ---- canonical search ---------------------------------------------------

  int leaf(int level) {
    const Partition& p = stack[static_cast<std::size_t>(level)];
    leaf_rows(p);
    const auto tlen = static_cast<std::size_t>(level) + 1;
    if (!have_first) {
      have_first = true;
      first_lab = best_lab = p.lab;
      first_rows = best_rows = rows;
      first_traces.assign(traces.begin(), traces.begin() + static_cast<long>(tlen));
      best_traces = first_traces;
      first_path.assign(path.begin(), path.begin() + level);
      best_path = first_path;
      return level - 1;
    }
    if (compare_traces(traces, tlen, first_traces, first_traces.size()) == 0 &&
        rows == first_rows) {
      add_generator(first_lab, p.lab);
      return common_prefix(path, first_path, std::min<int>(level, static_cast<int>(first_path.size())));
    }
    int c = compare_traces(traces, tlen, best_traces, best_traces.size());
    if (c == 0) c = compare_words(rows, best_rows);
    if (c < 0) {
      best_lab = p.lab;
      best_rows = rows;
      best_traces.assign(traces.begin(), traces.begin() + static_cast<long>(tlen));
      best_path.assign(path.begin(), path.begin() + level);
      return level - 1;
    }
    if (c == 0) {
      add_generator(best_lab, p.lab);
      return common_prefix(path, best_path, std::min<int>(level, static_cast<int>(best_path.size())));
    }
    return level - 1;
  }

  int explore(int level) {
    const auto tlen = static_cast<std::size_t>(level) + 1;
    if (have_first) {
      const bool eq_first =
          tlen <= first_traces.size() &&
          std::equal(traces.begin(), traces.begin() + static_cast<long>(tlen),
                     first_traces.begin());
      if (!eq_first) {
        const std::size_t len = std::min(tlen, best_traces.size());
        if (compare_traces(traces, len, best_traces, len) > 0) return level - 1;
      }
    }
    if (stack[static_cast<std::size_t>(level)].discrete()) return leaf(level);

    const Partition& p = stack[static_cast<std::size_t>(level)];
    const int target = p.first_nonsingleton();
    std::vector<int> cell(p.lab.begin() + target,
                          p.lab.begin() + target + p.cell_size[static_cast<std::size_t>(target)]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    std::size_t gens_seen = std::numeric_limits<std::size_t>::max();
    for (int w : cell) {
      if (!explored.empty()) {
        if (gens_seen != gens.size()) {
          stabilizer_orbits(level);
          gens_seen = gens.size();
        }
        const int rw = uf.find(w);
        bool equivalent = false;
        for (int e : explored) {
          if (uf.find(e) == rw) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      path[static_cast<std::size_t>(level)] = w;
      traces[static_cast<std::size_t>(level) + 1] = individualize(level, w);
      const int back = explore(level + 1);
      explored.push_back(w);
      gens_seen = std::numeric_limits<std::size_t>::max();
      if (back < level) return back;
    }
    return level - 1;
  }

  void canonical_search(const Graph& g) {
    load(g);
    if (m == 0) {
      best_lab.clear();
      best_rows.clear();
      return;
    }
    traces[0] = initial_partition(stack[0]);
    explore(0);
  }

  CanonicalForm form() const {
    CanonicalForm f;
    std::string& b = f.bytes;
    auto put16 = [&](int v) {
      b.push_back(static_cast<char>(v & 0xff));
      b.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put16(n);
    put16(m);
    const std::size_t nbits =
        static_cast<std::size_t>(m) * static_cast<std::size_t>(m > 0 ? m - 1 : 0) / 2;
    const std::size_t offset = b.size();
    b.resize(offset + (nbits + 7) / 8, 0);
    std::size_t bit = 0;
    for (int i = 0; i < m; ++i) {
      std::span<const Word> row(best_rows.data() + static_cast<std::size_t>(i) * words,
                                words);
      for (int j = i + 1; j < m; ++j, ++bit) {
        if (bits::test(row, static_cast<std::size_t>(j))) {
          b[offset + bit / 8] = static_cast<char>(
              static_cast<unsigned char>(b[offset + bit / 8]) | (1U << (bit % 8)));
        }
      }
    }
    return f;
  }

  // ---- automorphism group -------------------------------------------------

  // Searches the subtree below stack[level] (whose path prefix is fixed) for
  // a leaf whose relabelled graph equals the first leaf.
  bool find_equivalent(int level) {
    const auto tlen = static_cast<std::size_t>(level) + 1;
    if (tlen > first_traces.size() ||
        traces[static_cast<std::size_t>(level)] != first_traces[tlen - 1]) {
      return false;
    }
    const Partition& p = stack[static_cast<std::size_t>(level)];
    if (p.discrete()) {
      leaf_rows(p);
      if (tlen != first_traces.size() || rows != first_rows) return false;
      add_generator(first_lab, p.lab);
      return true;
    }
    const int target = p.first_nonsingleton();
    std::vector<int> cell(p.lab.begin() + target,
                          p.lab.begin() + target + p.cell_size[static_cast<std::size_t>(target)]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> failed;
    for (int w : cell) {
      if (!failed.empty()) {
        stabilizer_orbits(level);
        const int rw = uf.find(w);
        if (std::any_of(failed.begin(), failed.end(),
                        [&](int f) { return uf.find(f) == rw; })) {
          continue;
        }
      }
      path[static_cast<std::size_t>(level)] = w;
      traces[static_cast<std::size_t>(level) + 1] = individualize(level, w);
      if (find_equivalent(level + 1)) return true;
      failed.push_back(w);
    }
    return false;
  }

  AutomorphismInfo automorphism_group(const Graph& g) {
    load(g);
    AutomorphismInfo info;
    std::vector<int> orbit_rep(static_cast<std::size_t>(n));
    std::iota(orbit_rep.begin(), orbit_rep.end(), 0);
    std::uint64_t order = 1;
    auto checked_mul = [&](std::uint64_t f) {
      if (f != 0 && order > std::numeric_limits<std::uint64_t>::max() / f) {
        throw std::overflow_error("automorphism group order exceeds 64 bits");
      }
      order *= f;
    };

    if (m > 0) {
      // First path: always individualise the smallest vertex of the target.
      traces[0] = initial_partition(stack[0]);
      int depth = 0;
      std::vector<int> chosen_path;
      while (!stack[static_cast<std::size_t>(depth)].discrete()) {
        const Partition& p = stack[static_cast<std::size_t>(depth)];
        const int t = p.first_nonsingleton();
        const int v = *std::min_element(
            p.lab.begin() + t, p.lab.begin() + t + p.cell_size[static_cast<std::size_t>(t)]);
        path[static_cast<std::size_t>(depth)] = v;
        chosen_path.push_back(v);
        traces[static_cast<std::size_t>(depth) + 1] = individualize(depth, v);
        ++depth;
      }
      first_lab = stack[static_cast<std::size_t>(depth)].lab;
      leaf_rows(stack[static_cast<std::size_t>(depth)]);
      first_rows = rows;
      first_traces.assign(traces.begin(), traces.begin() + depth + 1);
      std::vector<Partition> first_nodes(stack.begin(), stack.begin() + depth + 1);

      for (int level = depth - 1; level >= 0; --level) {
        const Partition& p = first_nodes[static_cast<std::size_t>(level)];
        const int t = p.first_nonsingleton();
        std::vector<int> cell(p.lab.begin() + t,
                              p.lab.begin() + t + p.cell_size[static_cast<std::size_t>(t)]);
        std::sort(cell.begin(), cell.end());
        const int v = chosen_path[static_cast<std::size_t>(level)];
        for (int w : cell) {
          std::copy(chosen_path.begin(), chosen_path.begin() + level, path.begin());
          stabilizer_orbits(level);
          if (uf.find(w) == uf.find(v)) continue;
          stack[static_cast<std::size_t>(level)] = p;
          path[static_cast<std::size_t>(level)] = w;
          traces[static_cast<std::size_t>(level) + 1] = individualize(level, w);
          find_equivalent(level + 1);
        }
        std::copy(chosen_path.begin(), chosen_path.begin() + level, path.begin());
        stabilizer_orbits(level);
        const int rv = uf.find(v);
        checked_mul(static_cast<std::uint64_t>(
            std::count_if(cell.begin(), cell.end(), [&](int w) { return uf.find(w) == rv; })));
      }

      uf.reset(m);
      for (const auto& gamma : gens) {
        for (int v = 0; v < m; ++v) uf.unite(v, gamma[static_cast<std::size_t>(v)]);
      }
      for (int v = 0; v < m; ++v) {
        orbit_rep[static_cast<std::size_t>(core_to_orig[static_cast<std::size_t>(v)])] =
            core_to_orig[static_cast<std::size_t>(uf.find(v))];
      }
      for (const auto& gamma : gens) {
        std::vector<int> full(static_cast<std::size_t>(n));
        std::iota(full.begin(), full.end(), 0);
        for (int v = 0; v < m; ++v) {
          full[static_cast<std::size_t>(core_to_orig[static_cast<std::size_t>(v)])] =
              core_to_orig[static_cast<std::size_t>(gamma[static_cast<std::size_t>(v)])];
        }
        info.generators.push_back(std::move(full));
      }
    }

    // Isolated vertices form one orbit under the full symmetric group.
    std::vector<int> isolated;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 0) isolated.push_back(v);
    }
    for (std::size_t i = 0; i < isolated.size(); ++i) {
      orbit_rep[static_cast<std::size_t>(isolated[i])] = isolated.front();
      checked_mul(static_cast<std::uint64_t>(i + 1));
      if (i + 1 < isolated.size()) {
        std::vector<int> swap(static_cast<std::size_t>(n));
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[static_cast<std::size_t>(isolated[i])],
                  swap[static_cast<std::size_t>(isolated[i + 1])]);
        info.generators.push_back(std::move(swap));
      }
    }
    info.orbit_representative = std::move(orbit_rep);
    info.group_order = order;
    return info;
  }
};

Canonizer::Canonizer() : impl_(std::make_unique<Impl>()) {}
Canonizer::~Canonizer() = default;
Canonizer::Canonizer(Canonizer&&) noexcept = default;
Canonizer& Canonizer::operator=(Canonizer&&) noexcept = default;

CanonicalForm Canonizer::canonical_form(const Graph& g) {
  impl_->canonical_search(g);
  return impl_->form();
}

std::vector<int> Canonizer::canonical_labeling(const Graph& g) {
  impl_->canonical_search(g);
  std::vector<int> labeling(static_cast<std::size_t>(g.order()), -1);
  const int m = impl_->m;
  for (int i = 0; i < m; ++i) {
    labeling[static_cast<std::size_t>(
        impl_->core_to_orig[static_cast<std::size_t>(impl_->best_lab[static_cast<std::size_t>(i)])])] = i;
  }
  int next = m;
  for (auto& l : labeling) {
    if (l < 0) l = next++;
  }
  return labeling;
}

AutomorphismInfo Canonizer::automorphisms(const Graph& g) {
  return impl_->automorphism_group(g);
}

namespace {
Canonizer& thread_canonizer() {
  thread_local Canonizer canonizer;
  return canonizer;
}
}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  return thread_canonizer().canonical_form(g);
}

std::vector<int> canonical_labeling(const Graph& g) {
  return thread_canonizer().canonical_labeling(g);
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

AutomorphismInfo automorphisms(const Graph& g) {
  return thread_canonizer().automorphisms(g);
}

int AutomorphismInfo::orbit_count() const {
  int count = 0;
  for (std::size_t v = 0; v < orbit_representative.size(); ++v) {
    if (orbit_representative[v] == static_cast<int>(v)) ++count;
  }
  return count;
}

std::vector<std::vector<int>> AutomorphismInfo::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<int> index(orbit_representative.size(), -1);
  for (std::size_t v = 0; v < orbit_representative.size(); ++v) {
    const auto rep = static_cast<std::size_t>(orbit_representative[v]);
    if (index[rep] < 0) {
      index[rep] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(index[rep])].push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g) {
  return automorphisms(g).orbits();
}

DedupStore::DedupStore(std::size_t capacity) : capacity_(capacity) {}

bool DedupStore::insert_if_new(const CanonicalForm& form, std::uint32_t rank) {
  return insert_if_new(CanonicalForm(form), rank);
}

bool DedupStore::insert_if_new(CanonicalForm&& form, std::uint32_t rank) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = seen_.find(form);
  if (it != seen_.end()) {
    if (it->second <= rank) return false;
    it->second = rank;
    return true;
  }
  if (seen_.size() >= capacity_) {
    throw DedupCapacityError("dedup store capacity of " +
                             std::to_string(capacity_) + " forms exhausted");
  }
  seen_.emplace(std::move(form), rank);
  return true;
}

std::size_t DedupStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return seen_.size();
}

}  // namespace cagegen
