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

#include "cagegen/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cagegen {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("bound overflows 64 bits");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bound overflows 64 bits");
  return r;
}

std::int64_t power(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

void check_domain(int k, int g) {
  if (k < 3) throw std::invalid_argument("degree k must be at least 3");
  if (g < 3) throw std::invalid_argument("girth g must be at least 3");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

std::int64_t moore_bound(int k, int g) {
  check_domain(k, g);
  if (g % 2 == 1) {
    return (mul(k, power(k - 1, (g - 1) / 2)) - 2) / (k - 2);
  }
  return (mul(2, power(k - 1, g / 2)) - 2) / (k - 2);
}

std::int64_t prop1_lower_bound(int k, int g) {
  check_domain(k, g);
  if (g % 2 == 0) throw std::domain_error("prop1_lower_bound needs odd girth");
  const int t = (g - 1) / 2;
  return add(moore_bound(k, g), mul(mul(k - 2, k), power(k - 1, t - 1)));
}

bool prop2_divisibility_holds(int k, int t) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  const std::int64_t d = 4 * static_cast<std::int64_t>(t) + 2;
  const std::int64_t p1 = prop1_lower_bound(k, 2 * t + 1) % d;
  const std::int64_t f = mul(k, power(k - 1, t - 1)) % d;
  return (p1 * f) % d == 0;
}

std::int64_t horizontal_edge_cap(int k, int t) {
  if (k < 3) throw std::invalid_argument("degree k must be at least 3");
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  return mul(k, power(k - 1, t - 1)) / 2;
}

BoundsReport refined_lower_bound(int k, int g) {
  check_domain(k, g);
  BoundsReport r;
  r.k = k;
  r.g = g;
  r.moore = moore_bound(k, g);
  r.notes.push_back("moore: M(k,g), vertex-rooted for odd g, edge-rooted for even g");
  std::int64_t best = r.moore;
  if (g % 2 == 1) {
    const int t = (g - 1) / 2;
    r.prop1 = prop1_lower_bound(k, g);
    r.prop2_divisible = prop2_divisibility_holds(k, t);
    r.cover_bound = ceil_div(moore_bound(k, g + 3), 2);
    r.notes.push_back("prop1: M(k,2t+1) + (k-2)k(k-1)^(t-1), horizontal-edge counting");
    if (*r.prop2_divisible) {
      const std::int64_t cycles =
          mul(*r.prop1, mul(k, power(k - 1, t - 1))) / (2 * (2 * t + 1));
      r.notes.push_back("prop2: 4t+2 divides prop1*k(k-1)^(t-1); at equality r = " +
                        std::to_string(cycles) + " cycles of length 2t+1");
    } else {
      r.notes.push_back("prop2: 4t+2 does not divide prop1*k(k-1)^(t-1), so prop1 is not attained");
    }
    r.notes.push_back("cover_bound: ceil(M(k,g+3)/2), the double cover has girth >= g+3");
    best = std::max({best, *r.prop1 + (*r.prop2_divisible ? 0 : 1), *r.cover_bound});
  } else {
    r.notes.push_back("even girth: only the Moore bound applies");
  }
  if ((best * k) % 2 != 0) ++best;
  r.parity_adjusted_final = best;
  r.notes.push_back("final: maximum of the above, raised until n*k is even");
  return r;
}

std::int64_t search_lower_bound(int k, int g) {
  return refined_lower_bound(k, g).parity_adjusted_final;
}

MooreTreeAudit audit_moore_trees(const Graph& graph, int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("audit needs odd girth g >= 3");
  const int t = (g - 1) / 2;
  const int n = graph.order();
  MooreTreeAudit audit;
  std::vector<int> depth(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  std::vector<int> horizontal(static_cast<std::size_t>(n));
  std::vector<int> leaf_hits(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    std::fill(horizontal.begin(), horizontal.end(), 0);
    std::fill(leaf_hits.begin(), leaf_hits.end(), 0);
    queue.assign(1, root);
    depth[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      if (depth[static_cast<std::size_t>(x)] == t) continue;
      graph.for_each_neighbor(x, [&](int y) {
        if (y == parent[static_cast<std::size_t>(x)]) return;
        if (depth[static_cast<std::size_t>(y)] >= 0) {
          audit.balls_are_trees = false;
          return;
        }
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      });
    }
    std::int64_t edges = 0;
    for (int x : queue) {
      if (depth[static_cast<std::size_t>(x)] != t) continue;
      graph.for_each_neighbor(x, [&](int y) {
        const int dy = depth[static_cast<std::size_t>(y)];
        if (dy == t) {
          ++horizontal[static_cast<std::size_t>(x)];
          if (x < y) ++edges;
        } else if (dy < 0) {
          ++leaf_hits[static_cast<std::size_t>(y)];
        }
      });
    }
    for (int v = 0; v < n; ++v) {
      if (horizontal[static_cast<std::size_t>(v)] > 1) audit.leaf_on_two_horizontal = true;
      if (leaf_hits[static_cast<std::size_t>(v)] > 1) audit.shared_outer_neighbor = true;
    }
    if (edges > audit.max_horizontal_edges) {
      audit.max_horizontal_edges = edges;
      audit.worst_root = root;
    }
  }
  return audit;
}

}  // namespace cagegen
