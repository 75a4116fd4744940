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

#ifndef CAGEGEN_CANON_HPP_
#define CAGEGEN_CANON_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cagegen/graph.hpp"

namespace cagegen {

// Opaque byte string naming an isomorphism class: the packed upper triangle
// of the canonically relabelled adjacency matrix, prefixed by the order.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    return std::hash<std::string>{}(f.bytes);
  }
};

struct AutomorphismInfo {
  // Generators of the full automorphism group, as images v -> perm[v].
  std::vector<std::vector<int>> generators;
  // Smallest vertex of each vertex's orbit.
  std::vector<int> orbit_representative;
  // Group order; throws std::overflow_error from automorphisms() when it
  // does not fit.
  std::uint64_t group_order = 1;

  int orbit_count() const;
  std::vector<std::vector<int>> orbits() const;
};

// Reusable individualisation-refinement engine. Holds scratch buffers, so
// one instance per thread.
class Canonizer {
 public:
  Canonizer();
  ~Canonizer();
  Canonizer(Canonizer&&) noexcept;
  Canonizer& operator=(Canonizer&&) noexcept;

  CanonicalForm canonical_form(const Graph& g);
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> canonical_labeling(const Graph& g);
  AutomorphismInfo automorphisms(const Graph& g);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CanonicalForm canonical_form(const Graph& g);
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);
AutomorphismInfo automorphisms(const Graph& g);
std::vector<std::vector<int>> vertex_orbits(const Graph& g);

inline constexpr std::size_t kDefaultDedupCapacity = std::size_t{1} << 26;

class DedupCapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Set of canonical forms seen during one generation run. Each form remembers
// the lowest rank that inserted it; insert_if_new() reports a duplicate only
// when the form was recorded at a rank <= the caller's. Single-worker runs
// use rank 0 throughout, which reduces this to plain insert-if-absent.
class DedupStore {
 public:
  explicit DedupStore(std::size_t capacity = kDefaultDedupCapacity);

  // True iff the caller should continue with this form. Throws
  // DedupCapacityError when a new form would exceed the capacity.
  bool insert_if_new(const CanonicalForm& form, std::uint32_t rank = 0);
  bool insert_if_new(CanonicalForm&& form, std::uint32_t rank = 0);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  mutable std::mutex mu_;
  std::unordered_map<CanonicalForm, std::uint32_t, CanonicalFormHash> seen_;
};

}  // namespace cagegen

#endif  // CAGEGEN_CANON_HPP_
