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

#ifndef CAGEGEN_FILTER_HPP_
#define CAGEGEN_FILTER_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cagegen/graph.hpp"

namespace cagegen {

struct FilterOptions {
  int k = 3;
  int g = 3;
  // Also require this odd girth (infinity cannot be requested).
  std::optional<int> odd_girth;
  // Write a verdict with its reason for every input graph.
  bool verbose = false;
};

struct FilterVerdict {
  bool pass = false;
  std::string reason;
};

// The backtracking cycle search and the double-cover test gave different
// answers. Never expected; signals a bug in one of them.
class VerifierDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Checks one graph with both verifiers.
FilterVerdict verify_target(const Graph& graph, const FilterOptions& options);

struct FilterReport {
  std::size_t read = 0;
  std::size_t passed = 0;
  std::size_t malformed = 0;
};

// Reads graph6 lines from `in`, writes the passing ones to `out` and
// warnings or verdicts to `log`. Malformed lines are skipped.
FilterReport run_filter(std::istream& in, std::ostream& out, std::ostream& log,
                        const FilterOptions& options);

}  // namespace cagegen

#endif  // CAGEGEN_FILTER_HPP_
