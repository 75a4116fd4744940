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

#ifndef CAGEGEN_GRAPH6_HPP_
#define CAGEGEN_GRAPH6_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cagegen/graph.hpp"

namespace cagegen {

// Malformed graph6 input. offset() is the zero-based byte position of the
// first offending byte within the line.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Encodes g as one graph6 line without the trailing newline.
std::string encode_graph6(const Graph& g);

// Decodes a single graph6 line. An optional ">>graph6<<" header and a
// trailing "\n" or "\r\n" are accepted.
Graph decode_graph6(std::string_view line);

// One graph per non-empty line; throws Graph6Error with the offending line
// number folded into the message.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6(std::ostream& out, const Graph& g);

}  // namespace cagegen

#endif  // CAGEGEN_GRAPH6_HPP_
