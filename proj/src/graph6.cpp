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

#include "cagegen/graph6.hpp"

#include <istream>
#include <ostream>

namespace cagegen {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  }
}

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " +
                         std::to_string(offset)),
      offset_(offset) {}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::string out;
  append_size(out, n);
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) |
            (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

Graph decode_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  auto sextet = [&](std::size_t pos) -> unsigned {
    if (pos >= line.size()) throw Graph6Error("truncated input", pos);
    const auto c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) {
      throw Graph6Error("invalid character " + std::to_string(c), pos);
    }
    return c - 63U;
  };

  std::size_t pos = base;
  std::size_t n = 0;
  if (pos >= line.size()) throw Graph6Error("empty input", pos);
  if (line[pos] != '~') {
    n = sextet(pos++);
  } else if (pos + 1 < line.size() && line[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
  }
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw Graph6Error("order " + std::to_string(n) + " exceeds limit", base);
  }

  Graph g(static_cast<int>(n));
  const std::size_t total_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t data_bytes = (total_bits + 5) / 6;
  if (line.size() - pos > data_bytes) {
    throw Graph6Error("trailing data", pos + data_bytes);
  }
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t byte = pos + bit / 6;
      const unsigned value = sextet(byte);
      if ((value >> (5 - bit % 6)) & 1U) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  // Padding bytes past the last bit are still validated by sextet().
  if (data_bytes > 0) sextet(pos + data_bytes - 1);
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what(),
                        e.offset());
    }
  }
  return out;
}

void write_graph6(std::ostream& out, const Graph& g) {
  out << encode_graph6(g) << '\n';
}

}  // namespace cagegen
