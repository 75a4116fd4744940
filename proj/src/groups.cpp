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

#include "cagegen/groups.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

namespace cagegen {

Group Group::from_table(std::string name, std::vector<std::vector<int>> table) {
  const int m = static_cast<int>(table.size());
  if (m == 0) throw GroupLawError("closure", "empty table");
  for (int a = 0; a < m; ++a) {
    const auto& row = table[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != m) {
      throw GroupLawError("closure", "row " + std::to_string(a) + " has the wrong length");
    }
    for (int x : row) {
      if (x < 0 || x >= m) {
        throw GroupLawError("closure", "entry " + std::to_string(x) + " out of range");
      }
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < m; ++b) {
      auto& s = seen[static_cast<std::size_t>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
      if (s) throw GroupLawError("latin square", "row " + std::to_string(a) + " repeats an entry");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < m; ++b) {
      auto& s = seen[static_cast<std::size_t>(table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])];
      if (s) throw GroupLawError("latin square", "column " + std::to_string(a) + " repeats an entry");
      s = 1;
    }
  }
  Group g;
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  g.identity_ = -1;
  for (int e = 0; e < m && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) ok = g.op(e, a) == a && g.op(a, e) == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw GroupLawError("identity", "no two-sided identity element");
  g.inverse_.assign(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (g.op(a, b) == g.identity_) {
        if (g.op(b, a) != g.identity_) {
          throw GroupLawError("inverse", "element " + std::to_string(a) + " has no two-sided inverse");
        }
        g.inverse_[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int ab = g.op(a, b);
      for (int c = 0; c < m; ++c) {
        if (g.op(ab, c) != g.op(a, g.op(b, c))) {
          throw GroupLawError("associativity", "fails for (" + std::to_string(a) + ", " +
                                                   std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  return g;
}

int Group::element_order(int a) const {
  int order = 1;
  for (int x = a; x != identity_; x = op(x, a)) ++order;
  return order;
}

bool Group::is_abelian() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

Group make_cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
  }
  return Group::from_table("Z" + std::to_string(m), std::move(t));
}

Group make_dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral group parameter must be positive");
  const int size = 2 * m;
  // (s^x r^i)(s^y r^j) = s^(x+y) r^((-1)^y i + j)
  std::vector<std::vector<int>> t(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const int x = a / m, i = a % m, y = b / m, j = b % m;
      const int rot = ((y == 1 ? -i : i) + j + m) % m;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ((x + y) % 2) * m + rot;
    }
  }
  return Group::from_table("D" + std::to_string(m), std::move(t));
}

Group direct_product(const Group& a, const Group& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
  // (x, y) is index x*nb + y.
  for (int p = 0; p < na * nb; ++p) {
    for (int q = 0; q < na * nb; ++q) {
      t[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          a.op(p / nb, q / nb) * nb + b.op(p % nb, q % nb);
    }
  }
  return Group::from_table(a.name() + "x" + b.name(), std::move(t));
}

Group parse_cayley_table(std::istream& in, const std::string& name) {
  long long m = 0;
  if (!(in >> m) || m < 1 || m > 4096) {
    throw std::runtime_error(name + ": first token must be the group order");
  }
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (auto& row : t) {
    for (auto& x : row) {
      if (!(in >> x)) throw std::runtime_error(name + ": table is truncated or not numeric");
    }
  }
  std::string extra;
  if (in >> extra) throw std::runtime_error(name + ": trailing data after the table");
  return Group::from_table(name, std::move(t));
}

Group load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table " + path);
  return parse_cayley_table(in, std::filesystem::path(path).stem().string());
}

void write_cayley_table(std::ostream& out, const Group& group) {
  out << group.size() << '\n';
  for (const auto& row : group.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

namespace {

int parse_max(const std::string& spec, std::size_t colon) {
  const std::string digits = spec.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1) {
    throw std::invalid_argument("bad group bound in '" + spec + "'");
  }
  return value;
}

}  // namespace

std::vector<Group> groups_from_source(const std::string& spec) {
  std::vector<Group> out;
  const auto colon = spec.find(':');
  const std::string kind = colon == std::string::npos ? "" : spec.substr(0, colon);
  if (kind == "cyclic" || kind == "dihedral" || kind == "abelian" || kind == "builtin") {
    const int max = parse_max(spec, colon);
    const bool all = kind == "builtin";
    if (all || kind == "cyclic") {
      for (int m = 1; m <= max; ++m) out.push_back(make_cyclic_group(m));
    }
    if (all || kind == "dihedral") {
      for (int m = 3; 2 * m <= max; ++m) out.push_back(make_dihedral_group(m));
    }
    if (all || kind == "abelian") {
      for (int a = 2; a * a <= max; ++a) {
        for (int b = a; a * b <= max; b += a) {
          out.push_back(direct_product(make_cyclic_group(a), make_cyclic_group(b)));
        }
      }
    }
  } else {
    namespace fs = std::filesystem;
    if (!fs::is_directory(spec)) {
      throw std::invalid_argument("group source '" + spec +
                                  "' is neither cyclic:/dihedral:/abelian:/builtin:MAX nor a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(spec)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_cayley_table(f.string()));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Group& a, const Group& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace cagegen
