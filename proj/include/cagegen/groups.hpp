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

#ifndef CAGEGEN_GROUPS_HPP_
#define CAGEGEN_GROUPS_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cagegen {

// Thrown when a table is not a group; what() names the failed law.
class GroupLawError : public std::runtime_error {
 public:
  GroupLawError(const std::string& law, const std::string& detail)
      : std::runtime_error(law + ": " + detail), law_(law) {}
  const std::string& law() const { return law_; }

 private:
  std::string law_;
};

// A finite group as its operation table. Elements are table indices.
class Group {
 public:
  // Validates closure, the Latin-square property, identity, inverses and
  // associativity, in that order.
  static Group from_table(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int op(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  bool is_abelian() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

Group make_cyclic_group(int m);
// Symmetries of the m-gon, order 2m: element r^i is i, s r^i is m+i.
Group make_dihedral_group(int m);
Group direct_product(const Group& a, const Group& b);

// Text format: the order m, then m rows of m element indices.
Group parse_cayley_table(std::istream& in, const std::string& name);
Group load_cayley_table(const std::string& path);
void write_cayley_table(std::ostream& out, const Group& group);

// Groups from a source spec, sorted by order (stable within an order):
//   cyclic:MAX    Z_m for 1 <= m <= MAX
//   dihedral:MAX  D_m of order 2m <= MAX, m >= 3
//   abelian:MAX   Z_a x Z_b with 1 < a, a | b, ab <= MAX (non-cyclic)
//   builtin:MAX   union of the three above
//   DIR           every regular file in DIR, parsed as a Cayley table
// Throws std::invalid_argument on an unknown spec.
std::vector<Group> groups_from_source(const std::string& spec);

}  // namespace cagegen

#endif  // CAGEGEN_GROUPS_HPP_
