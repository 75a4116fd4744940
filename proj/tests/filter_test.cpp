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


#include <gtest/gtest.h>

#include <sstream>

#include "cagegen/filter.hpp"
#include "cagegen/fixtures.hpp"
#include "cagegen/graph6.hpp"
#include "oracles.hpp"

namespace cagegen {
namespace {

FilterOptions opts(int k, int g, std::optional<int> odd = std::nullopt) {
  FilterOptions o;
  o.k = k;
  o.g = g;
  o.odd_girth = odd;
  return o;
}

TEST(FilterTest, FixturesPassBothVerifiers) {
  for (const auto& f : fixtures::catalog()) {
    const FilterVerdict v = verify_target(f.build(), opts(f.k, f.g, f.odd_girth));
    EXPECT_TRUE(v.pass) << f.name << ": " << v.reason;
  }
}

TEST(FilterTest, CampbellOddGirth) {
  EXPECT_TRUE(verify_target(fixtures::campbell(), opts(3, 6, 11)).pass);
  const FilterVerdict v = verify_target(fixtures::campbell(), opts(3, 6, 9));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.reason, "odd girth 11 != 9");
}

TEST(FilterTest, RejectionReasons) {
  EXPECT_EQ(verify_target(fixtures::petersen(), opts(3, 5)).reason, "contains a 6-cycle");
  EXPECT_EQ(verify_target(fixtures::cycle(5), opts(3, 5)).reason, "not 3-regular");
  EXPECT_EQ(verify_target(fixtures::heawood(), opts(3, 5)).reason, "girth 6 != 5");
  EXPECT_EQ(verify_target(Graph(4), opts(0, 3)).reason, "acyclic");
  EXPECT_EQ(verify_target(fixtures::heawood(), opts(3, 6, 7)).reason, "odd girth inf != 7");
}

// The two verifiers never disagree; a disagreement would throw.
TEST(FilterTest, VerifiersAgreeOnSmallRegularGraphs) {
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const int k = g.degree(0);
      if (!g.is_regular(k) || k < 2) continue;
      const auto gi = girth(g);
      if (!gi) continue;
      EXPECT_NO_THROW(verify_target(g, opts(k, *gi)));
    }
  }
}

TEST(FilterTest, StreamHandlesMalformedAndEmptyInput) {
  std::istringstream empty("");
  std::ostringstream out0, log0;
  const FilterReport r0 = run_filter(empty, out0, log0, opts(3, 5));
  EXPECT_EQ(r0.read, 0u);
  EXPECT_EQ(r0.malformed, 0u);
  EXPECT_TRUE(out0.str().empty());

  std::istringstream in(encode_graph6(fixtures::petersen()) + "\n" + "!!bad\n" +
                        encode_graph6(fixtures::gp92()) + "\n");
  std::ostringstream out, log;
  FilterOptions o = opts(3, 5);
  o.verbose = true;
  const FilterReport r = run_filter(in, out, log, o);
  EXPECT_EQ(r.read, 2u);
  EXPECT_EQ(r.passed, 1u);
  EXPECT_EQ(r.malformed, 1u);
  EXPECT_EQ(out.str(), encode_graph6(fixtures::gp92()) + "\n");
  EXPECT_NE(log.str().find("warning: line 2"), std::string::npos);
  EXPECT_NE(log.str().find("line 1: reject (contains a 6-cycle)"), std::string::npos);
  EXPECT_NE(log.str().find("line 3: pass"), std::string::npos);
}

}  // namespace
}  // namespace cagegen
