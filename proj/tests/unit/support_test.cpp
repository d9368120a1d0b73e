// Copyright 2026 The vcew Authors
//
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


// Sanity checks for the reference implementations themselves.

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "vcew/families.hpp"

namespace vcew {
namespace {

TEST(SupportTest, BruteMuOnNamedGraphs) {
  EXPECT_EQ(testing::brute_mu(path(3)), 1);
  EXPECT_EQ(testing::brute_mu(cycle(4)), 2);
  EXPECT_EQ(testing::brute_mu(cycle(5)), 3);
  EXPECT_EQ(testing::brute_mu(clique(4)), 3);
}

TEST(SupportTest, BruteConnectivityOnNamedGraphs) {
  EXPECT_EQ(testing::brute_connectivity(path(4)), 1);
  EXPECT_EQ(testing::brute_connectivity(cycle(6)), 2);
  EXPECT_EQ(testing::brute_connectivity(clique(5)), 4);
  EXPECT_EQ(testing::brute_connectivity(make("kpart:3,3")), 3);
}

TEST(SupportTest, BruteClassCountsAreTheKnownValues) {
  EXPECT_EQ(testing::brute_connected_class_count(3), 2);
  EXPECT_EQ(testing::brute_connected_class_count(4), 6);
}

TEST(SupportTest, BruteIsomorphismAndColouring) {
  EXPECT_TRUE(testing::brute_isomorphic(cycle(4), make("kpart:2,2")));
  EXPECT_FALSE(testing::brute_isomorphic(cycle(6), make("product(clique:3,path:2)")));
  EXPECT_TRUE(testing::brute_three_colorable(cycle(5)));
  EXPECT_FALSE(testing::brute_three_colorable(clique(4)));
}

TEST(SupportTest, PathEndCounts) {
  // Four edges: proper iff w1 != w3 and w2 != w4, so each end pair occurs once.
  EXPECT_EQ(testing::brute_path_end_counts(4), (std::vector<std::vector<long>>{{1, 1}, {1, 1}}));
  // Five edges: proper iff w1 != w3, w2 != w4, w3 != w5, so w1 == w5.
  const auto c5 = testing::brute_path_end_counts(5);
  EXPECT_EQ(c5[0][1] + c5[1][0], 0);
  EXPECT_GT(c5[0][0] + c5[1][1], 0);
}

}  // namespace
}  // namespace vcew
