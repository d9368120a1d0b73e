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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"

namespace vcew {
namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  std::shuffle(edges.begin(), edges.end(), std::mt19937_64(perm.size()));
  return Graph(g.vertex_count(), edges);
}

TEST(EnumerateTest, KnownCounts) {
  EXPECT_EQ(enumerate_connected(1).size(), 1U);
  EXPECT_EQ(enumerate_connected(2).size(), 1U);
  EXPECT_EQ(enumerate_connected(3).size(), 2U);
  EXPECT_EQ(enumerate_connected(4).size(), 6U);
  EXPECT_EQ(enumerate_connected(5).size(), 21U);
  EXPECT_EQ(enumerate_connected(6).size(), 112U);
  EXPECT_EQ(enumerate_connected(7).size(), 853U);
  EXPECT_EQ(enumerate_connected(8).size(), 11117U);
  EXPECT_THROW(enumerate_connected(0), InvalidArgument);
  EXPECT_THROW(enumerate_connected(9), InvalidArgument);
}

TEST(EnumerateTest, CountsMatchBruteForceIsomorphismClasses) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_connected(n).size()), testing::brute_connected_class_count(n));
  }
}

TEST(EnumerateTest, ThreeVertexGraphsArePathThenTriangle) {
  const auto& g3 = enumerate_connected(3);
  EXPECT_EQ(g3[0].edge_count(), 2);
  EXPECT_EQ(g3[1].edge_count(), 3);
}

TEST(EnumerateTest, GraphsAreConnectedPairwiseNonIsomorphicAndOrdered) {
  for (int n = 3; n <= 6; ++n) {
    const auto& all = enumerate_connected(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(testing::brute_connected(all[i]));
      if (i > 0) EXPECT_LE(all[i - 1].edge_count(), all[i].edge_count());
    }
    if (n <= 5) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(testing::brute_isomorphic(all[i], all[j]));
      }
    }
  }
}

TEST(EnumerateTest, CanonicalFormIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 8; ++n) {
    const auto& all = enumerate_connected(n);
    std::set<std::uint64_t> codes;
    for (std::size_t i = 0; i < all.size(); i += (n == 8 ? 37 : 1)) {
      const Graph& g = all[i];
      const CanonicalForm base = canonical_form(g);
      EXPECT_EQ(base.graph, g);
      codes.insert(base.code);
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const CanonicalForm other = canonical_form(relabel(g, perm));
        EXPECT_EQ(other.code, base.code);
        EXPECT_EQ(other.graph, base.graph);
      }
    }
    if (n < 8) EXPECT_EQ(codes.size(), all.size());
  }
}

TEST(EnumerateTest, CanonicalFormSeparatesCospectralLookingPairs) {
  // Two 3-regular graphs on 6 vertices: K_{3,3} and the prism.
  const Graph k33 = make("kpart:3,3");
  const Graph prism = make("product(clique:3,path:2)");
  EXPECT_NE(canonical_form(k33).code, canonical_form(prism).code);
  EXPECT_THROW(canonical_form(Graph(12)), InvalidArgument);
}

}  // namespace
}  // namespace vcew
