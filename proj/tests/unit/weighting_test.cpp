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

#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"
#include "vcew/weighting.hpp"

namespace vcew {
namespace {

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

std::vector<Color> colors_of(const Graph& g, const EdgeWeighting& w) { return induced_coloring(g, w).colors; }

TEST(WeightingTest, InducedColoringExamples) {
  EXPECT_EQ(colors_of(cycle(4), EdgeWeighting::uniform(cycle(4), 1, 1)), (std::vector<Color>{2, 2, 2, 2}));
  // Cycle order 0,1,2,3 with edges 01,12,23,30 weighted 1,1,2,2.
  EXPECT_EQ(colors_of(cycle(4), EdgeWeighting{2, {1, 1, 2, 2}}), (std::vector<Color>{3, 2, 3, 4}));
  EXPECT_EQ(colors_of(star(3), EdgeWeighting::uniform(star(3), 2, 2)), (std::vector<Color>{6, 2, 2, 2}));
}

TEST(WeightingTest, IsProperExamples) {
  EXPECT_TRUE(is_proper(cycle(4), EdgeWeighting{2, {1, 1, 2, 2}}));
  const ProperVerdict all_ones = is_proper(cycle(4), EdgeWeighting::uniform(cycle(4), 1, 1));
  EXPECT_FALSE(all_ones);
  EXPECT_EQ(all_ones.conflicts, (std::vector<EdgeId>{0, 1, 2, 3}));
  EXPECT_TRUE(is_proper(path(3), EdgeWeighting::uniform(path(3), 1, 1)));
}

TEST(WeightingTest, RejectsMismatchedWeightings) {
  EXPECT_THROW(induced_coloring(cycle(4), EdgeWeighting{2, {1, 1, 2}}), InvalidArgument);
  EXPECT_THROW(is_proper(cycle(4), EdgeWeighting{2, {1, 1, 2, 3}}), InvalidArgument);
  EXPECT_THROW(is_proper(cycle(4), EdgeWeighting{2, {1, 0, 2, 2}}), InvalidArgument);
}

TEST(WeightingTest, AdmitsVc1Examples) {
  EXPECT_TRUE(admits_vc1(path(3)));
  EXPECT_FALSE(admits_vc1(cycle(4)));
  const std::vector<int> lengths{2, 2, 2};
  EXPECT_TRUE(admits_vc1(theta(lengths)));
  EXPECT_THROW(admits_vc1(path(2)), InvalidArgument);
  EXPECT_THROW(admits_vc1(Graph(4, {{0, 1}, {2, 3}})), InvalidArgument);
}

TEST(WeightingTest, RandomWeightingsObeyHandshakeAndMatchReference) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const int k = 1 + static_cast<int>(rng() % 4);
      EdgeWeighting w{k, {}};
      std::vector<int> raw;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        raw.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
        w.weights.push_back(raw.back());
      }
      const std::vector<Color> c = colors_of(g, w);
      EXPECT_EQ(std::accumulate(c.begin(), c.end(), Color{0}),
                2 * std::accumulate(raw.begin(), raw.end(), Color{0}));
      const std::vector<long> reference = testing::brute_colors(g, raw);
      EXPECT_TRUE(std::equal(c.begin(), c.end(), reference.begin()));
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EXPECT_GE(c[static_cast<std::size_t>(v)], g.degree(v));
        EXPECT_LE(c[static_cast<std::size_t>(v)], static_cast<Color>(k) * g.degree(v));
      }
      EXPECT_EQ(static_cast<bool>(is_proper(g, w)), testing::brute_proper(g, raw));
    }
  }
}

TEST(WeightingTest, AdmitsVc1IffAllOnesIsProper) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      EXPECT_EQ(admits_vc1(g), static_cast<bool>(is_proper(g, EdgeWeighting::uniform(g, 1, 1))));
    }
  }
}

TEST(WeightingTest, ConflictListIsCompleteAndAscending) {
  std::mt19937_64 rng(11);
  for (const Graph& g : enumerate_connected(6)) {
    EdgeWeighting w{2, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) w.weights.push_back(1 + static_cast<int>(rng() % 2));
    const std::vector<Color> c = colors_of(g, w);
    std::vector<EdgeId> expected;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (c[static_cast<std::size_t>(g.edge(e).u)] == c[static_cast<std::size_t>(g.edge(e).v)]) expected.push_back(e);
    }
    EXPECT_EQ(is_proper(g, w).conflicts, expected);
  }
}

}  // namespace
}  // namespace vcew
