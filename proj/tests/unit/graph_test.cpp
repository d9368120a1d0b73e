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
#include <set>

#include "support/oracles.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"
#include "vcew/graph.hpp"

namespace vcew {
namespace {

Graph disjoint_c3_c4() { return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}}); }

Graph two_c4_sharing_vertex() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
}

TEST(GraphTest, RejectsLoopsParallelEdgesAndBadEndpoints) {
  EXPECT_THROW(Graph(2, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {{0, 2}}), InvalidArgument);
  EXPECT_THROW(Graph(-1), InvalidArgument);
}

TEST(GraphTest, AdjacencyListsFollowEdgeIds) {
  const Graph g(4, {{2, 3}, {0, 2}, {1, 2}});
  const auto inc = g.incident(2);
  ASSERT_EQ(inc.size(), 3U);
  EXPECT_EQ(inc[0].edge, 0);
  EXPECT_EQ(inc[1].edge, 1);
  EXPECT_EQ(inc[2].edge, 2);
  EXPECT_EQ(inc[0].neighbor, 3);
  EXPECT_EQ(g.edge_between(2, 0), std::optional<EdgeId>(1));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.min_degree(), 1);
}

TEST(GraphTest, DegreeSequenceExamples) {
  EXPECT_EQ(degree_sequence(path(3)), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(degree_sequence(cycle(4)), (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(degree_sequence(clique(4)), (std::vector<int>{3, 3, 3, 3}));
}

TEST(GraphTest, BipartitionExamples) {
  const auto c4 = bipartition(cycle(4));
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(c4->side, (std::vector<Side>{Side::U, Side::W, Side::U, Side::W}));
  EXPECT_FALSE(bipartition(cycle(5)).has_value());
  const std::vector<int> lengths{2, 2, 2};
  const auto th = bipartition(theta(lengths));
  ASSERT_TRUE(th.has_value());
  EXPECT_EQ(th->side, (std::vector<Side>{Side::U, Side::U, Side::W, Side::W, Side::W}));
  EXPECT_EQ(th->count(Side::U), 2U);
}

TEST(GraphTest, ConnectedComponentsExamples) {
  EXPECT_EQ(connected_components(cycle(4)).size(), 1U);
  const auto parts = connected_components(disjoint_c3_c4());
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(parts[1], (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_EQ(connected_components(Graph(3)).size(), 3U);
  EXPECT_FALSE(is_connected(disjoint_c3_c4()));
}

TEST(GraphTest, BlocksExamples) {
  const BlockDecomposition two = blocks_and_cut_vertices(two_c4_sharing_vertex());
  EXPECT_EQ(two.blocks.size(), 2U);
  EXPECT_EQ(two.cut_vertices, (std::vector<Vertex>{0}));
  const BlockDecomposition p5 = blocks_and_cut_vertices(path(5));
  EXPECT_EQ(p5.blocks.size(), 4U);
  EXPECT_EQ(p5.cut_vertices, (std::vector<Vertex>{1, 2, 3}));
  const BlockDecomposition c6 = blocks_and_cut_vertices(cycle(6));
  EXPECT_EQ(c6.blocks.size(), 1U);
  EXPECT_TRUE(c6.cut_vertices.empty());
  EXPECT_THROW(blocks_and_cut_vertices(disjoint_c3_c4()), InvalidArgument);
}

TEST(GraphTest, BlocksPartitionEdgesAndCutVerticesSplitTheGraph) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const BlockDecomposition bd = blocks_and_cut_vertices(g);
      std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), 0);
      for (const auto& block : bd.blocks) {
        for (EdgeId e : block) ++owner[static_cast<std::size_t>(e)];
      }
      EXPECT_TRUE(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }));
      for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
          std::vector<Vertex> shared;
          const auto a = block_vertices(g, bd.blocks[i]);
          const auto b = block_vertices(g, bd.blocks[j]);
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
          ASSERT_LE(shared.size(), 1U);
          if (!shared.empty()) {
            EXPECT_TRUE(std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), shared[0]));
          }
        }
      }
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::vector<Vertex> removed{v};
        const bool splits = !is_connected(remove_vertices(g, removed).graph);
        EXPECT_EQ(splits, std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v));
      }
    }
  }
}

TEST(GraphTest, MaximalSimplePathExamples) {
  const std::vector<int> lengths{2, 2, 2};
  const MspDecomposition th = maximal_simple_paths(theta(lengths));
  ASSERT_EQ(th.paths.size(), 3U);
  for (const auto& p : th.paths) {
    EXPECT_EQ(p.length(), 2);
    EXPECT_FALSE(p.closed);
    EXPECT_EQ(p.vertices.front(), 0);
    EXPECT_EQ(p.vertices.back(), 1);
  }
  const MspDecomposition k4 = maximal_simple_paths(clique(4));
  EXPECT_EQ(k4.paths.size(), 6U);
  for (const auto& p : k4.paths) EXPECT_EQ(p.length(), 1);
  const MspDecomposition c8 = maximal_simple_paths(cycle(8));
  ASSERT_EQ(c8.paths.size(), 1U);
  EXPECT_TRUE(c8.paths[0].closed);
  EXPECT_EQ(c8.paths[0].length(), 8);
  EXPECT_THROW(maximal_simple_paths(disjoint_c3_c4()), InvalidArgument);
}

TEST(GraphTest, ClosedMaximalSimplePathOnABranchVertex) {
  // A triangle hanging on the end of a path: the triangle is a closed MSP.
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
  const MspDecomposition d = maximal_simple_paths(g);
  ASSERT_EQ(d.paths.size(), 2U);
  EXPECT_FALSE(d.paths[0].closed);
  EXPECT_EQ(d.paths[0].length(), 2);
  EXPECT_TRUE(d.paths[1].closed);
  EXPECT_EQ(d.paths[1].vertices.front(), 2);
  EXPECT_EQ(d.paths[1].vertices.back(), 2);
}

TEST(GraphTest, MaximalSimplePathsPartitionEdgesOnAllSmallGraphs) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const MspDecomposition d = maximal_simple_paths(g);
      std::vector<int> used(static_cast<std::size_t>(g.edge_count()), 0);
      for (const auto& p : d.paths) {
        ASSERT_EQ(p.vertices.size(), p.edges.size() + 1);
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
          ++used[static_cast<std::size_t>(p.edges[i])];
          const Edge e = g.edge(p.edges[i]);
          EXPECT_TRUE((e.u == p.vertices[i] && e.v == p.vertices[i + 1]) ||
                      (e.v == p.vertices[i] && e.u == p.vertices[i + 1]));
        }
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) EXPECT_EQ(g.degree(p.vertices[i]), 2);
        if (!is_cycle_graph(g)) {
          EXPECT_NE(g.degree(p.vertices.front()), 2);
          EXPECT_NE(g.degree(p.vertices.back()), 2);
        }
      }
      EXPECT_TRUE(std::all_of(used.begin(), used.end(), [](int c) { return c == 1; }));
    }
  }
}

TEST(GraphTest, CartesianProductExamples) {
  const Graph c4 = cartesian_product(path(2), path(2));
  EXPECT_EQ(c4.vertex_count(), 4);
  EXPECT_EQ(c4.edge_count(), 4);
  EXPECT_TRUE(is_cycle_graph(c4));
  const Graph q3 = cartesian_product(cartesian_product(path(2), path(2)), path(2));
  EXPECT_EQ(q3.vertex_count(), 8);
  EXPECT_EQ(q3.edge_count(), 12);
  const Graph grid = cartesian_product(path(2), path(3));
  EXPECT_EQ(grid.vertex_count(), 6);
  EXPECT_EQ(grid.edge_count(), 7);
}

TEST(GraphTest, CartesianProductMatchesDefinitionAndEdgeLayout) {
  const std::vector<Graph> factors{path(3), cycle(4), clique(3), Graph(4, {{0, 1}, {0, 2}, {0, 3}})};
  for (const Graph& g : factors) {
    for (const Graph& h : factors) {
      const Graph p = cartesian_product(g, h);
      EXPECT_EQ(testing::adjacency_matrix(p), testing::brute_product_adjacency(g, h));
      for (Vertex hv = 0; hv < h.vertex_count(); ++hv) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const Edge pe = p.edge(product_edge_from_g(g, h, e, hv));
          EXPECT_EQ(pe, (Edge{g.edge(e).u * h.vertex_count() + hv, g.edge(e).v * h.vertex_count() + hv}));
        }
      }
      for (Vertex gv = 0; gv < g.vertex_count(); ++gv) {
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
          const Edge pe = p.edge(product_edge_from_h(g, h, e, gv));
          EXPECT_EQ(pe, (Edge{gv * h.vertex_count() + h.edge(e).u, gv * h.vertex_count() + h.edge(e).v}));
        }
      }
    }
  }
}

TEST(GraphTest, ProductIsBipartiteIffBothFactorsAre) {
  std::vector<Graph> pool;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) pool.push_back(g);
  }
  for (const Graph& g : pool) {
    for (const Graph& h : pool) {
      const bool expected = bipartition(g).has_value() && bipartition(h).has_value();
      EXPECT_EQ(bipartition(cartesian_product(g, h)).has_value(), expected);
    }
  }
}

TEST(GraphTest, VertexConnectivityExamples) {
  EXPECT_EQ(vertex_connectivity(cycle(5)), 2);
  EXPECT_EQ(vertex_connectivity(clique(4)), 3);
  EXPECT_EQ(vertex_connectivity(cartesian_product(cycle(4), cycle(4))), 4);
  EXPECT_EQ(vertex_connectivity(disjoint_c3_c4()), 0);
  EXPECT_EQ(vertex_connectivity(path(2)), 1);
}

TEST(GraphTest, VertexConnectivityMatchesSubsetRemoval) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      EXPECT_EQ(vertex_connectivity(g), testing::brute_connectivity(g));
    }
  }
}

TEST(GraphTest, DistanceExamples) {
  EXPECT_EQ(distance(cycle(6), 0, 3), 3);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(distance(path(5), v, v), 0);
  EXPECT_EQ(distance(path(5), 0, 4), 4);
  EXPECT_THROW(distance(disjoint_c3_c4(), 0, 5), InvalidArgument);
  EXPECT_EQ(distances_from(disjoint_c3_c4(), 0)[5], -1);
}

TEST(GraphTest, InducedSubgraphKeepsParentMaps) {
  const std::vector<Vertex> keep{4, 1, 2};
  const Subgraph s = induced_subgraph(cycle(6), keep);
  EXPECT_EQ(s.graph.vertex_count(), 3);
  EXPECT_EQ(s.parent_vertex, (std::vector<Vertex>{1, 2, 4}));
  ASSERT_EQ(s.graph.edge_count(), 1);
  EXPECT_EQ(s.parent_edge[0], 1);
}

}  // namespace
}  // namespace vcew
