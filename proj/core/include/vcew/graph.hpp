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

#ifndef VCEW_GRAPH_HPP
#define VCEW_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vcew {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor = 0;
  EdgeId edge = 0;
};

/// Immutable simple undirected graph.
///
/// Edge ids are positions in the edge list and never change. Each adjacency
/// list is ordered by ascending edge id. Construction rejects loops, parallel
/// edges and out-of-range endpoints with InvalidArgument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex vertex_count, std::vector<Edge> edges = {});

  Vertex vertex_count() const { return vertex_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  int max_degree() const;
  int min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Vertex vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A subgraph together with the maps from its ids back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;
  std::vector<EdgeId> parent_edge;
};

/// Subgraph induced by `vertices` (any order; relabelled by ascending parent id).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// g minus the given vertices.
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

std::vector<int> degree_sequence(const Graph& g);

enum class Side : std::uint8_t { U, W };

struct Bipartition {
  std::vector<Side> side;

  std::size_t count(Side s) const;
};

/// Two-colouring by BFS; the lowest-id vertex of each component is on side U.
/// Empty when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Components as sorted vertex lists, ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// BFS distance; throws InvalidArgument when v is unreachable from u.
int distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

struct BlockDecomposition {
  /// Edge ids of each block, ascending; blocks ordered by smallest edge id.
  std::vector<std::vector<EdgeId>> blocks;
  /// Ascending.
  std::vector<Vertex> cut_vertices;
};

/// Biconnected components and articulation points. Requires a connected graph.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// Sorted vertex set spanned by a block's edges.
std::vector<Vertex> block_vertices(const Graph& g, std::span<const EdgeId> block);

/// A maximal path whose internal vertices all have degree two.
struct MaximalSimplePath {
  std::vector<EdgeId> edges;
  /// edges.size() + 1 entries; front() and back() are the endpoints.
  std::vector<Vertex> vertices;
  /// Starts and ends at the same vertex (a cycle hanging on a branch vertex,
  /// or the whole graph when it is a cycle).
  bool closed = false;

  int length() const { return static_cast<int>(edges.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

struct MspDecomposition {
  /// Ordered by smallest edge id.
  std::vector<MaximalSimplePath> paths;
};

/// Splits E(g) into maximal simple paths. Open paths are traversed from the
/// endpoint with the smaller id; closed paths leave their endpoint along the
/// incident edge with the smaller id. A cycle graph yields one closed path
/// starting at vertex 0. Requires a connected graph with at least one edge.
MspDecomposition maximal_simple_paths(const Graph& g);

/// True when g is the cycle C_n (connected, 2-regular).
bool is_cycle_graph(const Graph& g);

/// Vertex (u, v) of the product is u * n(h) + v. Edges: for every vertex of h,
/// a copy of g's edge list; then for every vertex of g, a copy of h's.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Edge id in cartesian_product(g, h) of g's edge `e` in the fibre over h's
/// vertex `hv`, and of h's edge `e` in the fibre over g's vertex `gv`.
EdgeId product_edge_from_g(const Graph& g, const Graph& h, EdgeId e, Vertex hv);
EdgeId product_edge_from_h(const Graph& g, const Graph& h, EdgeId e, Vertex gv);

/// Minimum number of vertices whose removal disconnects g or leaves a single
/// vertex; n - 1 for complete graphs and 0 for disconnected graphs.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// stopping early once `cap` paths are found.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

}  // namespace vcew

#endif  // VCEW_GRAPH_HPP
