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

#ifndef VCEW_CONSTRUCTORS_HPP
#define VCEW_CONSTRUCTORS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <span>
#include <vector>

#include "vcew/graph.hpp"
#include "vcew/weighting.hpp"

namespace vcew {

// Every constructor certifies its output with is_proper before returning and
// throws ProofViolation if the check fails. Unmet structural hypotheses throw
// PreconditionError naming the failed condition.

/// Weighting of g x h that copies wg on every G-fibre and wh on every
/// H-fibre. The result uses k = max(wg.k, wh.k).
EdgeWeighting product_weighting(const Graph& g, const EdgeWeighting& wg, const Graph& h,
                                const EdgeWeighting& wh);

/// Equal-degree components of g and the forest built over them by the
/// cross-edge assignment for g x K2.
struct DegreeComponentPartition {
  /// Vertex sets of the components of the subgraphs induced by equal degree,
  /// each ascending, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components;
  /// Component index of every vertex.
  std::vector<int> component_of;
  /// p(A): the component that A was attached from, empty for forest roots.
  std::vector<std::optional<int>> parent;
  /// Vertex of A whose cross-edge weight was set directly.
  std::vector<Vertex> anchor;
  /// Weight given to the anchor's cross edge.
  std::vector<Weight> anchor_weight;
  /// Index of the forest (seed round) each component joined.
  std::vector<int> forest;
};

/// Runs the component/forest assignment on a connected bipartite g. Every
/// free choice takes the smallest id: the seed component is the unprocessed
/// one with the smallest vertex, its anchor is that vertex, and links are
/// scanned in edge-id order.
DegreeComponentPartition plan_cross_edges(const Graph& g);

/// Weight of the cross edge at u implied by the plan: the anchor weight of
/// u's component, flipped iff d(anchor, u) is odd.
Weight cross_edge_weight(const Graph& g, const DegreeComponentPartition& plan, Vertex u);

/// Proper 2-weighting of g x K2 for a connected bipartite g with n(g) > 2.
/// Vertex (u, i) is 2u + i. First-copy edges weigh 1, second-copy edges 2,
/// and the cross edge at u (id 2|E(g)| + u) follows plan_cross_edges.
EdgeWeighting bipartite_product_k2(const Graph& g);

enum class MspVariant { A, B };

/// Periodic weighting of maximal simple paths along their canonical
/// direction. Variant A uses 1,1,2,2 on paths of length 2 (mod 4) and
/// 2,1,1,2 elsewhere, then repairs conflicts at degree-3 vertices of colour 4
/// by switching the offending 1 (mod 4) path to 1,1,2,2 read from that
/// vertex. Variant B uses 2,2,1,1 on paths of length 2 (mod 4), 2,1,1,2
/// elsewhere, and never repairs.
struct MspPatternResult {
  EdgeWeighting weighting;
  /// Conflict count before the first repair and after each one.
  std::vector<std::size_t> conflict_history;
  /// Indices into maximal_simple_paths(g).paths of the switched paths.
  std::vector<std::size_t> repaired_paths;
};

/// Empty when g meets the variant's hypotheses, otherwise the failed one.
std::string msp_pattern_violation(const Graph& g, MspVariant variant);

MspPatternResult msp_pattern_weighting_traced(const Graph& g, MspVariant variant);
EdgeWeighting msp_pattern_weighting(const Graph& g, MspVariant variant);

/// Empty when every block of g is a cycle and the graph is weightable by the
/// cycle-block construction, otherwise the failed condition.
std::string cycle_block_violation(const Graph& g);

/// 2-weighting of a connected graph whose blocks are all cycles (a single
/// block must have length 0 mod 4). Each cycle is weighted 2,2,1,1 around
/// from its attachment vertex, so both of its edges there start and close
/// the pattern. The root block is the one with the smallest edge id and
/// starts at its smallest cut vertex. The traversal direction of each block
/// is the smaller-id edge first; if the result is improper, directions are
/// searched block by block in that order.
EdgeWeighting cycle_block_weighting(const Graph& g);

/// Block composition. block_weightings[i] is either empty (block i must then
/// be a cycle and gets the pattern above) or a proper 2-weighting of
/// induced_subgraph(g, block_vertices(g, blocks[i])).graph. Supplied blocks
/// must have every neighbour of their cut vertices at degree <= 2 in g.
EdgeWeighting compose_block_weightings(const Graph& g,
                                       std::span<const std::optional<EdgeWeighting>> block_weightings);

struct WeightedGraph {
  Graph graph;
  EdgeWeighting weighting;
};

/// K_{n,...,n} with r parts (r, n >= 2) and the weighting in which the edge
/// from a vertex x of part i to part j > i weighs 2 iff x is the last vertex
/// of part i.
WeightedGraph multipartite_weighting(int r, int n);

/// Vertices v of a connected bipartite g with deg(v) > deg(u) for every
/// neighbour u and g - v connected, ascending.
std::vector<Vertex> dominant_vertices(const Graph& g);

/// Empty when v qualifies for dominant_vertex_weighting, otherwise the
/// failed condition.
std::string dominant_vertex_violation(const Graph& g, Vertex v);

/// Proper 2-weighting of a connected bipartite g around a dominant vertex v.
/// When both parts are odd: weight 2 on every edge at v, and on g - v the
/// smallest proper 2-weighting with odd colours on v's side and even colours
/// on the other side. When a part is even the parity split does not apply and
/// the smallest proper 2-weighting of g is returned.
EdgeWeighting dominant_vertex_weighting(const Graph& g, Vertex v);

}  // namespace vcew

#endif  // VCEW_CONSTRUCTORS_HPP
