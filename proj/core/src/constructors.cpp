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

#include <string>

#include "certify.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"
#include "vcew/oracle.hpp"

namespace vcew {

WeightedGraph multipartite_weighting(int r, int n) {
  if (r < 2 || n < 2) throw PreconditionError("multipartite_weighting needs r >= 2 parts of size n >= 2");
  const std::vector<int> sizes(static_cast<std::size_t>(r), n);
  WeightedGraph out{complete_multipartite(sizes), {}};
  out.weighting.k = 2;
  // Vertex x lies in part x / n; the last vertex of a part has x % n == n - 1.
  for (const Edge& e : out.graph.edges()) {
    out.weighting.weights.push_back(e.u % n == n - 1 ? 2 : 1);
  }
  detail::certify(out.graph, out.weighting, "multipartite_weighting");
  return out;
}

std::string dominant_vertex_violation(const Graph& g, Vertex v) {
  if (g.vertex_count() < 3 || !is_connected(g)) return "the graph must be connected with at least three vertices";
  if (v < 0 || v >= g.vertex_count()) return "vertex " + std::to_string(v) + " is out of range";
  if (!bipartition(g)) return "the graph must be bipartite";
  for (const Incidence& inc : g.incident(v)) {
    if (g.degree(inc.neighbor) >= g.degree(v)) {
      return "neighbour " + std::to_string(inc.neighbor) + " has degree " + std::to_string(g.degree(inc.neighbor)) +
             ", not below deg(" + std::to_string(v) + ") = " + std::to_string(g.degree(v));
    }
  }
  const std::vector<Vertex> removed{v};
  if (!is_connected(remove_vertices(g, removed).graph)) {
    return "removing vertex " + std::to_string(v) + " disconnects the graph";
  }
  return {};
}

std::vector<Vertex> dominant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dominant_vertex_violation(g, v).empty()) out.push_back(v);
  }
  return out;
}

EdgeWeighting dominant_vertex_weighting(const Graph& g, Vertex v) {
  if (const std::string why = dominant_vertex_violation(g, v); !why.empty()) throw PreconditionError(why);
  const Bipartition parts = *bipartition(g);
  const bool both_odd = parts.count(Side::U) % 2 == 1 && parts.count(Side::W) % 2 == 1;

  if (!both_odd) {
    std::optional<EdgeWeighting> w = find_weighting(g, 2);
    if (!w) throw ProofViolation("a bipartite graph with an even part has no proper 2-weighting");
    detail::certify(g, *w, "dominant_vertex_weighting");
    return *w;
  }

  const std::vector<Vertex> removed{v};
  const Subgraph rest = remove_vertices(g, removed);
  const Side own = parts.side[static_cast<std::size_t>(v)];
  SearchConstraints constraints;
  for (Vertex x : rest.parent_vertex) {
    constraints.parity.push_back(parts.side[static_cast<std::size_t>(x)] == own ? Parity::Odd : Parity::Even);
  }
  const std::optional<EdgeWeighting> inner = find_weighting(rest.graph, 2, constraints);
  if (!inner) {
    throw ProofViolation("g - " + std::to_string(v) +
                         " has no proper 2-weighting with odd colours on one side and even on the other");
  }
  EdgeWeighting w{2, std::vector<Weight>(static_cast<std::size_t>(g.edge_count()), 2)};
  for (EdgeId e = 0; e < rest.graph.edge_count(); ++e) {
    w.weights[static_cast<std::size_t>(rest.parent_edge[static_cast<std::size_t>(e)])] = (*inner)[e];
  }
  detail::certify(g, w, "dominant_vertex_weighting");
  return w;
}

}  // namespace vcew
