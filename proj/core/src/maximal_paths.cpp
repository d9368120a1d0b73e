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

#include <algorithm>

#include "vcew/error.hpp"
#include "vcew/graph.hpp"

namespace vcew {

namespace {

// Follows degree-2 vertices from `start` along `first` until a branch vertex
// (or `start` again) is reached.
MaximalSimplePath walk(const Graph& g, Vertex start, EdgeId first, std::vector<bool>& used) {
  MaximalSimplePath path;
  path.vertices.push_back(start);
  Vertex current = start;
  EdgeId edge = first;
  while (true) {
    used[static_cast<std::size_t>(edge)] = true;
    path.edges.push_back(edge);
    const Vertex next = g.edge(edge).other(current);
    path.vertices.push_back(next);
    if (next == start || g.degree(next) != 2) break;
    const auto inc = g.incident(next);
    edge = inc[0].edge == edge ? inc[1].edge : inc[0].edge;
    current = next;
  }
  path.closed = path.front() == path.back();
  return path;
}

}  // namespace

MspDecomposition maximal_simple_paths(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("maximal simple paths need at least one edge");
  if (!is_connected(g)) throw InvalidArgument("maximal simple paths need a connected graph");

  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  MspDecomposition result;

  if (is_cycle_graph(g)) {
    result.paths.push_back(walk(g, 0, g.incident(0)[0].edge, used));
    return result;
  }

  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    if (g.degree(b) == 2) continue;
    for (const Incidence& inc : g.incident(b)) {
      if (used[static_cast<std::size_t>(inc.edge)]) continue;
      MaximalSimplePath path = walk(g, b, inc.edge, used);
      if (!path.closed && path.back() < path.front()) {
        std::reverse(path.edges.begin(), path.edges.end());
        std::reverse(path.vertices.begin(), path.vertices.end());
      }
      result.paths.push_back(std::move(path));
    }
  }

  std::sort(result.paths.begin(), result.paths.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.edges.begin(), a.edges.end()) <
           *std::min_element(b.edges.begin(), b.edges.end());
  });
  return result;
}

}  // namespace vcew
