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

#include "vcew/weighting.hpp"

#include <string>

#include "vcew/error.hpp"

namespace vcew {

EdgeWeighting EdgeWeighting::uniform(const Graph& g, int k, Weight w) {
  EdgeWeighting result;
  result.k = k;
  result.weights.assign(static_cast<std::size_t>(g.edge_count()), w);
  return result;
}

void validate_weighting(const Graph& g, const EdgeWeighting& w) {
  if (w.k < 1) throw InvalidArgument("weight alphabet size must be positive");
  if (w.weights.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InvalidArgument("weighting has " + std::to_string(w.weights.size()) +
                          " weights for a graph with " + std::to_string(g.edge_count()) + " edges");
  }
  for (std::size_t e = 0; e < w.weights.size(); ++e) {
    if (w.weights[e] < 1 || w.weights[e] > w.k) {
      throw InvalidArgument("weight of edge " + std::to_string(e) + " is outside 1.." +
                            std::to_string(w.k));
    }
  }
}

InducedColoring induced_coloring(const Graph& g, const EdgeWeighting& w) {
  validate_weighting(g, w);
  InducedColoring c;
  c.colors.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    c.colors[static_cast<std::size_t>(g.edge(e).u)] += w[e];
    c.colors[static_cast<std::size_t>(g.edge(e).v)] += w[e];
  }
  return c;
}

ProperVerdict is_proper(const Graph& g, const EdgeWeighting& w) {
  const InducedColoring c = induced_coloring(g, w);
  ProperVerdict verdict;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c[g.edge(e).u] == c[g.edge(e).v]) verdict.conflicts.push_back(e);
  }
  verdict.proper = verdict.conflicts.empty();
  return verdict;
}

void require_weightable(const Graph& g) {
  if (g.vertex_count() < 3) throw InvalidArgument("graph needs at least three vertices");
  if (!is_connected(g)) throw InvalidArgument("graph must be connected");
}

bool admits_vc1(const Graph& g) {
  require_weightable(g);
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == g.degree(e.v)) return false;
  }
  return true;
}

}  // namespace vcew
