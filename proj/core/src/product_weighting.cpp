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
#include <cstdlib>
#include <string>

#include "certify.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"

namespace vcew {

using detail::certify;

EdgeWeighting product_weighting(const Graph& g, const EdgeWeighting& wg, const Graph& h,
                                const EdgeWeighting& wh) {
  validate_weighting(g, wg);
  validate_weighting(h, wh);
  if (!is_proper(g, wg)) throw PreconditionError("the weighting of the first factor is not proper");
  if (!is_proper(h, wh)) throw PreconditionError("the weighting of the second factor is not proper");

  const Graph product = cartesian_product(g, h);
  EdgeWeighting w{std::max(wg.k, wh.k), std::vector<Weight>(static_cast<std::size_t>(product.edge_count()))};
  for (Vertex hv = 0; hv < h.vertex_count(); ++hv) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      w.weights[static_cast<std::size_t>(product_edge_from_g(g, h, e, hv))] = wg[e];
    }
  }
  for (Vertex gv = 0; gv < g.vertex_count(); ++gv) {
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      w.weights[static_cast<std::size_t>(product_edge_from_h(g, h, e, gv))] = wh[e];
    }
  }
  certify(product, w, "product_weighting");
  return w;
}

DegreeComponentPartition plan_cross_edges(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("the graph must be connected");
  if (g.vertex_count() <= 2) throw PreconditionError("the graph must have more than two vertices");
  if (!bipartition(g)) throw PreconditionError("the graph must be bipartite");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  DegreeComponentPartition plan;
  plan.component_of.assign(n, -1);
  // Components of the equal-degree subgraphs, discovered from the smallest
  // unassigned vertex so they come out ordered by smallest vertex.
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (plan.component_of[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(plan.components.size());
    std::vector<Vertex> members{start};
    plan.component_of[static_cast<std::size_t>(start)] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const Incidence& inc : g.incident(members[i])) {
        if (plan.component_of[static_cast<std::size_t>(inc.neighbor)] < 0 &&
            g.degree(inc.neighbor) == g.degree(start)) {
          plan.component_of[static_cast<std::size_t>(inc.neighbor)] = id;
          members.push_back(inc.neighbor);
        }
      }
    }
    std::sort(members.begin(), members.end());
    plan.components.push_back(std::move(members));
  }

  const std::size_t count = plan.components.size();
  plan.parent.assign(count, std::nullopt);
  plan.anchor.assign(count, -1);
  plan.anchor_weight.assign(count, 0);
  plan.forest.assign(count, -1);

  int round = -1;
  for (std::size_t seed = 0; seed < count; ++seed) {
    if (plan.forest[seed] >= 0) continue;
    ++round;
    plan.forest[seed] = round;
    plan.anchor[seed] = plan.components[seed].front();
    plan.anchor_weight[seed] = 1;
    // Attach components linked to the current forest by an edge whose ends
    // differ in degree by exactly one, until none is left.
    bool grew = true;
    while (grew) {
      grew = false;
      for (EdgeId e = 0; e < g.edge_count() && !grew; ++e) {
        for (const auto& [x, y] : {std::pair{g.edge(e).u, g.edge(e).v}, std::pair{g.edge(e).v, g.edge(e).u}}) {
          const auto a = static_cast<std::size_t>(plan.component_of[static_cast<std::size_t>(x)]);
          const auto b = static_cast<std::size_t>(plan.component_of[static_cast<std::size_t>(y)]);
          if (plan.forest[a] != round || plan.forest[b] >= 0) continue;
          if (std::abs(g.degree(x) - g.degree(y)) != 1) continue;
          plan.forest[b] = round;
          plan.parent[b] = static_cast<int>(a);
          plan.anchor[b] = y;
          plan.anchor_weight[b] = cross_edge_weight(g, plan, x);
          grew = true;
          break;
        }
      }
    }
  }
  return plan;
}

Weight cross_edge_weight(const Graph& g, const DegreeComponentPartition& plan, Vertex u) {
  const auto a = static_cast<std::size_t>(plan.component_of.at(static_cast<std::size_t>(u)));
  const Weight base = plan.anchor_weight.at(a);
  if (base == 0) throw InvalidArgument("the component of vertex " + std::to_string(u) + " has no anchor yet");
  const bool odd = distance(g, plan.anchor[a], u) % 2 == 1;
  return odd ? 3 - base : base;
}

EdgeWeighting bipartite_product_k2(const Graph& g) {
  const DegreeComponentPartition plan = plan_cross_edges(g);
  const Graph k2 = path(2);
  const Graph product = cartesian_product(g, k2);
  EdgeWeighting w{2, std::vector<Weight>(static_cast<std::size_t>(product.edge_count()))};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    w.weights[static_cast<std::size_t>(product_edge_from_g(g, k2, e, 0))] = 1;
    w.weights[static_cast<std::size_t>(product_edge_from_g(g, k2, e, 1))] = 2;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    w.weights[static_cast<std::size_t>(product_edge_from_h(g, k2, 0, u))] = cross_edge_weight(g, plan, u);
  }
  certify(product, w, "bipartite_product_k2");
  return w;
}

}  // namespace vcew
