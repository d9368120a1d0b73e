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
#include <array>
#include <string>

#include "certify.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"

namespace vcew {

namespace {

constexpr std::array<Weight, 4> kCyclePattern{2, 2, 1, 1};

struct BlockInfo {
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;
  bool cycle = false;
  Vertex start = -1;
};

bool is_cycle_block(const Graph& g, const std::vector<EdgeId>& edges, const std::vector<Vertex>& vertices) {
  if (edges.size() < 3 || edges.size() != vertices.size()) return false;
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++local[static_cast<std::size_t>(g.edge(e).u)];
    ++local[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return local[static_cast<std::size_t>(v)] == 2; });
}

// Blocks in breadth-first order over the block tree, each with the vertex its
// pattern starts from.
std::vector<BlockInfo> ordered_blocks(const Graph& g, const BlockDecomposition& bd) {
  std::vector<std::vector<std::size_t>> blocks_at(static_cast<std::size_t>(g.vertex_count()));
  std::vector<BlockInfo> info(bd.blocks.size());
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    info[b].edges = bd.blocks[b];
    info[b].vertices = block_vertices(g, bd.blocks[b]);
    info[b].cycle = is_cycle_block(g, info[b].edges, info[b].vertices);
    for (Vertex v : info[b].vertices) blocks_at[static_cast<std::size_t>(v)].push_back(b);
  }
  auto is_cut = [&](Vertex v) { return std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v); };

  std::vector<std::size_t> order{0};
  std::vector<bool> seen(info.size(), false);
  seen[0] = true;
  info[0].start = info[0].vertices.front();
  for (Vertex v : info[0].vertices) {
    if (is_cut(v)) {
      info[0].start = v;
      break;
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex v : info[order[i]].vertices) {
      if (!is_cut(v)) continue;
      for (std::size_t b : blocks_at[static_cast<std::size_t>(v)]) {
        if (seen[b]) continue;
        seen[b] = true;
        info[b].start = v;
        order.push_back(b);
      }
    }
  }
  std::vector<BlockInfo> out;
  for (std::size_t b : order) out.push_back(std::move(info[b]));
  return out;
}

// Edges of a cycle block in walking order from `start`; `reverse` picks the
// larger-id edge at start first.
std::vector<EdgeId> cycle_walk(const Graph& g, const BlockInfo& block, bool reverse) {
  std::vector<bool> in_block(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeId e : block.edges) in_block[static_cast<std::size_t>(e)] = true;
  std::vector<EdgeId> at_start;
  for (const Incidence& inc : g.incident(block.start)) {
    if (in_block[static_cast<std::size_t>(inc.edge)]) at_start.push_back(inc.edge);
  }
  std::sort(at_start.begin(), at_start.end());
  std::vector<EdgeId> walk{reverse ? at_start.back() : at_start.front()};
  Vertex current = g.edge(walk.back()).other(block.start);
  while (current != block.start) {
    for (const Incidence& inc : g.incident(current)) {
      if (in_block[static_cast<std::size_t>(inc.edge)] && inc.edge != walk.back()) {
        walk.push_back(inc.edge);
        current = inc.neighbor;
        break;
      }
    }
  }
  return walk;
}

class DirectionSearch {
 public:
  DirectionSearch(const Graph& g, std::vector<std::vector<EdgeId>> forward, std::vector<std::vector<EdgeId>> backward,
                  EdgeWeighting fixed)
      : g_(g), forward_(std::move(forward)), backward_(std::move(backward)), w_(std::move(fixed)) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    color_.assign(n, 0);
    std::vector<int> complete(n, -1);
    std::vector<bool> pending(static_cast<std::size_t>(g.edge_count()), false);
    for (std::size_t t = 0; t < forward_.size(); ++t) {
      for (EdgeId e : forward_[t]) {
        pending[static_cast<std::size_t>(e)] = true;
        complete[static_cast<std::size_t>(g.edge(e).u)] = static_cast<int>(t);
        complete[static_cast<std::size_t>(g.edge(e).v)] = static_cast<int>(t);
      }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (pending[static_cast<std::size_t>(e)]) continue;
      color_[static_cast<std::size_t>(g.edge(e).u)] += w_[e];
      color_[static_cast<std::size_t>(g.edge(e).v)] += w_[e];
    }
    checks_.resize(forward_.size() + 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const int t = std::max(complete[static_cast<std::size_t>(g.edge(e).u)], complete[static_cast<std::size_t>(g.edge(e).v)]);
      checks_[static_cast<std::size_t>(t + 1)].push_back(e);
    }
  }

  bool run() { return ok(0) && place(0); }
  const EdgeWeighting& weighting() const { return w_; }

 private:
  bool ok(std::size_t slot) const {
    return std::all_of(checks_[slot].begin(), checks_[slot].end(), [&](EdgeId e) {
      return color_[static_cast<std::size_t>(g_.edge(e).u)] != color_[static_cast<std::size_t>(g_.edge(e).v)];
    });
  }

  void add(const std::vector<EdgeId>& walk, int sign) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Weight wt = kCyclePattern[i % 4];
      w_.weights[static_cast<std::size_t>(walk[i])] = wt;
      color_[static_cast<std::size_t>(g_.edge(walk[i]).u)] += sign * wt;
      color_[static_cast<std::size_t>(g_.edge(walk[i]).v)] += sign * wt;
    }
  }

  bool place(std::size_t t) {
    if (t == forward_.size()) return true;
    for (const auto* walk : {&forward_[t], &backward_[t]}) {
      add(*walk, 1);
      if (ok(t + 1) && place(t + 1)) return true;
      add(*walk, -1);
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<EdgeId>> forward_;
  std::vector<std::vector<EdgeId>> backward_;
  EdgeWeighting w_;
  std::vector<Color> color_;
  // checks_[t + 1]: edges whose endpoints are final once block t is placed.
  std::vector<std::vector<EdgeId>> checks_;
};

std::string basic_violation(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return "the graph must be connected with at least three vertices";
  return {};
}

}  // namespace

std::string cycle_block_violation(const Graph& g) {
  if (std::string why = basic_violation(g); !why.empty()) return why;
  const BlockDecomposition bd = blocks_and_cut_vertices(g);
  for (const auto& block : bd.blocks) {
    if (!is_cycle_block(g, block, block_vertices(g, block))) {
      return "the block containing edge " + std::to_string(block.front()) + " is not a cycle";
    }
  }
  if (bd.blocks.size() == 1 && g.edge_count() % 4 != 0) {
    return "a single cycle block must have length 0 mod 4";
  }
  return {};
}

EdgeWeighting cycle_block_weighting(const Graph& g) {
  if (const std::string why = cycle_block_violation(g); !why.empty()) throw PreconditionError(why);
  const std::vector<std::optional<EdgeWeighting>> none(blocks_and_cut_vertices(g).blocks.size());
  return compose_block_weightings(g, none);
}

EdgeWeighting compose_block_weightings(const Graph& g,
                                       std::span<const std::optional<EdgeWeighting>> block_weightings) {
  if (const std::string why = basic_violation(g); !why.empty()) throw PreconditionError(why);
  const BlockDecomposition bd = blocks_and_cut_vertices(g);
  if (block_weightings.size() != bd.blocks.size()) {
    throw InvalidArgument("expected one optional weighting per block (" + std::to_string(bd.blocks.size()) + ")");
  }

  EdgeWeighting fixed{2, std::vector<Weight>(static_cast<std::size_t>(g.edge_count()), 1)};
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (!block_weightings[b]) continue;
    const std::vector<Vertex> vertices = block_vertices(g, bd.blocks[b]);
    const Subgraph sub = induced_subgraph(g, vertices);
    const EdgeWeighting& supplied = *block_weightings[b];
    validate_weighting(sub.graph, supplied);
    const std::string name = "block " + std::to_string(b);
    detail::require(supplied.k <= 2, name + ": the supplied weighting must use weights 1 and 2 only");
    detail::require(static_cast<bool>(is_proper(sub.graph, supplied)), name + ": the supplied weighting is not proper");
    for (Vertex v : vertices) {
      if (!std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v)) continue;
      for (const Incidence& inc : g.incident(v)) {
        detail::require(g.degree(inc.neighbor) <= 2, name + ": cut vertex " + std::to_string(v) + " has neighbour " +
                                                         std::to_string(inc.neighbor) + " of degree above 2");
      }
    }
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
      fixed.weights[static_cast<std::size_t>(sub.parent_edge[static_cast<std::size_t>(e)])] = supplied[e];
    }
  }

  std::vector<std::vector<EdgeId>> forward;
  std::vector<std::vector<EdgeId>> backward;
  for (const BlockInfo& block : ordered_blocks(g, bd)) {
    const auto it = std::find(bd.blocks.begin(), bd.blocks.end(), block.edges);
    if (block_weightings[static_cast<std::size_t>(it - bd.blocks.begin())]) continue;
    if (!block.cycle) {
      throw PreconditionError("the block containing edge " + std::to_string(block.edges.front()) +
                              " is not a cycle and no weighting was supplied for it");
    }
    forward.push_back(cycle_walk(g, block, false));
    backward.push_back(cycle_walk(g, block, true));
  }

  DirectionSearch search(g, std::move(forward), std::move(backward), std::move(fixed));
  if (!search.run()) {
    throw ProofViolation("no choice of directions for the 2,2,1,1 cycle patterns gives a proper weighting");
  }
  detail::certify(g, search.weighting(), "compose_block_weightings");
  return search.weighting();
}

}  // namespace vcew
