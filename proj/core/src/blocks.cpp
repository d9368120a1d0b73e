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

struct Frame {
  Vertex vertex;
  EdgeId parent_edge;
  std::size_t next = 0;
};

}  // namespace

// Hopcroft-Tarjan with an explicit edge stack; iterative so that long paths
// do not exhaust the call stack.
BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("block decomposition needs a connected graph");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<EdgeId> edge_stack;
  BlockDecomposition result;
  int clock = 0;

  if (n == 0) return result;

  const Vertex root = 0;
  int root_children = 0;
  std::vector<Frame> stack{{root, -1}};
  disc[0] = low[0] = clock++;

  while (!stack.empty()) {
    Frame& top = stack.back();
    const Vertex v = top.vertex;
    const auto adj = g.incident(v);
    if (top.next < adj.size()) {
      const Incidence inc = adj[top.next++];
      if (inc.edge == top.parent_edge) continue;
      const auto w = static_cast<std::size_t>(inc.neighbor);
      if (disc[w] < 0) {
        edge_stack.push_back(inc.edge);
        disc[w] = low[w] = clock++;
        if (v == root) ++root_children;
        stack.push_back({inc.neighbor, inc.edge});
      } else if (disc[w] < disc[static_cast<std::size_t>(v)]) {
        edge_stack.push_back(inc.edge);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[w]);
      }
      continue;
    }

    const EdgeId tree_edge = top.parent_edge;
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex parent = stack.back().vertex;
    auto& low_parent = low[static_cast<std::size_t>(parent)];
    low_parent = std::min(low_parent, low[static_cast<std::size_t>(v)]);
    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
      if (parent != root) is_cut[static_cast<std::size_t>(parent)] = true;
      std::vector<EdgeId> block;
      while (true) {
        const EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == tree_edge) break;
      }
      std::sort(block.begin(), block.end());
      result.blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) is_cut[0] = true;

  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) result.cut_vertices.push_back(v);
  }
  return result;
}

std::vector<Vertex> block_vertices(const Graph& g, std::span<const EdgeId> block) {
  std::vector<Vertex> vertices;
  vertices.reserve(block.size() * 2);
  for (EdgeId e : block) {
    vertices.push_back(g.edge(e).u);
    vertices.push_back(g.edge(e).v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace vcew
