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

#include "vcew/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "vcew/error.hpp"

namespace vcew {

Graph::Graph(Vertex vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InvalidArgument("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InvalidArgument("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                            std::to_string(vertex_count_ - 1));
    }
    if (e.u == e.v) throw InvalidArgument("edge " + std::to_string(i) + " is a loop");
    if (e.u > e.v) std::swap(e.u, e.v);
  }

  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw InvalidArgument("parallel edge " + std::to_string(it->u) + "-" + std::to_string(it->v));
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto id = static_cast<EdgeId>(i);
    adjacency_[static_cast<std::size_t>(edges_[i].u)].push_back({edges_[i].v, id});
    adjacency_[static_cast<std::size_t>(edges_[i].v)].push_back({edges_[i].u, id});
  }
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  const Vertex scan = degree(a) <= degree(b) ? a : b;
  const Vertex target = scan == a ? b : a;
  for (const Incidence& inc : incident(scan)) {
    if (inc.neighbor == target) return inc.edge;
  }
  return std::nullopt;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (vertex_count_ == 0) return 0;
  int best = degree(0);
  for (Vertex v = 1; v < vertex_count_; ++v) best = std::min(best, degree(v));
  return best;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.vertex_count()) throw InvalidArgument("vertex out of range");
    local[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }

  Subgraph sub;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Vertex a = local[static_cast<std::size_t>(edge.u)];
    const Vertex b = local[static_cast<std::size_t>(edge.v)];
    if (a >= 0 && b >= 0) {
      edges.push_back({a, b});
      sub.parent_edge.push_back(e);
    }
  }
  sub.graph = Graph(static_cast<Vertex>(keep.size()), std::move(edges));
  sub.parent_vertex = std::move(keep);
  return sub;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
    gone[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) degrees[static_cast<std::size_t>(v)] = g.degree(v);
  return degrees;
}

std::size_t Bipartition::count(Side s) const {
  return static_cast<std::size_t>(std::count(side.begin(), side.end(), s));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (colour[static_cast<std::size_t>(root)] >= 0) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(x)) {
        int& c = colour[static_cast<std::size_t>(inc.neighbor)];
        if (c < 0) {
          c = 1 - colour[static_cast<std::size_t>(x)];
          queue.push_back(inc.neighbor);
        } else if (c == colour[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.side.reserve(n);
  for (int c : colour) result.side.push_back(c == 0 ? Side::U : Side::W);
  return result;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> component;
    seen[static_cast<std::size_t>(root)] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      component.push_back(x);
      for (const Incidence& inc : g.incident(x)) {
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incident(x)) {
      int& d = dist[static_cast<std::size_t>(inc.neighbor)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  const int d = distances_from(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) {
    throw InvalidArgument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                          " are in different components");
  }
  return d;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const Vertex nh = h.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) * static_cast<std::size_t>(nh) +
                static_cast<std::size_t>(h.edge_count()) * static_cast<std::size_t>(g.vertex_count()));
  for (Vertex hv = 0; hv < nh; ++hv) {
    for (const Edge& e : g.edges()) edges.push_back({e.u * nh + hv, e.v * nh + hv});
  }
  for (Vertex gv = 0; gv < g.vertex_count(); ++gv) {
    for (const Edge& e : h.edges()) edges.push_back({gv * nh + e.u, gv * nh + e.v});
  }
  return Graph(g.vertex_count() * nh, std::move(edges));
}

EdgeId product_edge_from_g(const Graph& g, const Graph&, EdgeId e, Vertex hv) {
  return hv * g.edge_count() + e;
}

EdgeId product_edge_from_h(const Graph& g, const Graph& h, EdgeId e, Vertex gv) {
  return h.vertex_count() * g.edge_count() + gv * h.edge_count() + e;
}

}  // namespace vcew
