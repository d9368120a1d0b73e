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
#include <vector>

#include "vcew/error.hpp"
#include "vcew/graph.hpp"

namespace vcew {

namespace {

// Unit-capacity split network: vertex x becomes in-node 2x and out-node 2x+1
// joined by an arc of capacity one, so that s-t flows count internally
// vertex-disjoint paths.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : node_count_(2 * static_cast<std::size_t>(g.vertex_count())) {
    head_.assign(node_count_, -1);
    for (Vertex x = 0; x < g.vertex_count(); ++x) add_arc(2 * x, 2 * x + 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
    base_capacity_ = capacity_;
    parent_arc_.resize(node_count_);
    queue_.reserve(node_count_);
  }

  int max_flow(Vertex s, Vertex t, int cap) {
    capacity_ = base_capacity_;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    while (flow < cap && augment(source, sink)) ++flow;
    return flow;
  }

 private:
  void add_arc(int from, int to) {
    push(from, to, 1);
    push(to, from, 0);
  }

  void push(int from, int to, int cap) {
    target_.push_back(to);
    capacity_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(target_.size()) - 1;
  }

  bool augment(int source, int sink) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -2);
    parent_arc_[static_cast<std::size_t>(source)] = -1;
    queue_.clear();
    queue_.push_back(source);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int x = queue_[qi];
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
        const int y = target_[static_cast<std::size_t>(a)];
        if (capacity_[static_cast<std::size_t>(a)] <= 0 || parent_arc_[static_cast<std::size_t>(y)] != -2) continue;
        parent_arc_[static_cast<std::size_t>(y)] = a;
        if (y == sink) {
          for (int node = sink; node != source;) {
            const int arc = parent_arc_[static_cast<std::size_t>(node)];
            --capacity_[static_cast<std::size_t>(arc)];
            ++capacity_[static_cast<std::size_t>(arc ^ 1)];
            node = target_[static_cast<std::size_t>(arc ^ 1)];
          }
          return true;
        }
        queue_.push_back(y);
      }
    }
    return false;
  }

  std::size_t node_count_;
  std::vector<int> head_;
  std::vector<int> target_;
  std::vector<int> next_;
  std::vector<int> capacity_;
  std::vector<int> base_capacity_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (s == t || g.adjacent(s, t)) throw InvalidArgument("local connectivity needs non-adjacent distinct vertices");
  SplitNetwork network(g);
  return network.max_flow(s, t, cap);
}

// Esfahanian-Hakimi: with v of minimum degree, a minimum separator either
// misses v (then it separates v from some non-neighbour) or contains v (then
// it separates two non-adjacent neighbours of v).
int vertex_connectivity(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (static_cast<long long>(g.edge_count()) * 2 == static_cast<long long>(n) * (n - 1)) return n - 1;

  Vertex v = 0;
  for (Vertex x = 1; x < n; ++x) {
    if (g.degree(x) < g.degree(v)) v = x;
  }

  SplitNetwork network(g);
  int best = g.degree(v);
  for (Vertex w = 0; w < n && best > 0; ++w) {
    if (w == v || g.adjacent(v, w)) continue;
    best = std::min(best, network.max_flow(v, w, best));
  }
  const auto nbrs = g.incident(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const Vertex x = nbrs[i].neighbor;
      const Vertex y = nbrs[j].neighbor;
      if (g.adjacent(x, y)) continue;
      best = std::min(best, network.max_flow(x, y, best));
    }
  }
  return best;
}

}  // namespace vcew
