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

// Canonical labelling by colour refinement followed by a branch-and-bound
// search over cell-respecting orderings, and orderly growth of connected
// graphs one vertex at a time.

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>

#include "vcew/error.hpp"
#include "vcew/families.hpp"

namespace vcew {

namespace {

constexpr int kMaxCanonicalVertices = 11;
constexpr int kMaxEnumerationVertices = 8;

using AdjacencyRows = std::array<std::uint16_t, kMaxCanonicalVertices>;

// Degree-seeded 1-WL colour refinement. Colours are renumbered by sorted
// signature after every round, so the final colouring is label-invariant.
std::vector<int> refine_colors(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> color(n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (const Incidence& inc : g.incident(v)) around.push_back(color[static_cast<std::size_t>(inc.neighbor)]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& sig : signature) rank.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = rank[signature[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<int> color) : n_(g.vertex_count()), color_(std::move(color)) {
    rows_.fill(0);
    for (const Edge& e : g.edges()) {
      rows_[static_cast<std::size_t>(e.u)] |= static_cast<std::uint16_t>(1u << e.v);
      rows_[static_cast<std::size_t>(e.v)] |= static_cast<std::uint16_t>(1u << e.u);
    }
    // Position p must hold a vertex whose colour is the p-th smallest.
    cell_of_position_ = color_;
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    pair_count_ = n_ * (n_ - 1) / 2;
  }

  void run() {
    std::vector<Vertex> order;
    std::uint16_t used = 0;
    descend(order, used, 0);
  }

  std::uint64_t best_code() const { return best_code_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // Pairs are ranked by (j, i) with i < j; earlier pairs are more significant.
  void descend(std::vector<Vertex>& order, std::uint16_t used, std::uint64_t prefix) {
    const int j = static_cast<int>(order.size());
    if (j == n_) {
      if (!have_best_ || prefix > best_code_) {
        have_best_ = true;
        best_code_ = prefix;
        best_order_ = order;
      }
      return;
    }
    const int cell = cell_of_position_[static_cast<std::size_t>(j)];
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1u || color_[static_cast<std::size_t>(v)] != cell) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < j; ++i) {
        const Vertex x = order[static_cast<std::size_t>(i)];
        if ((rows_[static_cast<std::size_t>(v)] >> x) & 1u) {
          next |= std::uint64_t{1} << (pair_count_ - 1 - (j * (j - 1) / 2 + i));
        }
      }
      if (have_best_) {
        const int fixed = (j + 1) * j / 2;
        const int shift = pair_count_ - fixed;
        if ((next >> shift) < (best_code_ >> shift)) continue;
      }
      order.push_back(v);
      descend(order, static_cast<std::uint16_t>(used | (1u << v)), next);
      order.pop_back();
    }
  }

  int n_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  AdjacencyRows rows_{};
  int pair_count_ = 0;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_order_;
};

std::vector<Graph> grow(const std::vector<Graph>& smaller, int n) {
  std::map<std::pair<EdgeId, std::uint64_t>, Graph> seen;
  const Vertex added = n - 1;
  for (const Graph& base : smaller) {
    for (std::uint32_t mask = 1; mask < (1u << added); ++mask) {
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      for (Vertex x = 0; x < added; ++x) {
        if ((mask >> x) & 1u) edges.push_back({x, added});
      }
      CanonicalForm form = canonical_form(Graph(n, std::move(edges)));
      seen.try_emplace({form.graph.edge_count(), form.code}, std::move(form.graph));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, graph] : seen) out.push_back(std::move(graph));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices) {
    throw InvalidArgument("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices) +
                          " vertices");
  }
  CanonicalSearch search(g, refine_colors(g));
  search.run();
  std::vector<Vertex> position(static_cast<std::size_t>(g.vertex_count()));
  const auto& order = search.best_order();
  for (std::size_t p = 0; p < order.size(); ++p) position[static_cast<std::size_t>(order[p])] = static_cast<Vertex>(p);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = position[static_cast<std::size_t>(e.u)];
    const Vertex b = position[static_cast<std::size_t>(e.v)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  return {Graph(g.vertex_count(), std::move(edges)), search.best_code()};
}

const std::vector<Graph>& enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw InvalidArgument("enumerate_connected supports 1 <= n <= " + std::to_string(kMaxEnumerationVertices));
  }
  static std::mutex mutex;
  static std::array<std::vector<Graph>, kMaxEnumerationVertices + 1> cache;
  static int computed = 0;
  std::lock_guard lock(mutex);
  if (computed == 0) {
    cache[1] = {Graph(1)};
    computed = 1;
  }
  while (computed < n) {
    ++computed;
    cache[static_cast<std::size_t>(computed)] = grow(cache[static_cast<std::size_t>(computed - 1)], computed);
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace vcew
