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
#include <numeric>
#include <set>
#include <string>

#include "vcew/classifiers.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"
#include "vcew/weighting.hpp"

namespace vcew {

namespace {

class EdgeClasses {
 public:
  explicit EdgeClasses(std::size_t count) : parent_(count) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Component index of every vertex in the spanning subgraph on the marked edges.
std::vector<Vertex> layer_index(const Graph& g, const std::vector<bool>& marked, bool want, Vertex& count) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
  count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (index[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    index[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(x)) {
        if (marked[static_cast<std::size_t>(inc.edge)] != want || index[static_cast<std::size_t>(inc.neighbor)] >= 0) {
          continue;
        }
        index[static_cast<std::size_t>(inc.neighbor)] = count;
        stack.push_back(inc.neighbor);
      }
    }
    ++count;
  }
  return index;
}

Graph quotient(const Graph& g, const std::vector<bool>& marked, bool want, const std::vector<Vertex>& index,
               Vertex count, bool& loop) {
  std::set<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (marked[static_cast<std::size_t>(e)] != want) continue;
    const Vertex a = index[static_cast<std::size_t>(g.edge(e).u)];
    const Vertex b = index[static_cast<std::size_t>(g.edge(e).v)];
    if (a == b) {
      loop = true;
      return Graph(count);
    }
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  return Graph(count, {edges.begin(), edges.end()});
}

// Verifies g = F1 x F2 for the split "edges of `cls`" (F1) against the rest.
std::optional<ProductFactors> try_split(const Graph& g, const std::vector<bool>& in_class) {
  Vertex n1 = 0;
  Vertex n2 = 0;
  const std::vector<Vertex> c1 = layer_index(g, in_class, false, n1);
  const std::vector<Vertex> c2 = layer_index(g, in_class, true, n2);
  if (n1 < 2 || n2 < 2 || n1 * n2 != g.vertex_count()) return std::nullopt;
  bool loop = false;
  Graph f1 = quotient(g, in_class, true, c1, n1, loop);
  Graph f2 = quotient(g, in_class, false, c2, n2, loop);
  if (loop) return std::nullopt;

  ProductFactors out{std::move(f1), std::move(f2), {}};
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto a = c1[static_cast<std::size_t>(x)];
    const auto b = c2[static_cast<std::size_t>(x)];
    const auto code = static_cast<std::size_t>(a * n2 + b);
    if (used[code]) return std::nullopt;
    used[code] = true;
    out.coordinates.emplace_back(a, b);
  }
  const Graph product = cartesian_product(out.first, out.second);
  if (product.edge_count() != g.edge_count()) return std::nullopt;
  for (const Edge& e : g.edges()) {
    const auto [a, b] = out.coordinates[static_cast<std::size_t>(e.u)];
    const auto [c, d] = out.coordinates[static_cast<std::size_t>(e.v)];
    if (!product.adjacent(a * n2 + b, c * n2 + d)) return std::nullopt;
  }
  return out;
}

std::string vertex_detail(const char* what, Vertex v) { return std::string(what) + " v=" + std::to_string(v); }

std::optional<BoundCertificate> bipartite_rule(const Graph& g, const Bipartition& parts) {
  const int delta = g.min_degree();
  if (delta == 1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 1) return BoundCertificate{2, BoundRule::BipartiteMinDegreeOne, vertex_detail("leaf", v)};
    }
  }
  if (const int kappa = vertex_connectivity(g); kappa >= 3) {
    return BoundCertificate{2, BoundRule::BipartiteThreeConnected, "kappa=" + std::to_string(kappa)};
  }
  const std::size_t u = parts.count(Side::U);
  const std::size_t w = parts.count(Side::W);
  if (u % 2 == 0 || w % 2 == 0) {
    return BoundCertificate{2, BoundRule::BipartiteEvenPart,
                            "parts |U|=" + std::to_string(u) + " |W|=" + std::to_string(w)};
  }

  auto isolated_degree = [&](Vertex v) {
    return std::none_of(g.incident(v).begin(), g.incident(v).end(),
                        [&](const Incidence& inc) { return g.degree(inc.neighbor) == g.degree(v); });
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!isolated_degree(v)) continue;
    std::vector<Vertex> closed{v};
    for (const Incidence& inc : g.incident(v)) closed.push_back(inc.neighbor);
    const Graph rest = remove_vertices(g, closed).graph;
    if (rest.vertex_count() > 0 && is_connected(rest)) {
      return BoundCertificate{2, BoundRule::BipartiteClosedNeighbourhood, vertex_detail("G-N[v] connected at", v)};
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != delta || !isolated_degree(v)) continue;
    const std::vector<Vertex> removed{v};
    if (is_connected(remove_vertices(g, removed).graph)) {
      return BoundCertificate{2, BoundRule::BipartiteMinDegreeVertex, vertex_detail("G-v connected at", v)};
    }
  }
  if (const std::vector<Vertex> dominant = dominant_vertices(g); !dominant.empty()) {
    return BoundCertificate{2, BoundRule::BipartiteDominantVertex, vertex_detail("dominant", dominant.front())};
  }
  if (const auto factors = cartesian_factors(g)) {
    return BoundCertificate{2, BoundRule::BipartiteProduct,
                            "factors of order " + std::to_string(factors->first.vertex_count()) + " and " +
                                std::to_string(factors->second.vertex_count())};
  }
  return std::nullopt;
}

bool has_single_edge_msp(const Graph& g) {
  const MspDecomposition msp = maximal_simple_paths(g);
  return std::any_of(msp.paths.begin(), msp.paths.end(), [](const MaximalSimplePath& p) { return p.length() == 1; });
}

class ThreeColoring {
 public:
  explicit ThreeColoring(const Graph& g) : g_(g), color_(static_cast<std::size_t>(g.vertex_count()), -1) {
    order_.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return place(0); }

 private:
  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    // Colour values are interchangeable, so never open more than one new one.
    const int limit = std::min(3, 1 + *std::max_element(color_.begin(), color_.end()) + 1);
    for (int c = 0; c < limit; ++c) {
      const bool clash = std::any_of(g_.incident(v).begin(), g_.incident(v).end(), [&](const Incidence& inc) {
        return color_[static_cast<std::size_t>(inc.neighbor)] == c;
      });
      if (clash) continue;
      color_[static_cast<std::size_t>(v)] = c;
      if (place(i + 1)) return true;
      color_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> color_;
  std::vector<Vertex> order_;
};

}  // namespace

std::string_view to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::NoEqualAdjacentDegrees:
      return "no adjacent vertices of equal degree";
    case BoundRule::BipartiteMinDegreeOne:
      return "bipartite with δ=1";
    case BoundRule::BipartiteThreeConnected:
      return "3-connected bipartite";
    case BoundRule::BipartiteEvenPart:
      return "bipartite with a part of even size";
    case BoundRule::BipartiteClosedNeighbourhood:
      return "bipartite, vertex degree unique in its neighbourhood, G-N[v] connected";
    case BoundRule::BipartiteMinDegreeVertex:
      return "bipartite, minimum-degree vertex unique in its neighbourhood, G-v connected";
    case BoundRule::BipartiteDominantVertex:
      return "bipartite with a dominant vertex, G-v connected";
    case BoundRule::BipartiteProduct:
      return "cartesian product of bipartite graphs";
    case BoundRule::CycleBlocks:
      return "every block is a cycle";
    case BoundRule::MspPatterns:
      return "maximal simple path patterns";
    case BoundRule::NoSingleEdgeMsp:
      return "no single-edge maximal simple path";
    case BoundRule::ThreeColorable:
      return "3-colorable";
    case BoundRule::GeneralBound:
      return "general bound";
  }
  return "unknown";
}

bool is_bad_cycle(const Graph& g) { return is_cycle_graph(g) && g.vertex_count() % 4 != 0; }

bool is_three_colorable(const Graph& g) { return ThreeColoring(g).run(); }

std::optional<ProductFactors> cartesian_factors(const Graph& g) {
  if (g.vertex_count() < 4 || !is_connected(g)) return std::nullopt;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<std::vector<int>> dist(n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) dist[static_cast<std::size_t>(v)] = distances_from(g, v);
  auto d = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  EdgeClasses classes(m);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      const Edge& x = g.edge(e);
      const Edge& y = g.edge(f);
      if (d(x.u, y.u) + d(x.v, y.v) != d(x.u, y.v) + d(x.v, y.u)) {
        classes.join(static_cast<std::size_t>(e), static_cast<std::size_t>(f));
      }
    }
  }
  // Adjacent edges xy, xz that lie on no common square.
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto around = g.incident(x);
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        const Vertex y = around[i].neighbor;
        const Vertex z = around[j].neighbor;
        if (g.adjacent(y, z)) continue;
        const bool square = std::any_of(g.incident(y).begin(), g.incident(y).end(), [&](const Incidence& inc) {
          return inc.neighbor != x && g.adjacent(inc.neighbor, z);
        });
        if (!square) classes.join(static_cast<std::size_t>(around[i].edge), static_cast<std::size_t>(around[j].edge));
      }
    }
  }

  std::vector<std::size_t> roots;
  for (std::size_t e = 0; e < m; ++e) {
    if (classes.find(e) == e) roots.push_back(e);
  }
  if (roots.size() < 2) return std::nullopt;
  for (std::size_t root : roots) {
    std::vector<bool> in_class(m);
    for (std::size_t e = 0; e < m; ++e) in_class[e] = classes.find(e) == root;
    if (auto factors = try_split(g, in_class)) return factors;
  }
  return std::nullopt;
}

BoundCertificate mu_upper_bound(const Graph& g) {
  require_weightable(g);
  if (admits_vc1(g)) return {1, BoundRule::NoEqualAdjacentDegrees, {}};
  if (const auto parts = bipartition(g)) {
    if (auto cert = bipartite_rule(g, *parts)) return *cert;
  }
  const BlockDecomposition bd = blocks_and_cut_vertices(g);
  if (bd.blocks.size() >= 2 && cycle_block_violation(g).empty()) {
    return {2, BoundRule::CycleBlocks, std::to_string(bd.blocks.size()) + " cycle blocks"};
  }
  if (msp_pattern_violation(g, MspVariant::A).empty()) return {2, BoundRule::MspPatterns, "variant A"};
  if (msp_pattern_violation(g, MspVariant::B).empty()) return {2, BoundRule::MspPatterns, "variant B"};
  if (!is_bad_cycle(g) && !has_single_edge_msp(g)) return {2, BoundRule::NoSingleEdgeMsp, {}};
  if (is_three_colorable(g)) return {3, BoundRule::ThreeColorable, {}};
  return {5, BoundRule::GeneralBound, {}};
}

}  // namespace vcew
