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


#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vcew::testing {

std::vector<long> brute_colors(const Graph& g, const std::vector<int>& weights) {
  std::vector<long> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Edge e = g.edges()[i];
    colors[static_cast<std::size_t>(e.u)] += weights[i];
    colors[static_cast<std::size_t>(e.v)] += weights[i];
  }
  return colors;
}

bool brute_proper(const Graph& g, const std::vector<int>& weights) {
  const std::vector<long> c = brute_colors(g, weights);
  for (const Edge& e : g.edges()) {
    if (c[static_cast<std::size_t>(e.u)] == c[static_cast<std::size_t>(e.v)]) return false;
  }
  return true;
}

std::optional<std::vector<int>> brute_weighting(const Graph& g, int k) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<int> w(m, 1);
  while (true) {
    if (brute_proper(g, w)) return w;
    std::size_t i = 0;
    while (i < m && w[i] == k) w[i++] = 1;
    if (i == m) return std::nullopt;
    ++w[i];
  }
}

std::optional<int> brute_mu(const Graph& g, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    if (brute_weighting(g, k)) return k;
  }
  return std::nullopt;
}

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(static_cast<std::size_t>(e.v));
    adj[static_cast<std::size_t>(e.v)].push_back(static_cast<std::size_t>(e.u));
  }
  std::size_t start = n;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == n) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!removed[y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == alive;
}

std::vector<std::vector<bool>> permuted(const std::vector<std::vector<bool>>& a, const std::vector<int>& p) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])] = a[i][j];
    }
  }
  return b;
}

}  // namespace

bool brute_connected(const Graph& g) {
  return connected_without(g, std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false));
}

int brute_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  for (int size = 0; size < n - 1; ++size) {
    std::vector<bool> pick(un, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    // prev_permutation walks every subset of the given size.
    do {
      if (!connected_without(g, pick)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::max(n - 1, 0);
}

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  return a;
}

int brute_connected_class_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) edges.push_back({pairs[b].first, pairs[b].second});
    }
    const Graph g(n, edges);
    if (!brute_connected(g)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (const Edge& e : edges) {
        int a = perm[static_cast<std::size_t>(e.u)];
        int c = perm[static_cast<std::size_t>(e.v)];
        if (a > c) std::swap(a, c);
        const auto idx = std::find(pairs.begin(), pairs.end(), std::make_pair(a, c)) - pairs.begin();
        code |= std::uint64_t{1} << idx;
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const auto a = adjacency_matrix(g);
  const auto b = adjacency_matrix(h);
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permuted(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool brute_three_colorable(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (color[static_cast<std::size_t>(e.u)] == color[static_cast<std::size_t>(e.v)]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && color[static_cast<std::size_t>(i)] == 2) color[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
    ++color[static_cast<std::size_t>(i)];
  }
}

std::vector<std::vector<bool>> brute_product_adjacency(const Graph& g, const Graph& h) {
  const auto ag = adjacency_matrix(g);
  const auto ah = adjacency_matrix(h);
  const auto ng = static_cast<std::size_t>(g.vertex_count());
  const auto nh = static_cast<std::size_t>(h.vertex_count());
  std::vector<std::vector<bool>> a(ng * nh, std::vector<bool>(ng * nh, false));
  for (std::size_t u1 = 0; u1 < ng; ++u1) {
    for (std::size_t v1 = 0; v1 < nh; ++v1) {
      for (std::size_t u2 = 0; u2 < ng; ++u2) {
        for (std::size_t v2 = 0; v2 < nh; ++v2) {
          const bool edge = (u1 == u2 && ah[v1][v2]) || (v1 == v2 && ag[u1][u2]);
          a[u1 * nh + v1][u2 * nh + v2] = edge;
        }
      }
    }
  }
  return a;
}

std::vector<std::vector<long>> brute_path_end_counts(int length) {
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, i + 1});
  const Graph p(length + 1, edges);
  std::vector<std::vector<long>> counts(2, std::vector<long>(2, 0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << length); ++mask) {
    std::vector<int> w(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) w[static_cast<std::size_t>(i)] = 1 + static_cast<int>((mask >> i) & 1U);
    if (brute_proper(p, w)) ++counts[static_cast<std::size_t>(w.front() - 1)][static_cast<std::size_t>(w.back() - 1)];
  }
  return counts;
}

}  // namespace vcew::testing
