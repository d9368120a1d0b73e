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

#include "vcew/oracle.hpp"

#include <atomic>
#include <deque>
#include <limits>
#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "vcew/error.hpp"
#include "vcew/parallel.hpp"

namespace vcew {

namespace {

constexpr std::size_t kNoPrefix = std::numeric_limits<std::size_t>::max();

// Backtracking over edges in search order. A partial assignment is cut as
// soon as a vertex whose edges are all assigned has the same colour as an
// equally saturated neighbour, or violates its parity constraint.
class Searcher {
 public:
  Searcher(const Graph& g, int k, const SearchConstraints& constraints)
      : g_(g), k_(k), order_(search_edge_order(g)) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const std::size_t m = order_.size();
    fixed_.assign(m, 0);
    for (std::size_t pos = 0; pos < m; ++pos) {
      if (auto it = constraints.fixed_weights.find(order_[pos]); it != constraints.fixed_weights.end()) {
        fixed_[pos] = it->second;
      }
    }
    parity_.assign(n, 0);
    if (!constraints.parity.empty()) {
      for (std::size_t v = 0; v < n; ++v) {
        if (constraints.parity[v]) parity_[v] = *constraints.parity[v] == Parity::Odd ? 1 : 2;
      }
    }
    sum_.assign(n, 0);
    remaining_.resize(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) remaining_[static_cast<std::size_t>(v)] = g.degree(v);
    assigned_.assign(m, 0);
  }

  std::size_t edge_count() const { return order_.size(); }

  // Weighting in edge-id order from the current assignment.
  EdgeWeighting current() const {
    EdgeWeighting w;
    w.k = k_;
    w.weights.resize(order_.size());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      w.weights[static_cast<std::size_t>(order_[pos])] = assigned_[pos];
    }
    return w;
  }

  bool allowed(std::size_t pos, Weight w) const { return fixed_[pos] == 0 || fixed_[pos] == w; }

  bool place(std::size_t pos, Weight w) {
    const Edge& e = g_.edge(order_[pos]);
    assigned_[pos] = w;
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    sum_[u] += w;
    sum_[v] += w;
    --remaining_[u];
    --remaining_[v];
    bool ok = true;
    if (remaining_[u] == 0) ok = saturated_ok(e.u);
    if (ok && remaining_[v] == 0) ok = saturated_ok(e.v);
    return ok;
  }

  void undo(std::size_t pos) {
    const Edge& e = g_.edge(order_[pos]);
    const Weight w = assigned_[pos];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    sum_[u] -= w;
    sum_[v] -= w;
    ++remaining_[u];
    ++remaining_[v];
    assigned_[pos] = 0;
  }

  // Depth-first from `pos`; `on_leaf` returns true to stop, `abort` is polled
  // at each node. Returns true if stopped.
  template <class Leaf, class Abort>
  bool dfs(std::size_t pos, Leaf& on_leaf, Abort& abort) {
    if (pos == order_.size()) return on_leaf();
    if (abort()) return true;
    for (Weight w = 1; w <= k_; ++w) {
      if (!allowed(pos, w)) continue;
      const bool ok = place(pos, w);
      const bool stop = ok && dfs(pos + 1, on_leaf, abort);
      undo(pos);
      if (stop) return true;
    }
    return false;
  }

 private:
  bool saturated_ok(Vertex x) const {
    const auto xi = static_cast<std::size_t>(x);
    if (parity_[xi] != 0) {
      const bool odd = (sum_[xi] & 1) != 0;
      if (odd != (parity_[xi] == 1)) return false;
    }
    for (const Incidence& inc : g_.incident(x)) {
      const auto y = static_cast<std::size_t>(inc.neighbor);
      if (remaining_[y] == 0 && sum_[y] == sum_[xi]) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  std::vector<EdgeId> order_;
  std::vector<Weight> fixed_;
  std::vector<std::uint8_t> parity_;
  std::vector<Color> sum_;
  std::vector<int> remaining_;
  std::vector<Weight> assigned_;
};

void validate_constraints(const Graph& g, int k, const SearchConstraints& constraints) {
  if (k < 1) throw InvalidArgument("k must be positive");
  for (const auto& [e, w] : constraints.fixed_weights) {
    if (e < 0 || e >= g.edge_count()) throw InvalidArgument("fixed weight on unknown edge " + std::to_string(e));
    if (w < 1 || w > k) throw InvalidArgument("fixed weight outside 1..k on edge " + std::to_string(e));
  }
  if (!constraints.parity.empty() && constraints.parity.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("parity constraints must cover every vertex");
  }
}

// Number of leading edges to enumerate as independent work items.
std::size_t prefix_length(std::size_t edges, int k, unsigned threads) {
  if (threads <= 1 || edges < 18) return 0;
  std::size_t length = 0;
  std::size_t items = 1;
  while (items < 16u * threads && length < edges / 2) {
    items *= static_cast<std::size_t>(k);
    ++length;
  }
  return length;
}

std::optional<EdgeWeighting> find_parallel(const Graph& g, int k, const SearchConstraints& constraints,
                                           std::size_t length, unsigned threads) {
  std::size_t items = 1;
  for (std::size_t i = 0; i < length; ++i) items *= static_cast<std::size_t>(k);

  std::atomic<std::size_t> best{kNoPrefix};
  std::vector<std::optional<EdgeWeighting>> found(items);

  parallel_for(
      items,
      [&](std::size_t item) {
        if (best.load(std::memory_order_relaxed) < item) return;
        Searcher searcher(g, k, constraints);
        // Most significant digit first, so item order is lexicographic order.
        std::vector<Weight> digits(length);
        std::size_t rest = item;
        for (std::size_t i = length; i-- > 0;) {
          digits[i] = static_cast<Weight>(rest % static_cast<std::size_t>(k)) + 1;
          rest /= static_cast<std::size_t>(k);
        }
        std::size_t placed = 0;
        bool ok = true;
        for (; placed < length && ok; ++placed) {
          ok = searcher.allowed(placed, digits[placed]) && searcher.place(placed, digits[placed]);
        }
        if (!ok) return;
        auto on_leaf = [&] {
          found[item] = searcher.current();
          std::size_t current = best.load();
          while (item < current && !best.compare_exchange_weak(current, item)) {
          }
          return true;
        };
        auto abort = [&] { return best.load(std::memory_order_relaxed) < item; };
        searcher.dfs(length, on_leaf, abort);
      },
      threads);

  const std::size_t winner = best.load();
  if (winner == kNoPrefix) return std::nullopt;
  return found[winner];
}

}  // namespace

void check_search_guard(const Graph& g, int k, const SearchOptions& options) {
  if (options.force || k <= 1) return;
  const int limit = k == 2 ? kGuardEdgesK2 : kGuardEdgesK3;
  if (g.edge_count() > limit) {
    throw SearchGuardExceeded("refusing a k=" + std::to_string(k) + " search on " +
                              std::to_string(g.edge_count()) + " edges (guard " + std::to_string(limit) +
                              "); pass force to override");
  }
}

std::vector<EdgeId> search_edge_order(const Graph& g) {
  std::vector<EdgeId> order;
  order.reserve(static_cast<std::size_t>(g.edge_count()));
  std::vector<bool> listed(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(x)) {
        if (!listed[static_cast<std::size_t>(inc.edge)]) {
          listed[static_cast<std::size_t>(inc.edge)] = true;
          order.push_back(inc.edge);
        }
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = true;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  return order;
}

std::optional<EdgeWeighting> find_weighting(const Graph& g, int k, const SearchConstraints& constraints,
                                            const SearchOptions& options) {
  require_weightable(g);
  validate_constraints(g, k, constraints);
  check_search_guard(g, k, options);

  const unsigned threads = options.threads == 0 ? configured_threads() : options.threads;
  if (const std::size_t length = prefix_length(static_cast<std::size_t>(g.edge_count()), k, threads); length > 0) {
    return find_parallel(g, k, constraints, length, threads);
  }

  Searcher searcher(g, k, constraints);
  std::optional<EdgeWeighting> result;
  auto on_leaf = [&] {
    result = searcher.current();
    return true;
  };
  auto never = [] { return false; };
  searcher.dfs(0, on_leaf, never);
  return result;
}

std::size_t for_each_proper_weighting(const Graph& g, int k, const SearchConstraints& constraints,
                                      const std::function<bool(const EdgeWeighting&)>& visit,
                                      const SearchOptions& options) {
  require_weightable(g);
  validate_constraints(g, k, constraints);
  check_search_guard(g, k, options);

  Searcher searcher(g, k, constraints);
  std::size_t visited = 0;
  auto on_leaf = [&] {
    ++visited;
    return !visit(searcher.current());
  };
  auto never = [] { return false; };
  searcher.dfs(0, on_leaf, never);
  return visited;
}

MuResult mu_exact_with_witness(const Graph& g, int k_max, const SearchOptions& options) {
  if (k_max < 1) throw InvalidArgument("k_max must be positive");
  const auto components = connected_components(g);
  if (components.empty()) throw InvalidArgument("graph has no vertices");
  for (const auto& c : components) {
    if (c.size() < 3) throw InvalidArgument("every component needs at least three vertices");
  }

  MuResult result;
  result.witness.weights.assign(static_cast<std::size_t>(g.edge_count()), 1);
  for (const auto& component : components) {
    const Subgraph sub = induced_subgraph(g, component);
    bool found = false;
    for (int k = 1; k <= k_max && !found; ++k) {
      if (auto w = find_weighting(sub.graph, k, {}, options)) {
        result.mu = std::max(result.mu, k);
        for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
          result.witness.weights[static_cast<std::size_t>(sub.parent_edge[static_cast<std::size_t>(e)])] = (*w)[e];
        }
        found = true;
      }
    }
    if (!found) {
      throw NotFoundWithinCap("no proper k-weighting with k <= " + std::to_string(k_max) +
                              " on a component of " + std::to_string(component.size()) +
                              " vertices; if k_max >= 5 this contradicts the bound mu <= 5");
    }
  }
  result.witness.k = result.mu;
  return result;
}

int mu_exact(const Graph& g, int k_max, const SearchOptions& options) {
  return mu_exact_with_witness(g, k_max, options).mu;
}

std::string_view to_string(EndEdgeBehavior b) {
  switch (b) {
    case EndEdgeBehavior::Same:
      return "same";
    case EndEdgeBehavior::Different:
      return "different";
    case EndEdgeBehavior::Free:
      return "free";
  }
  return "?";
}

EndEdgeBehavior end_edge_behavior(int length) {
  if (length < 4) throw InvalidArgument("end-edge behaviour needs a path with at least 4 edges");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) edges.push_back({i, i + 1});
  const Graph path(length + 1, std::move(edges));
  const EdgeId last = length - 1;

  std::set<std::pair<Weight, Weight>> seen;
  SearchOptions options;
  options.force = true;
  for_each_proper_weighting(
      path, 2, {},
      [&](const EdgeWeighting& w) {
        seen.insert({w[0], w[last]});
        return true;
      },
      options);

  const bool all_equal = !seen.empty() && std::all_of(seen.begin(), seen.end(), [](const auto& p) {
    return p.first == p.second;
  });
  const bool all_unequal = !seen.empty() && std::all_of(seen.begin(), seen.end(), [](const auto& p) {
    return p.first != p.second;
  });
  if (seen.size() == 4) return EndEdgeBehavior::Free;
  if (all_equal) return EndEdgeBehavior::Same;
  if (all_unequal) return EndEdgeBehavior::Different;
  throw Inconsistent("path of length " + std::to_string(length) + " shows " + std::to_string(seen.size()) +
                     " end-edge weight pairs, matching no category");
}

}  // namespace vcew
