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
#include <limits>
#include <random>
#include <string>

#include "vcew/error.hpp"
#include "vcew/families.hpp"

namespace vcew {

namespace {

// Uniform draw from [0, bound) by rejection on the raw 64-bit output, so the
// stream is identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

template <typename T>
void shuffle_prefix(std::vector<T>& items, std::size_t count, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, items.size() - i));
    std::swap(items[i], items[j]);
  }
}

Graph finish(int n, std::vector<Edge> tree, std::vector<Edge> candidates, std::size_t extra,
             std::mt19937_64& rng) {
  shuffle_prefix(candidates, extra, rng);
  tree.insert(tree.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(extra));
  for (Edge& e : tree) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(tree.begin(), tree.end());
  return Graph(n, std::move(tree));
}

void require_feasible(bool ok, int n, int m) {
  if (!ok) {
    throw InvalidArgument("no connected graph of the requested kind has n=" + std::to_string(n) +
                          " and m=" + std::to_string(m));
  }
}

}  // namespace

Graph random_connected_bipartite(int n, int m, std::uint64_t seed) {
  require_feasible(n >= 2 && m >= n - 1 && m <= (n / 2) * (n - n / 2), n, m);
  std::mt19937_64 rng(seed);
  std::vector<int> sizes;
  for (int s = 1; s <= n / 2; ++s) {
    if (s * (n - s) >= m) sizes.push_back(s);
  }
  const int s = sizes[static_cast<std::size_t>(uniform_below(rng, sizes.size()))];

  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
  shuffle_prefix(perm, perm.size(), rng);
  const auto us = static_cast<std::size_t>(s);

  std::vector<Edge> tree{{perm[0], perm[us]}};
  std::vector<std::vector<bool>> linked(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  linked[static_cast<std::size_t>(std::min(perm[0], perm[us]))][static_cast<std::size_t>(std::max(perm[0], perm[us]))] =
      true;
  std::vector<Vertex> in_u{perm[0]};
  std::vector<Vertex> in_w{perm[us]};
  auto attach = [&](Vertex x, std::vector<Vertex>& mine, const std::vector<Vertex>& other) {
    const Vertex y = other[static_cast<std::size_t>(uniform_below(rng, other.size()))];
    tree.push_back({x, y});
    linked[static_cast<std::size_t>(std::min(x, y))][static_cast<std::size_t>(std::max(x, y))] = true;
    mine.push_back(x);
  };
  for (std::size_t i = 1; i < us; ++i) attach(perm[i], in_u, in_w);
  for (std::size_t i = us + 1; i < perm.size(); ++i) attach(perm[i], in_w, in_u);

  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < us; ++i) {
    for (std::size_t j = us; j < perm.size(); ++j) {
      const Vertex a = std::min(perm[i], perm[j]);
      const Vertex b = std::max(perm[i], perm[j]);
      if (!linked[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) candidates.push_back({a, b});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  return finish(n, std::move(tree), std::move(candidates), static_cast<std::size_t>(m - (n - 1)), rng);
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  require_feasible(n >= 1 && m >= n - 1 && static_cast<long>(m) <= static_cast<long>(n) * (n - 1) / 2, n, m);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
  shuffle_prefix(perm, perm.size(), rng);

  std::vector<Edge> tree;
  std::vector<std::vector<bool>> linked(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (std::size_t i = 1; i < perm.size(); ++i) {
    const Vertex y = perm[static_cast<std::size_t>(uniform_below(rng, i))];
    const Vertex x = perm[i];
    tree.push_back({x, y});
    linked[static_cast<std::size_t>(std::min(x, y))][static_cast<std::size_t>(std::max(x, y))] = true;
  }
  std::vector<Edge> candidates;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!linked[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) candidates.push_back({a, b});
    }
  }
  return finish(n, std::move(tree), std::move(candidates), static_cast<std::size_t>(m - (n - 1)), rng);
}

Graph random_cactus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int first = 3 + static_cast<int>(uniform_below(rng, 6));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < first; ++i) edges.push_back({i, (i + 1) % first});
  Vertex n = first;
  const int more = 1 + static_cast<int>(uniform_below(rng, 3));
  for (int c = 0; c < more; ++c) {
    const int length = 3 + static_cast<int>(uniform_below(rng, 4));
    const auto at = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    Vertex previous = at;
    for (int i = 1; i < length; ++i) {
      edges.push_back({previous, n});
      previous = n++;
    }
    edges.push_back({previous, at});
  }
  return Graph(n, std::move(edges));
}

}  // namespace vcew
