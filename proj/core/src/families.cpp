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
#include <set>
#include <string>

#include "vcew/error.hpp"
#include "vcew/families.hpp"

namespace vcew {

namespace {

// Appends a path of `length` edges from `from` to `to`, creating interior
// vertices starting at `next_vertex`.
void append_path(std::vector<Edge>& edges, Vertex from, Vertex to, int length, Vertex& next_vertex) {
  Vertex previous = from;
  for (int i = 1; i < length; ++i) {
    edges.push_back({previous, next_vertex});
    previous = next_vertex++;
  }
  edges.push_back({previous, to});
}

// Hub endpoints of p1..p6 (u=0, v=1, u'=2, v'=3).
constexpr std::array<std::pair<int, int>, 6> kGptEnds{{{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}};

struct GptLayout {
  std::array<Vertex, 4> hub{};
  Vertex hub_count = 0;
};

// Hub classes after identifying the ends of zero-length paths.
GptLayout gpt_layout(const GptParams& p) {
  std::array<int, 4> parent{0, 1, 2, 3};
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto join = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  };
  const auto lengths = p.values();
  for (std::size_t i = 0; i < 6; ++i) {
    if (lengths[i] == 0) join(kGptEnds[i].first, kGptEnds[i].second);
  }
  GptLayout layout;
  std::array<Vertex, 4> label{-1, -1, -1, -1};
  for (int h = 0; h < 4; ++h) {
    const int root = find(h);
    if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = layout.hub_count++;
    layout.hub[static_cast<std::size_t>(h)] = label[static_cast<std::size_t>(root)];
  }
  return layout;
}

}  // namespace

GptParams GptParams::from(std::span<const int> values) {
  if (values.size() != 6) throw InvalidArgument("gpt needs exactly six path lengths a,b,c,d,e,f");
  return {values[0], values[1], values[2], values[3], values[4], values[5]};
}

std::string to_string(const GptParams& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
         std::to_string(p.d) + "," + std::to_string(p.e) + "," + std::to_string(p.f) + ")";
}

bool gpt_parity_bipartite(const GptParams& p) {
  return (p.a + p.b) % 2 == 0 && (p.c + p.d) % 2 == 0 && (p.b + p.e + p.c + p.f) % 2 == 0;
}

std::string gpt_invalid_reason(const GptParams& p) {
  const auto lengths = p.values();
  if (std::any_of(lengths.begin(), lengths.end(), [](int x) { return x < 0; })) {
    return "path lengths must be non-negative";
  }
  const GptLayout layout = gpt_layout(p);
  std::set<std::pair<Vertex, Vertex>> direct;
  Vertex vertices = layout.hub_count;
  for (std::size_t i = 0; i < 6; ++i) {
    const int length = lengths[i];
    if (length == 0) continue;
    Vertex x = layout.hub[static_cast<std::size_t>(kGptEnds[i].first)];
    Vertex y = layout.hub[static_cast<std::size_t>(kGptEnds[i].second)];
    const std::string name = "p" + std::to_string(i + 1);
    if (x == y && length == 1) return name + " of length 1 is a loop";
    if (x == y && length == 2) return name + " of length 2 closes a 2-cycle (parallel edges)";
    if (length == 1 && !direct.insert({std::min(x, y), std::max(x, y)}).second) {
      return name + " of length 1 duplicates another edge between the same hubs (parallel edges)";
    }
    vertices += length - 1;
  }
  if (vertices < 3) return "fewer than three vertices";
  return {};
}

Graph path(int n) {
  if (n < 1) throw InvalidArgument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph clique(int n) {
  if (n < 1) throw InvalidArgument("clique needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.size() < 2) throw InvalidArgument("complete multipartite graph needs at least two parts");
  if (std::any_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s < 1; })) {
    throw InvalidArgument("every part needs at least one vertex");
  }
  std::vector<Vertex> start{0};
  for (int s : part_sizes) start.push_back(start.back() + s);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    for (Vertex x = start[i]; x < start[i + 1]; ++x) {
      for (Vertex y = start[i + 1]; y < start.back(); ++y) edges.push_back({x, y});
    }
  }
  return Graph(start.back(), std::move(edges));
}

Graph theta(std::span<const int> lengths) {
  if (lengths.empty()) throw InvalidArgument("theta needs at least one path");
  if (std::any_of(lengths.begin(), lengths.end(), [](int l) { return l < 1; })) {
    throw InvalidArgument("theta path lengths must be at least 1");
  }
  if (std::count(lengths.begin(), lengths.end(), 1) > 1) {
    throw InvalidArgument("theta allows at most one path of length 1 (parallel edges)");
  }
  std::vector<Edge> edges;
  Vertex next = 2;
  for (int l : lengths) append_path(edges, 0, 1, l, next);
  return Graph(next, std::move(edges));
}

Graph gpt(const GptParams& p) {
  if (const std::string why = gpt_invalid_reason(p); !why.empty()) {
    throw InvalidArgument("invalid gpt" + to_string(p) + ": " + why);
  }
  const GptLayout layout = gpt_layout(p);
  const auto lengths = p.values();
  std::vector<Edge> edges;
  Vertex next = layout.hub_count;
  for (std::size_t i = 0; i < 6; ++i) {
    if (lengths[i] == 0) continue;
    append_path(edges, layout.hub[static_cast<std::size_t>(kGptEnds[i].first)],
                layout.hub[static_cast<std::size_t>(kGptEnds[i].second)], lengths[i], next);
  }
  return Graph(next, std::move(edges));
}

Graph hypercube(int n) {
  if (n < 1) throw InvalidArgument("hypercube dimension must be at least 1");
  Graph cube = path(2);
  for (int i = 1; i < n; ++i) cube = cartesian_product(cube, path(2));
  return cube;
}

Graph subdivide(const Graph& g, std::span<const int> lengths) {
  if (lengths.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InvalidArgument("subdivide needs one length per edge");
  }
  std::vector<Edge> edges;
  Vertex next = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int length = lengths[static_cast<std::size_t>(e)];
    if (length < 1) throw InvalidArgument("subdivision lengths must be at least 1");
    append_path(edges, g.edge(e).u, g.edge(e).v, length, next);
  }
  return Graph(next, std::move(edges));
}

}  // namespace vcew
