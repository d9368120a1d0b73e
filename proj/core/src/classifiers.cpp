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
#include <optional>
#include <set>
#include <string>

#include "vcew/classifiers.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"
#include "vcew/graph.hpp"

namespace vcew {

namespace {

bool mod4(int x, int r) { return x % 4 == r; }

bool gpt_mu_one(const GptParams& q) {
  const auto [a, b, c, d, e, f] = q.values();
  return (a == 2 && b == 2 && c == 2 && d == 2 && e == 2 && f == 2) ||
         (a == 2 && b == 2 && e + f == 2 && c == 0 && d == 0) ||
         (a == 2 && d == 2 && f == 2 && b == 1 && c == 1 && e == 0) ||
         (a == 2 && d == 2 && f == 2 && b == 2 && c == 2 && e == 0) ||
         (a == 2 && b == 2 && c == 2 && d == 2 && e == 0 && f == 0);
}

bool gpt_mu_three(const GptParams& q) {
  const auto [a, b, c, d, e, f] = q.values();
  return (a == 0 && b == 0 && c == 0 && d == 0 && mod4(e + f, 2)) ||
         (b == 1 && c == 0 && d == 0 && mod4(a, 1) && mod4(e + f, 1)) ||
         (b == 1 && e == 0 && f == 0 && mod4(a, 1) && mod4(c, 1) && mod4(d, 1)) ||
         (b == 1 && c == 1 && mod4(a, 1) && mod4(d, 1) && mod4(e, 1) && mod4(f, 3));
}

// Collapsed tuples whose graph is a plain cycle or a theta graph are decided
// by those closed forms; the bullets describe the three-region shape.
std::optional<int> gpt_reduced_shape(const GptParams& p) {
  if (!gpt_invalid_reason(p).empty()) return std::nullopt;
  const Graph g = gpt(p);
  if (is_cycle_graph(g)) return mu_path_cycle_clique(BasicFamily::Cycle, g.vertex_count());
  int branch = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) branch += g.degree(x) >= 3 ? 1 : 0;
  if (branch != 2) return std::nullopt;
  const MspDecomposition msp = maximal_simple_paths(g);
  std::vector<int> lengths;
  for (const MaximalSimplePath& path : msp.paths) {
    if (path.closed) return std::nullopt;
    lengths.push_back(path.length());
  }
  if (lengths.size() < 3) return std::nullopt;
  return mu_theta(lengths);
}

}  // namespace

int mu_path_cycle_clique(BasicFamily family, int n) {
  if (n < 3) throw InvalidArgument("closed forms need n >= 3");
  switch (family) {
    case BasicFamily::Path:
      return n == 3 ? 1 : 2;
    case BasicFamily::Cycle:
      return n % 4 == 0 ? 2 : 3;
    case BasicFamily::Clique:
      return 3;
  }
  throw InvalidArgument("unknown family");
}

int mu_theta(std::span<const int> lengths) {
  if (lengths.size() < 3) throw InvalidArgument("mu_theta needs at least three paths");
  std::vector<int> l(lengths.begin(), lengths.end());
  std::sort(l.begin(), l.end());
  if (l.front() < 1) throw InvalidArgument("theta path lengths must be at least 1");
  if (l[1] == 1) throw InvalidArgument("at most one theta path may have length 1");
  if (std::all_of(l.begin(), l.end(), [](int x) { return x == 2; })) return 1;
  if (l.front() == 1 && std::all_of(l.begin() + 1, l.end(), [](int x) { return x % 4 == 1; })) return 3;
  return 2;
}

std::vector<GptParams> gpt_symmetry_orbit(const GptParams& p) {
  std::set<GptParams> seen{p};
  std::vector<GptParams> frontier{p};
  while (!frontier.empty()) {
    const GptParams q = frontier.back();
    frontier.pop_back();
    const GptParams moves[] = {
        {q.b, q.a, q.c, q.d, q.e, q.f},
        {q.a, q.b, q.d, q.c, q.e, q.f},
        {q.a, q.b, q.c, q.d, q.f, q.e},
        {q.c, q.d, q.a, q.b, q.e, q.f},
    };
    for (const GptParams& m : moves) {
      if (seen.insert(m).second) frontier.push_back(m);
    }
  }
  return {seen.begin(), seen.end()};
}

int mu_gpt(const GptParams& p) {
  const auto v = p.values();
  if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; })) {
    throw InvalidArgument("gpt path lengths must be non-negative");
  }
  if (!gpt_parity_bipartite(p)) throw InvalidArgument("gpt" + to_string(p) + " is not bipartite");
  if (const std::optional<int> reduced = gpt_reduced_shape(p)) return *reduced;
  const std::vector<GptParams> orbit = gpt_symmetry_orbit(p);
  if (std::any_of(orbit.begin(), orbit.end(), gpt_mu_one)) return 1;
  if (std::any_of(orbit.begin(), orbit.end(), gpt_mu_three)) return 3;
  return 2;
}

}  // namespace vcew
