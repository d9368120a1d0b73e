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

#include <array>
#include <string>

#include "certify.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"

namespace vcew {

namespace {

using Pattern = std::array<Weight, 4>;

constexpr Pattern kOneOneTwoTwo{1, 1, 2, 2};
constexpr Pattern kTwoOneOneTwo{2, 1, 1, 2};
constexpr Pattern kTwoTwoOneOne{2, 2, 1, 1};

std::string describe(const MaximalSimplePath& p) {
  return "the maximal simple path " + std::to_string(p.front()) + ".." + std::to_string(p.back()) + " of length " +
         std::to_string(p.length());
}

const Pattern& initial_pattern(const MaximalSimplePath& p, MspVariant variant) {
  if (p.length() % 4 == 2) return variant == MspVariant::A ? kOneOneTwoTwo : kTwoTwoOneOne;
  return kTwoOneOneTwo;
}

// Writes the periodic pattern along p, from its back end when `from_back`.
void apply(EdgeWeighting& w, const MaximalSimplePath& p, const Pattern& pattern, bool from_back = false) {
  const std::size_t n = p.edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    w.weights[static_cast<std::size_t>(p.edges[from_back ? n - 1 - i : i])] = pattern[i % 4];
  }
}

}  // namespace

std::string msp_pattern_violation(const Graph& g, MspVariant variant) {
  if (g.vertex_count() < 3 || !is_connected(g)) return "the graph must be connected with at least three vertices";
  if (is_cycle_graph(g) && g.vertex_count() % 4 != 0) {
    return "the graph is the cycle C" + std::to_string(g.vertex_count()) + ", whose length is not 0 mod 4";
  }
  for (const MaximalSimplePath& p : maximal_simple_paths(g).paths) {
    const int d_front = g.degree(p.front());
    const int d_back = g.degree(p.back());
    if (variant == MspVariant::A) {
      if (p.length() == 1) return describe(p) + " is a single edge";
      if (p.length() % 4 == 1 && d_front == 3 && d_back == 3) {
        return describe(p) + " is 1 mod 4 and joins two degree-3 vertices";
      }
    } else {
      if (p.length() % 4 == 3) return describe(p) + " is 3 mod 4";
      if (p.length() == 1 && d_front == d_back) return describe(p) + " is a single edge between equal degrees";
    }
  }
  return {};
}

MspPatternResult msp_pattern_weighting_traced(const Graph& g, MspVariant variant) {
  if (const std::string why = msp_pattern_violation(g, variant); !why.empty()) throw PreconditionError(why);

  const MspDecomposition msp = maximal_simple_paths(g);
  std::vector<std::size_t> path_of(static_cast<std::size_t>(g.edge_count()));
  MspPatternResult result{{2, std::vector<Weight>(static_cast<std::size_t>(g.edge_count()))}, {}, {}};
  for (std::size_t i = 0; i < msp.paths.size(); ++i) {
    apply(result.weighting, msp.paths[i], initial_pattern(msp.paths[i], variant));
    for (EdgeId e : msp.paths[i].edges) path_of[static_cast<std::size_t>(e)] = i;
  }

  std::vector<bool> switched(msp.paths.size(), false);
  while (true) {
    const ProperVerdict verdict = is_proper(g, result.weighting);
    if (!result.conflict_history.empty() && verdict.conflicts.size() >= result.conflict_history.back()) {
      throw ProofViolation("switching " + describe(msp.paths[result.repaired_paths.back()]) +
                           " did not reduce the number of conflicting edges");
    }
    result.conflict_history.push_back(verdict.conflicts.size());
    if (verdict) break;
    if (variant == MspVariant::B) {
      throw ProofViolation("the 2,2,1,1 / 2,1,1,2 patterns left edge " + std::to_string(verdict.conflicts.front()) +
                           " conflicting");
    }

    // A conflict the repair rule covers: an endpoint of degree 3 and colour
    // 4 whose single weight-2 edge ends an unswitched 1 (mod 4) path. The
    // new pattern starts at that vertex.
    const InducedColoring c = induced_coloring(g, result.weighting);
    std::optional<std::size_t> target;
    bool from_back = false;
    for (EdgeId e : verdict.conflicts) {
      for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
        if (g.degree(v) != 3 || c[v] != 4) continue;
        for (const Incidence& inc : g.incident(v)) {
          const std::size_t p = path_of[static_cast<std::size_t>(inc.edge)];
          const MaximalSimplePath& path = msp.paths[p];
          const bool at_front = inc.edge == path.edges.front() && path.front() == v;
          const bool at_back = inc.edge == path.edges.back() && path.back() == v;
          if (result.weighting[inc.edge] == 2 && (at_front || at_back) && path.length() % 4 == 1 && !switched[p]) {
            target = p;
            from_back = !at_front;
          }
        }
        if (target) break;
      }
      if (target) break;
    }
    if (!target) {
      throw ProofViolation("edge " + std::to_string(verdict.conflicts.front()) +
                           " conflicts and no 1 mod 4 path at a degree-3 vertex of colour 4 can be switched");
    }
    switched[*target] = true;
    apply(result.weighting, msp.paths[*target], kOneOneTwoTwo, from_back);
    result.repaired_paths.push_back(*target);
  }
  detail::certify(g, result.weighting, "msp_pattern_weighting");
  return result;
}

EdgeWeighting msp_pattern_weighting(const Graph& g, MspVariant variant) {
  return msp_pattern_weighting_traced(g, variant).weighting;
}

}  // namespace vcew
