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

#ifndef VCEW_FAMILIES_HPP
#define VCEW_FAMILIES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcew/graph.hpp"

namespace vcew {

/// Path lengths of a generalized polygon tree with up to three interior
/// regions. Hubs u, v, u', v': p1 (a) and p2 (b) join u-v, p3 (c) and p4 (d)
/// join u'-v', p5 (e) joins u-u', p6 (f) joins v-v'. A zero-length path
/// identifies its two ends.
struct GptParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;
  int f = 0;

  std::array<int, 6> values() const { return {a, b, c, d, e, f}; }
  static GptParams from(std::span<const int> values);
  int total_length() const { return a + b + c + d + e + f; }

  friend auto operator<=>(const GptParams&, const GptParams&) = default;
};

std::string to_string(const GptParams& p);

/// a+b, c+d and b+e+c+f all even: every face of the drawing is an even cycle.
bool gpt_parity_bipartite(const GptParams& p);

/// Empty when p builds a simple connected graph on >= 3 vertices, otherwise
/// the violated constraint.
std::string gpt_invalid_reason(const GptParams& p);

// Family constructors. Invalid parameters throw InvalidArgument naming the
// violated constraint.

/// P_n: n vertices 0..n-1, edge i joins i and i+1.
Graph path(int n);
/// C_n, n >= 3: edge i joins i and (i+1) mod n.
Graph cycle(int n);
/// K_n, edges in lexicographic order.
Graph clique(int n);
/// Parts numbered consecutively; edges from lower to higher part, ordered by
/// (lower endpoint, higher endpoint).
Graph complete_multipartite(std::span<const int> part_sizes);
/// Roots 0 and 1, then the interiors of each path in order, each path walked
/// from root 0. Lengths >= 1 with at most one equal to 1.
Graph theta(std::span<const int> lengths);
/// Hub classes first (numbered by smallest member of {u=0, v=1, u'=2, v'=3}),
/// then interiors of p1..p6 in order. p1, p2, p5 are walked from u; p3, p4
/// from u'; p6 from v.
Graph gpt(const GptParams& p);
/// Q_n = Q_{n-1} x K2, Q_1 = K2.
Graph hypercube(int n);

/// Replaces edge e by a path of lengths[e] >= 1 edges; new vertices are
/// appended edge by edge.
Graph subdivide(const Graph& g, std::span<const int> lengths);

/// Parsed family spec.
///
///   spec    := name ':' ints | 'product' '(' spec ',' spec ')'
///   name    := path | cycle | clique | kpart | theta | gpt | hypercube
///   ints    := int (',' int)*
///
/// Whitespace anywhere is ignored.
struct FamilySpec {
  enum class Kind { Path, Cycle, Clique, Multipartite, Theta, Gpt, Hypercube, Product };

  Kind kind = Kind::Path;
  std::vector<int> params;
  /// The two factors when kind == Product.
  std::vector<FamilySpec> factors;
};

FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph make(const FamilySpec& spec);

/// parse_family_spec + make.
Graph make(std::string_view spec_text);

/// Canonical relabelling of a small graph (n <= 11): isomorphic graphs map to
/// the identical Graph (same edge list) and the same code.
struct CanonicalForm {
  Graph graph;
  std::uint64_t code = 0;
};

CanonicalForm canonical_form(const Graph& g);

/// All connected graphs on n vertices up to isomorphism, 1 <= n <= 8, ordered
/// by edge count then canonical code. Each graph is in canonical labelling.
/// Results are computed once and cached.
const std::vector<Graph>& enumerate_connected(int n);

/// Seeded connected bipartite graph with n vertices and m edges.
///
/// Generator: std::mt19937_64 seeded with `seed`; bounded draws use rejection
/// sampling on the raw 64-bit output. Steps: choose the smaller part size s
/// uniformly among sizes with s * (n - s) >= m; shuffle the vertex labels and
/// put the first s on side U; grow a spanning tree by attaching each further
/// vertex to a uniformly drawn earlier vertex of the other side; add the
/// remaining cross pairs by a partial Fisher-Yates shuffle. The edge list is
/// sorted lexicographically.
Graph random_connected_bipartite(int n, int m, std::uint64_t seed);

/// Seeded connected graph with n vertices and m edges: random attachment tree
/// plus uniformly chosen extra pairs, same generator conventions as above.
Graph random_connected(int n, int m, std::uint64_t seed);

/// Connected graph whose blocks are all cycles: a cycle of length 3..8, then
/// 1..3 further cycles of length 3..6 glued at uniformly drawn vertices.
/// Same generator conventions as random_connected.
Graph random_cactus(std::uint64_t seed);

}  // namespace vcew

#endif  // VCEW_FAMILIES_HPP
