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

#ifndef VCEW_CLASSIFIERS_HPP
#define VCEW_CLASSIFIERS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcew/families.hpp"
#include "vcew/graph.hpp"

namespace vcew {

enum class BasicFamily { Path, Cycle, Clique };

/// Closed-form mu of P_n, C_n and K_n (n vertices, n >= 3).
int mu_path_cycle_clique(BasicFamily family, int n);

/// Closed-form mu of a theta graph with r >= 3 paths. The lengths may come in
/// any order; at most one may equal 1.
int mu_theta(std::span<const int> lengths);

/// Parameter tuples equivalent to p under the symmetries of the drawing:
/// swapping a and b, swapping c and d, swapping e and f, and exchanging the
/// pair (a, b) with (c, d). Sorted, p included.
std::vector<GptParams> gpt_symmetry_orbit(const GptParams& p);

/// Closed-form mu of a bipartite generalized polygon tree, evaluated over the
/// symmetry orbit of p. Requires non-negative lengths with a+b, c+d and
/// b+e+c+f even; whether the tuple builds a simple graph is not checked here.
int mu_gpt(const GptParams& p);

enum class BoundRule {
  NoEqualAdjacentDegrees,
  BipartiteMinDegreeOne,
  BipartiteThreeConnected,
  BipartiteEvenPart,
  BipartiteClosedNeighbourhood,
  BipartiteMinDegreeVertex,
  BipartiteDominantVertex,
  BipartiteProduct,
  CycleBlocks,
  MspPatterns,
  NoSingleEdgeMsp,
  ThreeColorable,
  GeneralBound,
};

std::string_view to_string(BoundRule rule);

/// An upper bound on mu together with the rule that justifies it.
struct BoundCertificate {
  int bound = 5;
  BoundRule rule = BoundRule::GeneralBound;
  std::string witness_details;
};

/// Evaluates the rules in a fixed order and returns the first that applies:
///
///   1. no edge joins equal degrees                             -> 1
///   2. bipartite and any of, in this order: minimum degree 1;
///      3-connected; a part of even size; a vertex whose degree
///      no neighbour shares with G - N[v] connected; such a vertex
///      of minimum degree with G - v connected; a dominant vertex
///      with G - v connected; a cartesian product of two factors
///      with at least two vertices each                          -> 2
///   3. at least two blocks, all of them cycles                  -> 2
///   4. the maximal-simple-path pattern conditions (either)      -> 2
///   5. not C_n with n not 0 mod 4, and no single-edge
///      maximal simple path                                      -> 2
///   6. 3-colourable                                             -> 3
///   7. otherwise                                                -> 5
///
/// Requires a connected graph with at least three vertices.
BoundCertificate mu_upper_bound(const Graph& g);

/// Exact 3-colourability by backtracking.
bool is_three_colorable(const Graph& g);

/// Factors when g is the cartesian product of two graphs with at least two
/// vertices each; the isomorphism is verified explicitly. The factors come
/// from the product relation classes (Djokovic-Winkler relation joined with
/// the no-square relation on adjacent edges), split as the first class
/// against the rest.
struct ProductFactors {
  Graph first;
  Graph second;
  /// coordinates[x] = (vertex of first, vertex of second).
  std::vector<std::pair<Vertex, Vertex>> coordinates;
};

std::optional<ProductFactors> cartesian_factors(const Graph& g);

/// True when g is a cycle whose length is not a multiple of 4.
bool is_bad_cycle(const Graph& g);

}  // namespace vcew

#endif  // VCEW_CLASSIFIERS_HPP
