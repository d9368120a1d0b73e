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

#ifndef VCEW_ORACLE_HPP
#define VCEW_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "vcew/graph.hpp"
#include "vcew/weighting.hpp"

namespace vcew {

enum class Parity : std::uint8_t { Odd, Even };

struct SearchConstraints {
  /// Edges whose weight is forced.
  std::map<EdgeId, Weight> fixed_weights;
  /// Either empty or one entry per vertex: the required parity of its colour.
  std::vector<std::optional<Parity>> parity;
};

struct SearchOptions {
  /// Bypass the size guard.
  bool force = false;
  /// Worker count; 0 means configured_threads().
  unsigned threads = 0;
};

/// Size guard: k = 2 searches are refused above this many edges ...
inline constexpr int kGuardEdgesK2 = 40;
/// ... and k >= 3 searches above this many.
inline constexpr int kGuardEdgesK3 = 26;

/// Default cap for mu_exact, from the general upper bound mu(G) <= 5.
inline constexpr int kDefaultMuCap = 5;

/// Throws SearchGuardExceeded if a k-search on g is outside the guard.
void check_search_guard(const Graph& g, int k, const SearchOptions& options);

/// Order in which the search assigns edges: BFS from vertex 0, each vertex
/// contributing its not-yet-listed incident edges by ascending id.
std::vector<EdgeId> search_edge_order(const Graph& g);

/// Smallest proper k-weighting satisfying `constraints`, comparing candidate
/// weightings lexicographically in search_edge_order. Empty when none exists.
/// The result does not depend on the number of worker threads.
///
/// Requires a connected graph with at least three vertices.
std::optional<EdgeWeighting> find_weighting(const Graph& g, int k,
                                            const SearchConstraints& constraints = {},
                                            const SearchOptions& options = {});

/// Calls `visit` for every proper k-weighting satisfying `constraints`, in
/// lexicographic search order, until it returns false. Returns the number of
/// weightings visited.
std::size_t for_each_proper_weighting(const Graph& g, int k, const SearchConstraints& constraints,
                                      const std::function<bool(const EdgeWeighting&)>& visit,
                                      const SearchOptions& options = {});

struct MuResult {
  int mu = 0;
  EdgeWeighting witness;
};

/// Exact mu(g): the smallest k <= k_max with a proper k-weighting. For a
/// disconnected graph this is the maximum over its components, each of which
/// must have at least three vertices. Throws NotFoundWithinCap if no k works.
int mu_exact(const Graph& g, int k_max = kDefaultMuCap, const SearchOptions& options = {});

/// mu_exact together with the canonical witness (component witnesses merged).
MuResult mu_exact_with_witness(const Graph& g, int k_max = kDefaultMuCap,
                               const SearchOptions& options = {});

enum class EndEdgeBehavior : std::uint8_t { Same, Different, Free };

std::string_view to_string(EndEdgeBehavior b);

/// Enumerates every proper 2-weighting of the path with `length` edges and
/// classifies the weights on its two end edges: Same (always equal), Different
/// (always unequal) or Free (all four pairs occur). Any other outcome throws
/// Inconsistent. Requires length >= 4.
EndEdgeBehavior end_edge_behavior(int length);

}  // namespace vcew

#endif  // VCEW_ORACLE_HPP
