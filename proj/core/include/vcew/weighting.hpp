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

#ifndef VCEW_WEIGHTING_HPP
#define VCEW_WEIGHTING_HPP

#include <cstdint>
#include <vector>

#include "vcew/graph.hpp"

namespace vcew {

using Weight = std::int32_t;
using Color = std::int64_t;

/// Assignment of a weight in 1..k to every edge id of a host graph.
struct EdgeWeighting {
  int k = 1;
  std::vector<Weight> weights;

  /// Weighting with every edge set to `w`.
  static EdgeWeighting uniform(const Graph& g, int k, Weight w);

  Weight operator[](EdgeId e) const { return weights[static_cast<std::size_t>(e)]; }
  friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;
};

/// Throws InvalidArgument unless `w` has one weight per edge of g, all in 1..k.
void validate_weighting(const Graph& g, const EdgeWeighting& w);

/// Colour of each vertex: the sum of the weights on its incident edges.
struct InducedColoring {
  std::vector<Color> colors;

  Color operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
};

InducedColoring induced_coloring(const Graph& g, const EdgeWeighting& w);

struct ProperVerdict {
  bool proper = true;
  /// Every edge whose endpoints share a colour, ascending.
  std::vector<EdgeId> conflicts;

  explicit operator bool() const { return proper; }
};

ProperVerdict is_proper(const Graph& g, const EdgeWeighting& w);

/// True iff adjacent vertices always have different degrees, i.e. the
/// all-ones weighting is proper. Requires a connected graph on >= 3 vertices.
bool admits_vc1(const Graph& g);

/// Throws InvalidArgument unless g is connected with at least three vertices.
void require_weightable(const Graph& g);

}  // namespace vcew

#endif  // VCEW_WEIGHTING_HPP
