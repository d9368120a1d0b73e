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

#ifndef VCEW_IO_HPP
#define VCEW_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "vcew/graph.hpp"
#include "vcew/weighting.hpp"

namespace vcew {

// Edge-list format:
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0-based, edge-id order)
//
// Writers put the smaller endpoint first. Readers throw ParseError with the
// offending line number.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

// Weighting format:
//
//   # optional comment lines
//   k m
//   u v w      (m lines in edge-id order, w in 1..k)
//
// The endpoints are checked against the host graph's edge list.
EdgeWeighting read_weighting(std::istream& in, const Graph& g);
EdgeWeighting parse_weighting(std::string_view text, const Graph& g);
void write_weighting(std::ostream& out, const Graph& g, const EdgeWeighting& w);
std::string format_weighting(const Graph& g, const EdgeWeighting& w);

}  // namespace vcew

#endif  // VCEW_IO_HPP
