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
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "vcew/error.hpp"
#include "vcew/io.hpp"

namespace vcew {

namespace {

// Yields the whitespace-separated integer fields of each non-comment line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<long long>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      std::size_t pos = first;
      while (pos < line.size()) {
        const auto end = line.find_first_of(" \t\r", pos);
        const std::string_view token(line.data() + pos, (end == std::string::npos ? line.size() : end) - pos);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
          fail("expected an integer, got '" + std::string(token) + "'");
        }
        fields.push_back(value);
        if (end == std::string::npos) break;
        pos = line.find_first_not_of(" \t\r", end);
        if (pos == std::string::npos) break;
      }
      return true;
    }
    return false;
  }

  void expect(std::vector<long long>& fields, std::size_t count, const char* what) {
    if (!next(fields)) fail(std::string("unexpected end of input, expected ") + what);
    if (fields.size() != count) {
      fail(std::string("expected ") + std::to_string(count) + " fields (" + what + ")");
    }
  }

  void expect_end() {
    std::vector<long long> fields;
    if (next(fields)) fail("unexpected trailing line");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_number_) + ": " + message);
  }

 private:
  std::istream& in_;
  int line_number_ = 0;
};

constexpr long long kMaxCount = 1 << 24;

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::vector<long long> f;
  reader.expect(f, 2, "n m");
  if (f[0] < 0 || f[1] < 0 || f[0] > kMaxCount || f[1] > kMaxCount) reader.fail("invalid header");
  const auto n = static_cast<Vertex>(f[0]);
  const auto m = static_cast<std::size_t>(f[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t i = 0; i < m; ++i) {
    reader.expect(f, 2, "u v");
    if (f[0] < 0 || f[1] < 0 || f[0] >= n || f[1] >= n) reader.fail("vertex id out of range");
    if (f[0] == f[1]) reader.fail("loop edge");
    if (!seen.insert({std::min(f[0], f[1]), std::max(f[0], f[1])}).second) reader.fail("parallel edge");
    edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])});
  }
  reader.expect_end();
  try {
    return Graph(n, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

EdgeWeighting read_weighting(std::istream& in, const Graph& g) {
  LineReader reader(in);
  std::vector<long long> f;
  reader.expect(f, 2, "k m");
  if (f[0] < 1 || f[0] > kMaxCount) reader.fail("k must be positive");
  if (f[1] != g.edge_count()) reader.fail("edge count does not match the host graph");
  EdgeWeighting w;
  w.k = static_cast<int>(f[0]);
  w.weights.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    reader.expect(f, 3, "u v w");
    const Edge& edge = g.edge(e);
    const bool matches = (f[0] == edge.u && f[1] == edge.v) || (f[0] == edge.v && f[1] == edge.u);
    if (!matches) reader.fail("endpoints do not match edge " + std::to_string(e));
    if (f[2] < 1 || f[2] > w.k) reader.fail("weight outside 1..k");
    w.weights.push_back(static_cast<Weight>(f[2]));
  }
  reader.expect_end();
  return w;
}

EdgeWeighting parse_weighting(std::string_view text, const Graph& g) {
  std::istringstream in{std::string(text)};
  return read_weighting(in, g);
}

void write_weighting(std::ostream& out, const Graph& g, const EdgeWeighting& w) {
  validate_weighting(g, w);
  out << w.k << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << w[e] << '\n';
  }
}

std::string format_weighting(const Graph& g, const EdgeWeighting& w) {
  std::ostringstream out;
  write_weighting(out, g, w);
  return out.str();
}

}  // namespace vcew
