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

#ifndef VCEW_SRC_CERTIFY_HPP
#define VCEW_SRC_CERTIFY_HPP

#include <string>

#include "vcew/error.hpp"
#include "vcew/weighting.hpp"

namespace vcew::detail {

// Throws ProofViolation unless w is proper on g.
inline void certify(const Graph& g, const EdgeWeighting& w, const std::string& what) {
  if (const ProperVerdict verdict = is_proper(g, w); !verdict) {
    throw ProofViolation(what + " produced an improper weighting (" + std::to_string(verdict.conflicts.size()) +
                         " conflicting edges, first id " + std::to_string(verdict.conflicts.front()) + ")");
  }
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace vcew::detail

#endif  // VCEW_SRC_CERTIFY_HPP
