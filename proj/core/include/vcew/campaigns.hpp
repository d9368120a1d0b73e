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

#ifndef VCEW_CAMPAIGNS_HPP
#define VCEW_CAMPAIGNS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcew/graph.hpp"

namespace vcew {

/// One instance whose observed value differed from the expected one.
struct VerificationFailure {
  std::string instance;
  std::string expected;
  std::string got;
};

/// Outcome of a verification campaign. passes + failures.size() == instances;
/// instances that fall outside the search guard are counted in `skipped` and
/// are not part of `instances`.
struct VerificationReport {
  std::string theorem;
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t skipped = 0;
  std::vector<VerificationFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Campaign knobs; unset values take each campaign's documented default.
struct CampaignOptions {
  std::optional<int> max_edges;
  std::optional<int> max_vertices;
  std::optional<int> samples;
  std::uint64_t seed = 1;
  /// Workers for the instance sweep; 0 means configured_threads().
  unsigned threads = 0;
};

/// A campaign id, its one-line description and its defaults.
struct CampaignInfo {
  std::string_view id;
  std::string_view description;
};

/// Known campaigns, in a fixed order.
const std::vector<CampaignInfo>& campaigns();

/// Runs a campaign. Unknown ids throw InvalidArgument.
VerificationReport run_campaign(std::string_view id, const CampaignOptions& options = {});

/// Human-readable report.
std::string format_report_text(const VerificationReport& report);

/// Line-oriented key=value report, independent of the locale.
std::string format_report_machine(const VerificationReport& report);

/// Compact inline description of a graph: "n:u-v,u-v,...".
std::string describe_graph(const Graph& g);

}  // namespace vcew

#endif  // VCEW_CAMPAIGNS_HPP
