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


#include <gtest/gtest.h>

#include "vcew/campaigns.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"

namespace vcew {
namespace {

TEST(CampaignsTest, RegistryListsEveryTheoremId) {
  std::vector<std::string> ids;
  for (const CampaignInfo& c : campaigns()) ids.emplace_back(c.id);
  for (const char* id : {"thm-1.3", "thm-2.1", "lemma-2.3", "thm-2.4", "prop-2.5", "remark", "thm-3.7", "prop-3.6",
                         "thm-4.2", "thm-4.3", "soundness", "constructors"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  EXPECT_THROW(run_campaign("thm-9.9"), InvalidArgument);
}

TEST(CampaignsTest, SmallSweepsPass) {
  CampaignOptions small;
  small.max_edges = 12;
  for (const char* id : {"thm-4.2", "remark"}) {
    const VerificationReport r = run_campaign(id, small);
    EXPECT_TRUE(r.ok()) << id;
    EXPECT_EQ(r.passes + r.failures.size(), r.instances);
    EXPECT_GT(r.instances, 0U);
  }
  CampaignOptions five;
  five.max_vertices = 5;
  const VerificationReport s = run_campaign("soundness", five);
  EXPECT_EQ(s.instances, 2U + 6U + 21U);
  EXPECT_TRUE(s.ok());
}

TEST(CampaignsTest, ReportsAreDeterministicAcrossThreadCounts) {
  CampaignOptions a;
  a.max_vertices = 5;
  a.threads = 1;
  CampaignOptions b = a;
  b.threads = 4;
  const VerificationReport ra = run_campaign("prop-2.5", a);
  const VerificationReport rb = run_campaign("prop-2.5", b);
  EXPECT_EQ(ra.instances, rb.instances);
  EXPECT_EQ(ra.passes, rb.passes);
  EXPECT_EQ(ra.skipped, rb.skipped);
}

TEST(CampaignsTest, MachineReportFormat) {
  VerificationReport r;
  r.theorem = "thm-x";
  r.instances = 3;
  r.passes = 2;
  r.failures.push_back({"cycle:6", "2", "3"});
  r.wall_seconds = 1.5;
  const std::string kv = format_report_machine(r);
  EXPECT_NE(kv.find("theorem=thm-x\n"), std::string::npos);
  EXPECT_NE(kv.find("instances=3\n"), std::string::npos);
  EXPECT_NE(kv.find("passes=2\n"), std::string::npos);
  EXPECT_NE(kv.find("failures=1\n"), std::string::npos);
  EXPECT_NE(kv.find("failure.0.instance=cycle:6\n"), std::string::npos);
  EXPECT_NE(kv.find("failure.0.expected=2\n"), std::string::npos);
  EXPECT_NE(kv.find("failure.0.got=3\n"), std::string::npos);
  EXPECT_NE(format_report_text(r).find("FAIL cycle:6"), std::string::npos);
  EXPECT_EQ(describe_graph(path(3)), "3:0-1,1-2");
}

}  // namespace
}  // namespace vcew
