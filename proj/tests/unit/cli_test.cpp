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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vcew/families.hpp"
#include "vcew/io.hpp"
#include "vcew/weighting.hpp"
#include "vcew_tools/cli.hpp"

namespace vcew {
namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Parses the weighting block that follows the header lines of a weight or mu
// command and checks it on the host graph.
bool prints_proper_weighting(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  std::string line;
  std::string body;
  bool started = false;
  while (std::getline(in, line)) {
    if (!started && (line.rfind("mu=", 0) == 0)) continue;
    started = true;
    body += line + "\n";
  }
  return static_cast<bool>(is_proper(host, parse_weighting(body, host)));
}

TEST(CliTest, MuExamples) {
  const CliResult theta = run({"mu", "theta:1,5,5"});
  EXPECT_EQ(theta.code, cli::kExitOk);
  EXPECT_EQ(theta.out.substr(0, 5), "mu=3\n");
  EXPECT_TRUE(prints_proper_weighting(theta.out, make("theta:1,5,5")));
  EXPECT_EQ(run({"mu", "cycle:8"}).out.substr(0, 5), "mu=2\n");
  EXPECT_EQ(run({"mu", "path:3"}).out.substr(0, 5), "mu=1\n");
}

TEST(CliTest, MuCapAndGuard) {
  const CliResult capped = run({"mu", "clique:4", "--kmax", "2"});
  EXPECT_EQ(capped.code, cli::kExitCap);
  EXPECT_NE(capped.err.find("NOT FOUND WITHIN CAP"), std::string::npos);
  EXPECT_EQ(run({"mu", "hypercube:5"}).code, cli::kExitPrecondition);
}

TEST(CliTest, ParseErrors) {
  EXPECT_EQ(run({"mu", "banana:3"}).code, cli::kExitParse);
  EXPECT_EQ(run({"mu"}).code, cli::kExitParse);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitParse);
  EXPECT_EQ(run({"weight", "cycle:4", "--method", "magic"}).code, cli::kExitParse);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(CliTest, ReadsEdgeListFiles) {
  const auto path = std::filesystem::temp_directory_path() / "vcew_cli_test_graph.txt";
  {
    std::ofstream f(path);
    f << "# a square\n4 4\n0 1\n1 2\n2 3\n0 3\n";
  }
  const CliResult r = run({"mu", path.string()});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.substr(0, 5), "mu=2\n");
  {
    std::ofstream f(path);
    f << "4 4\n0 1\n1 2\n2 3\n";
  }
  EXPECT_EQ(run({"mu", path.string()}).code, cli::kExitParse);
  std::filesystem::remove(path);
}

TEST(CliTest, WeightExamples) {
  const CliResult kpart = run({"weight", "kpart:2,2", "--method", "multipartite"});
  EXPECT_EQ(kpart.code, cli::kExitOk);
  EXPECT_TRUE(prints_proper_weighting(kpart.out, make("kpart:2,2")));
  const CliResult msp = run({"weight", "theta:4,4,4", "--method", "msp-a"});
  EXPECT_EQ(msp.code, cli::kExitOk);
  EXPECT_TRUE(prints_proper_weighting(msp.out, make("theta:4,4,4")));
  const CliResult c6 = run({"weight", "cycle:6", "--method", "oracle", "--k", "2"});
  EXPECT_EQ(c6.code, cli::kExitCap);
  EXPECT_NE(c6.err.find("no proper 2-weighting"), std::string::npos);
}

TEST(CliTest, WeightMethods) {
  const CliResult product = run({"weight", "product(path:3,cycle:4)", "--method", "product"});
  EXPECT_EQ(product.code, cli::kExitOk);
  EXPECT_TRUE(prints_proper_weighting(product.out, make("product(path:3,cycle:4)")));
  const CliResult bipk2 = run({"weight", "cycle:6", "--method", "bipk2"});
  EXPECT_EQ(bipk2.code, cli::kExitOk);
  EXPECT_TRUE(prints_proper_weighting(bipk2.out, make("product(cycle:6,path:2)")));
  const CliResult dom = run({"weight", "kpart:2,3", "--method", "dominant"});
  EXPECT_EQ(dom.code, cli::kExitOk);
  EXPECT_TRUE(prints_proper_weighting(dom.out, make("kpart:2,3")));
  const CliResult blocks = run({"weight", "cycle:8", "--method", "cycle-blocks"});
  EXPECT_EQ(blocks.code, cli::kExitOk);
  const CliResult b = run({"weight", "theta:2,5,6", "--method", "msp-b"});
  EXPECT_EQ(b.code, cli::kExitOk);
}

TEST(CliTest, WeightPreconditionsExitFour) {
  const CliResult uneven = run({"weight", "kpart:2,3", "--method", "multipartite"});
  EXPECT_EQ(uneven.code, cli::kExitPrecondition);
  EXPECT_NE(uneven.err.find("equal size"), std::string::npos);
  EXPECT_EQ(run({"weight", "cycle:5", "--method", "bipk2"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"weight", "theta:5,5,4", "--method", "msp-a"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"weight", "clique:4", "--method", "cycle-blocks"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"weight", "cycle:4", "--method", "product"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"weight", "cycle:6", "--method", "dominant"}).code, cli::kExitPrecondition);
}

TEST(CliTest, DecomposeExamples) {
  const CliResult theta = run({"decompose", "theta:2,2,2", "--kind", "msp"});
  EXPECT_EQ(theta.code, cli::kExitOk);
  EXPECT_NE(theta.out.find("paths=3\n"), std::string::npos);
  EXPECT_EQ(theta.out.find("length=1"), std::string::npos);
  const CliResult p5 = run({"decompose", "path:5", "--kind", "blocks"});
  EXPECT_NE(p5.out.find("blocks=4\ncut_vertices=1,2,3\n"), std::string::npos);
  const CliResult c8 = run({"decompose", "cycle:8", "--kind", "msp"});
  EXPECT_NE(c8.out.find("paths=1\npath 0: length=8 closed=1"), std::string::npos);
  EXPECT_EQ(run({"decompose", "cycle:8", "--kind", "msp"}).out, c8.out);
}

TEST(CliTest, BoundReportsTheRule) {
  const CliResult q3 = run({"bound", "hypercube:3"});
  EXPECT_EQ(q3.code, cli::kExitOk);
  EXPECT_NE(q3.out.find("bound=2\nrule=3-connected bipartite\n"), std::string::npos);
}

TEST(CliTest, VerifyExamples) {
  const CliResult theta = run({"verify", "--theorem", "thm-4.2", "--max-edges", "16", "--format", "kv"});
  EXPECT_EQ(theta.code, cli::kExitOk);
  EXPECT_NE(theta.out.find("failures=0\n"), std::string::npos);
  const CliResult remark = run({"verify", "--theorem", "remark"});
  EXPECT_EQ(remark.code, cli::kExitOk);
  EXPECT_NE(remark.out.find("failures=0\n"), std::string::npos);
  const CliResult prop = run({"verify", "--theorem", "prop-2.5", "--max-vertices", "5", "--format", "text"});
  EXPECT_EQ(prop.code, cli::kExitOk);
  EXPECT_NE(prop.out.find("0 failed"), std::string::npos);
  EXPECT_EQ(run({"verify", "--theorem", "thm-0"}).code, cli::kExitPrecondition);
  const CliResult list = run({"verify", "--list"});
  EXPECT_NE(list.out.find("thm-4.3"), std::string::npos);
}

}  // namespace
}  // namespace vcew
