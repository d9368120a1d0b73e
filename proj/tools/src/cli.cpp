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

#include "vcew_tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vcew/campaigns.hpp"
#include "vcew/classifiers.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"
#include "vcew/io.hpp"
#include "vcew/oracle.hpp"

namespace vcew::cli {

namespace {

// A graph given as an edge-list file or an inline family spec.
struct Source {
  Graph graph;
  std::optional<FamilySpec> spec;
};

Source load(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open '" + text + "'");
    return {read_edge_list(in), std::nullopt};
  }
  FamilySpec spec = parse_family_spec(text);
  Graph g = make(spec);
  return {std::move(g), std::move(spec)};
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

int cmd_mu(const std::string& source, int k_max, bool force, std::ostream& out) {
  const Graph g = load(source).graph;
  const MuResult r = mu_exact_with_witness(g, k_max, {force, 0});
  out << "mu=" << r.mu << "\n";
  write_weighting(out, g, r.witness);
  return kExitOk;
}

int cmd_bound(const std::string& source, std::ostream& out) {
  const BoundCertificate cert = mu_upper_bound(load(source).graph);
  out << "bound=" << cert.bound << "\nrule=" << to_string(cert.rule) << "\n";
  if (!cert.witness_details.empty()) out << "details=" << cert.witness_details << "\n";
  return kExitOk;
}

struct WeightArgs {
  std::string source;
  std::string method = "oracle";
  int k = 2;
  std::optional<int> vertex;
  bool force = false;
};

int emit(std::ostream& out, const Graph& host, const EdgeWeighting& w) {
  // Re-verify before printing, whatever the method promised.
  if (const ProperVerdict verdict = is_proper(host, w); !verdict) {
    throw ProofViolation("the weighting is not proper (" + std::to_string(verdict.conflicts.size()) + " conflicts)");
  }
  out << "# " << host.vertex_count() << " vertices, " << host.edge_count() << " edges, proper\n";
  write_weighting(out, host, w);
  return kExitOk;
}

int cmd_weight(const WeightArgs& a, std::ostream& out, std::ostream& err) {
  const Source src = load(a.source);
  const Graph& g = src.graph;
  if (a.method == "oracle") {
    require_weightable(g);
    const auto w = find_weighting(g, a.k, {}, {a.force, 0});
    if (!w) {
      err << "no proper " << a.k << "-weighting\n";
      return kExitCap;
    }
    return emit(out, g, *w);
  }
  if (a.method == "product") {
    if (!src.spec || src.spec->kind != FamilySpec::Kind::Product) {
      throw PreconditionError("--method product needs a source of the form product(spec,spec)");
    }
    const Graph f1 = make(src.spec->factors[0]);
    const Graph f2 = make(src.spec->factors[1]);
    const MuResult w1 = mu_exact_with_witness(f1, kDefaultMuCap, {a.force, 0});
    const MuResult w2 = mu_exact_with_witness(f2, kDefaultMuCap, {a.force, 0});
    return emit(out, g, product_weighting(f1, w1.witness, f2, w2.witness));
  }
  if (a.method == "bipk2") {
    out << "# host: the source graph x K2, vertex (u, i) = 2u + i\n";
    return emit(out, cartesian_product(g, path(2)), bipartite_product_k2(g));
  }
  if (a.method == "msp-a") return emit(out, g, msp_pattern_weighting(g, MspVariant::A));
  if (a.method == "msp-b") return emit(out, g, msp_pattern_weighting(g, MspVariant::B));
  if (a.method == "cycle-blocks") return emit(out, g, cycle_block_weighting(g));
  if (a.method == "multipartite") {
    if (!src.spec || src.spec->kind != FamilySpec::Kind::Multipartite) {
      throw PreconditionError("--method multipartite needs a kpart:n,...,n source");
    }
    const std::vector<int>& sizes = src.spec->params;
    if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) {
      throw PreconditionError("--method multipartite needs parts of equal size, got kpart:" + join(sizes));
    }
    const WeightedGraph wg = multipartite_weighting(static_cast<int>(sizes.size()), sizes.front());
    return emit(out, wg.graph, wg.weighting);
  }
  if (a.method == "dominant") {
    Vertex v = 0;
    if (a.vertex) {
      v = *a.vertex;
    } else {
      const std::vector<Vertex> candidates = dominant_vertices(g);
      if (candidates.empty()) throw PreconditionError("no vertex qualifies as a dominant vertex");
      v = candidates.front();
    }
    return emit(out, g, dominant_vertex_weighting(g, v));
  }
  throw InvalidArgument("unknown method '" + a.method + "'");
}

int cmd_decompose(const std::string& source, const std::string& kind, std::ostream& out) {
  const Graph g = load(source).graph;
  auto list = [](const auto& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i > 0 ? "," : "") + std::to_string(values[i]);
    return s;
  };
  if (kind == "msp") {
    const MspDecomposition msp = maximal_simple_paths(g);
    out << "paths=" << msp.paths.size() << "\n";
    for (std::size_t i = 0; i < msp.paths.size(); ++i) {
      const MaximalSimplePath& p = msp.paths[i];
      out << "path " << i << ": length=" << p.length() << " closed=" << (p.closed ? 1 : 0)
          << " vertices=" << list(p.vertices) << " edges=" << list(p.edges) << "\n";
    }
    return kExitOk;
  }
  if (kind == "blocks") {
    const BlockDecomposition bd = blocks_and_cut_vertices(g);
    out << "blocks=" << bd.blocks.size() << "\ncut_vertices=" << list(bd.cut_vertices) << "\n";
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
      out << "block " << i << ": vertices=" << list(block_vertices(g, bd.blocks[i]))
          << " edges=" << list(bd.blocks[i]) << "\n";
    }
    return kExitOk;
  }
  throw InvalidArgument("unknown decomposition kind '" + kind + "'");
}

struct VerifyArgs {
  std::string theorem;
  std::optional<int> max_edges;
  std::optional<int> max_vertices;
  std::optional<int> samples;
  std::uint64_t seed = 1;
  std::string format = "both";
  bool list = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    for (const CampaignInfo& c : campaigns()) out << c.id << "  " << c.description << "\n";
    return kExitOk;
  }
  if (a.theorem.empty()) throw InvalidArgument("--theorem is required (see --list)");
  CampaignOptions options;
  options.max_edges = a.max_edges;
  options.max_vertices = a.max_vertices;
  options.samples = a.samples;
  options.seed = a.seed;
  const VerificationReport report = run_campaign(a.theorem, options);
  if (a.format == "text" || a.format == "both") out << format_report_text(report);
  if (a.format == "both") out << "\n";
  if (a.format == "kv" || a.format == "both") out << format_report_machine(report);
  return report.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-colouring edge weightings: exact mu, constructions and verification campaigns", "vcew"};
  app.require_subcommand(1);

  std::string source;
  int k_max = kDefaultMuCap;
  bool force = false;
  auto* mu = app.add_subcommand("mu", "exact mu and the canonical witness weighting");
  mu->add_option("graph", source, "edge-list file or family spec")->required();
  mu->add_option("--kmax", k_max, "largest k to try")->capture_default_str()->check(CLI::Range(1, 64));
  mu->add_flag("--force", force, "lift the search size guard");

  auto* bound = app.add_subcommand("bound", "rule-based upper bound on mu with its justification");
  bound->add_option("graph", source, "edge-list file or family spec")->required();

  WeightArgs weight_args;
  auto* weight = app.add_subcommand("weight", "build a proper weighting with a chosen method");
  weight->add_option("graph", weight_args.source, "edge-list file or family spec")->required();
  weight
      ->add_option("--method", weight_args.method,
                   "oracle|product|bipk2|msp-a|msp-b|cycle-blocks|multipartite|dominant")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"oracle", "product", "bipk2", "msp-a", "msp-b", "cycle-blocks", "multipartite", "dominant"}));
  weight->add_option("--k", weight_args.k, "weights 1..k for --method oracle")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  weight->add_option("--vertex", weight_args.vertex, "dominant vertex for --method dominant");
  weight->add_flag("--force", weight_args.force, "lift the search size guard");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--theorem", verify_args.theorem, "campaign id (see --list)");
  verify->add_option("--max-edges", verify_args.max_edges, "edge or length limit of the sweep");
  verify->add_option("--max-vertices", verify_args.max_vertices, "vertex limit of the sweep");
  verify->add_option("--samples", verify_args.samples, "random instances, where the campaign draws any");
  verify->add_option("--seed", verify_args.seed, "seed for random instances")->capture_default_str();
  verify->add_option("--format", verify_args.format, "text|kv|both")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "kv", "both"}));
  verify->add_flag("--list", verify_args.list, "list campaign ids");

  std::string kind;
  auto* decompose = app.add_subcommand("decompose", "maximal simple paths or blocks");
  decompose->add_option("graph", source, "edge-list file or family spec")->required();
  decompose->add_option("--kind", kind, "msp|blocks")->required()->check(CLI::IsMember({"msp", "blocks"}));

  std::ostringstream buffer;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  int code = kExitOk;
  try {
    if (*mu) code = cmd_mu(source, k_max, force, buffer);
    if (*bound) code = cmd_bound(source, buffer);
    if (*weight) code = cmd_weight(weight_args, buffer, err);
    if (*verify) code = cmd_verify(verify_args, buffer);
    if (*decompose) code = cmd_decompose(source, kind, buffer);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotFoundWithinCap& e) {
    err << "NOT FOUND WITHIN CAP: " << e.what()
        << "\nA connected graph with at least three vertices and no proper 5-weighting would contradict the "
           "known bound mu <= 5.\n";
    return kExitCap;
  } catch (const ProofViolation& e) {
    err << "proof violation: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  }
  out << buffer.str();
  return code;
}

}  // namespace vcew::cli
