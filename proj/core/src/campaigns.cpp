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

#include "vcew/campaigns.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <string>

#include "vcew/classifiers.hpp"
#include "vcew/constructors.hpp"
#include "vcew/error.hpp"
#include "vcew/families.hpp"
#include "vcew/oracle.hpp"
#include "vcew/parallel.hpp"

namespace vcew {

namespace {

// Product order cap for the connectivity-formula sweep.
constexpr int kMaxProductOrder = 36;
// Minimum instances per constructor in the certification campaign, and the
// cap taken from each candidate pool.
constexpr std::size_t kMinConstructorInstances = 20;
constexpr std::size_t kMaxConstructorInstances = 120;

const SearchOptions kInner{false, 1};

struct Outcome {
  enum class Kind { Pass, Fail, Skip } kind = Kind::Pass;
  std::string expected;
  std::string got;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Kind::Skip, {}, {}}; }
  static Outcome check(bool ok, std::string expected, std::string got) {
    return {ok ? Kind::Pass : Kind::Fail, std::move(expected), std::move(got)};
  }
};

struct Check {
  std::string instance;
  std::function<Outcome()> run;
};

VerificationReport execute(std::string_view id, const std::vector<Check>& checks, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(checks.size());
  parallel_for(
      checks.size(),
      [&](std::size_t i) {
        try {
          outcomes[i] = checks[i].run();
        } catch (const SearchGuardExceeded&) {
          outcomes[i] = Outcome::skip();
        } catch (const std::exception& e) {
          outcomes[i] = {Outcome::Kind::Fail, "no error", std::string("error: ") + e.what()};
        }
      },
      threads);
  VerificationReport report;
  report.theorem = std::string(id);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    switch (outcomes[i].kind) {
      case Outcome::Kind::Skip:
        ++report.skipped;
        continue;
      case Outcome::Kind::Pass:
        ++report.passes;
        break;
      case Outcome::Kind::Fail:
        report.failures.push_back({checks[i].instance, outcomes[i].expected, outcomes[i].got});
        break;
    }
    ++report.instances;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Graph> connected_graphs(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    const auto& level = enumerate_connected(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int mu_of(const Graph& g, int k_max = kDefaultMuCap) { return mu_exact(g, k_max, kInner); }

// Campaigns.

std::vector<Check> basic_families(const CampaignOptions& o) {
  const int max_n = o.max_vertices.value_or(12);
  std::vector<Check> checks;
  auto add = [&](BasicFamily family, const char* name, int n, Graph (*make_graph)(int)) {
    checks.push_back({std::string(name) + ":" + std::to_string(n), [=] {
                        const int expected = mu_path_cycle_clique(family, n);
                        const int got = mu_of(make_graph(n));
                        return Outcome::check(expected == got, std::to_string(expected), std::to_string(got));
                      }});
  };
  for (int n = 3; n <= max_n; ++n) add(BasicFamily::Path, "path", n, path);
  for (int n = 3; n <= max_n; ++n) add(BasicFamily::Cycle, "cycle", n, cycle);
  for (int n = 3; n <= std::min(max_n, 6); ++n) add(BasicFamily::Clique, "clique", n, clique);
  return checks;
}

std::vector<std::string> composition_base() {
  return {"path:3", "path:4", "path:5", "path:6", "cycle:4", "cycle:8", "clique:3", "clique:4"};
}

std::vector<Check> composition(const CampaignOptions&) {
  std::vector<Check> checks;
  for (const std::string& a : composition_base()) {
    for (const std::string& b : composition_base()) {
      checks.push_back({"product(" + a + "," + b + ")", [a, b] {
                          const Graph g = make(a);
                          const Graph h = make(b);
                          const MuResult mg = mu_exact_with_witness(g, kDefaultMuCap, kInner);
                          const MuResult mh = mu_exact_with_witness(h, kDefaultMuCap, kInner);
                          const EdgeWeighting w = product_weighting(g, mg.witness, h, mh.witness);
                          const bool proper = static_cast<bool>(is_proper(cartesian_product(g, h), w));
                          const int k = std::max(mg.mu, mh.mu);
                          return Outcome::check(proper && w.k == k, "proper, k=" + std::to_string(k),
                                                std::string(proper ? "proper" : "improper") + ", k=" +
                                                    std::to_string(w.k));
                        }});
    }
  }
  return checks;
}

std::vector<Check> connectivity_formula(const CampaignOptions& o) {
  const int max_factor = o.max_vertices.value_or(8);
  const auto pool =
      std::make_shared<const std::vector<Graph>>(connected_graphs(2, std::min(max_factor, kMaxProductOrder / 2)));
  std::vector<int> kappa(pool->size());
  for (std::size_t i = 0; i < pool->size(); ++i) kappa[i] = vertex_connectivity((*pool)[i]);

  std::vector<Check> checks;
  for (std::size_t i = 0; i < pool->size(); ++i) {
    for (std::size_t j = i; j < pool->size(); ++j) {
      const Graph* g = &(*pool)[i];
      const Graph* h = &(*pool)[j];
      if (g->vertex_count() * h->vertex_count() > kMaxProductOrder) continue;
      const int kg = kappa[i];
      const int kh = kappa[j];
      checks.push_back({describe_graph(*g) + " x " + describe_graph(*h), [pool, g, h, kg, kh] {
                          const Graph p = cartesian_product(*g, *h);
                          const int expected =
                              std::min({p.min_degree(), kh * g->vertex_count(), kg * h->vertex_count()});
                          const int got = vertex_connectivity(p);
                          return Outcome::check(expected == got, std::to_string(expected), std::to_string(got));
                        }});
    }
  }
  return checks;
}

std::vector<Check> bipartite_products(const CampaignOptions& o) {
  const int samples = o.samples.value_or(100);
  const int max_n = std::max(3, o.max_vertices.value_or(8));
  std::mt19937_64 rng(o.seed);
  std::vector<Check> checks;
  for (int i = 0; i < samples; ++i) {
    const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 2));
    const int max_m = (n / 2) * (n - n / 2);
    const int m = n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - n + 2));
    const std::uint64_t seed = rng();
    checks.push_back({"random_connected_bipartite(" + std::to_string(n) + "," + std::to_string(m) + "," +
                          std::to_string(seed) + ") x K2",
                      [n, m, seed] {
                        const Graph g = random_connected_bipartite(n, m, seed);
                        const Graph p = cartesian_product(g, path(2));
                        const EdgeWeighting w = bipartite_product_k2(g);
                        if (!is_proper(p, w)) return Outcome::check(false, "proper", "improper");
                        if (p.edge_count() > kGuardEdgesK2) return Outcome::pass();
                        const bool two = find_weighting(p, 2, {}, kInner).has_value();
                        return Outcome::check(two, "mu<=2", two ? "mu<=2" : "no proper 2-weighting");
                      }});
  }
  return checks;
}

std::vector<Check> product_vc1(const CampaignOptions& o) {
  std::vector<Check> checks;
  for (const Graph& g : connected_graphs(3, o.max_vertices.value_or(5))) {
    for (const Graph& h : connected_graphs(3, o.max_vertices.value_or(5))) {
      checks.push_back({describe_graph(g) + " x " + describe_graph(h), [g, h] {
                          const Graph p = cartesian_product(g, h);
                          const bool expected = admits_vc1(g) && admits_vc1(h);
                          // k = 1 leaves a single candidate, so the guard is moot.
                          const bool got = find_weighting(p, 1, {}, {true, 1}).has_value();
                          auto text = [](bool b) { return std::string(b ? "mu=1" : "mu>1"); };
                          return Outcome::check(expected == got, text(expected), text(got));
                        }});
    }
  }
  return checks;
}

std::vector<Check> end_edges(const CampaignOptions& o) {
  std::vector<Check> checks;
  for (int n = 4; n <= o.max_edges.value_or(16); ++n) {
    checks.push_back({"path with " + std::to_string(n) + " edges", [n] {
                        const EndEdgeBehavior expected = n % 4 == 1   ? EndEdgeBehavior::Same
                                                         : n % 4 == 3 ? EndEdgeBehavior::Different
                                                                      : EndEdgeBehavior::Free;
                        const EndEdgeBehavior got = end_edge_behavior(n);
                        return Outcome::check(expected == got, std::string(to_string(expected)),
                                              std::string(to_string(got)));
                      }});
  }
  return checks;
}

bool no_single_edge_msp(const Graph& g) {
  const auto paths = maximal_simple_paths(g).paths;
  return std::none_of(paths.begin(), paths.end(), [](const MaximalSimplePath& p) { return p.length() == 1; });
}

Check two_weightable(std::string name, Graph g) {
  return {std::move(name), [g = std::move(g)] {
            const bool two = find_weighting(g, 2, {}, kInner).has_value();
            return Outcome::check(two, "mu<=2", two ? "mu<=2" : "no proper 2-weighting");
          }};
}

std::vector<Check> no_single_edge(const CampaignOptions& o) {
  std::vector<Check> checks;
  for (const Graph& g : connected_graphs(3, o.max_vertices.value_or(8))) {
    if (is_bad_cycle(g) || !no_single_edge_msp(g)) continue;
    checks.push_back(two_weightable(describe_graph(g), g));
  }
  // Random graphs with every edge subdivided, so no maximal simple path is a
  // single edge.
  std::mt19937_64 rng(o.seed);
  const int samples = o.samples.value_or(200);
  for (int i = 0; i < samples; ++i) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int max_m = std::min(n * (n - 1) / 2, 8);
    const int m = n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - n + 2));
    const std::uint64_t seed = rng();
    const Graph base = random_connected(n, m, seed);
    std::vector<int> lengths;
    for (int e = 0; e < m; ++e) lengths.push_back(2 + static_cast<int>(rng() % 2));
    const Graph g = subdivide(base, lengths);
    if (g.edge_count() > 28 || is_bad_cycle(g)) continue;
    checks.push_back(two_weightable("subdivide(random_connected(" + std::to_string(n) + "," + std::to_string(m) +
                                        "," + std::to_string(seed) + "),[" + join(lengths) + "])",
                                    g));
  }
  return checks;
}

std::vector<std::vector<int>> theta_lists(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> grow = [&](int min_len, int left) {
    if (current.size() >= 3) out.push_back(current);
    if (current.size() == 4) return;
    for (int l = min_len; l <= left; ++l) {
      if (l == 1 && !current.empty() && current.back() == 1) continue;
      current.push_back(l);
      grow(l == 1 ? 2 : l, left - l);
      current.pop_back();
    }
  };
  grow(1, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Check> theta_classification(const CampaignOptions& o) {
  std::vector<Check> checks;
  for (const std::vector<int>& l : theta_lists(o.max_edges.value_or(16))) {
    checks.push_back({"theta:" + join(l), [l] {
                        const int expected = mu_theta(l);
                        const int got = mu_of(theta(l));
                        return Outcome::check(expected == got, std::to_string(expected), std::to_string(got));
                      }});
  }
  return checks;
}

std::vector<GptParams> gpt_tuples(int max_total) {
  std::vector<GptParams> out;
  std::array<int, 6> v{};
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i == 6) {
      const GptParams p = GptParams::from(v);
      if (gpt_parity_bipartite(p) && gpt_invalid_reason(p).empty()) out.push_back(p);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      fill(i + 1, left - x);
    }
  };
  fill(0, max_total);
  return out;
}

std::vector<Check> gpt_classification(const CampaignOptions& o) {
  std::vector<Check> checks;
  for (const GptParams& p : gpt_tuples(o.max_edges.value_or(14))) {
    checks.push_back({"gpt:" + join(p.values()), [p] {
                        const int expected = mu_gpt(p);
                        const int got = mu_of(gpt(p));
                        return Outcome::check(expected == got, std::to_string(expected), std::to_string(got));
                      }});
  }
  return checks;
}

std::vector<Check> multipartite(const CampaignOptions& o) {
  const int max_size = o.max_vertices.value_or(3);
  std::vector<Check> checks;
  for (int r = 2; r <= max_size; ++r) {
    for (int n = 2; n <= max_size; ++n) {
      checks.push_back({"kpart:" + join(std::vector<int>(static_cast<std::size_t>(r), n)), [r, n] {
                          const WeightedGraph wg = multipartite_weighting(r, n);
                          if (!is_proper(wg.graph, wg.weighting)) return Outcome::check(false, "proper", "improper");
                          if (wg.graph.edge_count() > kGuardEdgesK2) return Outcome::pass();
                          const int got = mu_of(wg.graph, 2);
                          return Outcome::check(got == 2, "mu=2", "mu=" + std::to_string(got));
                        }});
    }
  }
  return checks;
}

std::vector<Check> soundness(const CampaignOptions& o) {
  std::vector<Check> checks;
  for (const Graph& g : connected_graphs(3, o.max_vertices.value_or(7))) {
    checks.push_back({describe_graph(g), [g] {
                        const BoundCertificate cert = mu_upper_bound(g);
                        const int mu = mu_of(g);
                        if (cert.bound < mu) {
                          return Outcome::check(false, "bound >= mu", "bound " + std::to_string(cert.bound) + " (" +
                                                                          std::string(to_string(cert.rule)) +
                                                                          ") < mu " + std::to_string(mu));
                        }
                        if (mu > 3 && is_three_colorable(g)) {
                          return Outcome::check(false, "mu <= 3 for a 3-colorable graph", "mu=" + std::to_string(mu));
                        }
                        return Outcome::pass();
                      }});
  }
  return checks;
}

// Constructor certification.

Outcome certified(const Graph& host, const EdgeWeighting& w) {
  const ProperVerdict verdict = is_proper(host, w);
  return Outcome::check(verdict.proper, "proper",
                        verdict.proper ? "proper" : std::to_string(verdict.conflicts.size()) + " conflicts");
}

std::vector<Graph> structured_pool(std::uint64_t seed) {
  std::vector<Graph> pool = connected_graphs(3, 7);
  for (const auto& l : theta_lists(16)) pool.push_back(theta(l));
  for (const GptParams& p : gpt_tuples(12)) pool.push_back(gpt(p));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 60; ++i) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int m = n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n * (n - 1) / 2, 7) - n + 2));
    const Graph base = random_connected(n, m, rng());
    std::vector<int> lengths;
    for (int e = 0; e < m; ++e) lengths.push_back(1 + static_cast<int>(rng() % 6));
    pool.push_back(subdivide(base, lengths));
  }
  return pool;
}

struct ConstructorPool {
  std::string name;
  std::vector<Check> checks;
};

std::vector<Check> constructors(const CampaignOptions& o) {
  std::vector<ConstructorPool> pools(7);
  pools[0].name = "product_weighting";
  for (const Check& c : composition(o)) pools[0].checks.push_back(c);

  pools[1].name = "bipartite_product_k2";
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int max_m = (n / 2) * (n - n / 2);
    const int m = n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - n + 2));
    const std::uint64_t seed = rng();
    pools[1].checks.push_back({"bipk2 random_connected_bipartite(" + std::to_string(n) + "," + std::to_string(m) +
                                   "," + std::to_string(seed) + ")",
                               [n, m, seed] {
                                 const Graph g = random_connected_bipartite(n, m, seed);
                                 return certified(cartesian_product(g, path(2)), bipartite_product_k2(g));
                               }});
  }

  const std::vector<Graph> pool = structured_pool(o.seed);
  pools[2].name = "msp_pattern_weighting A";
  pools[3].name = "msp_pattern_weighting B";
  pools[4].name = "cycle_block_weighting";
  pools[6].name = "dominant_vertex_weighting";
  for (const Graph& g : pool) {
    for (const auto& [slot, variant] : {std::pair{2, MspVariant::A}, std::pair{3, MspVariant::B}}) {
      auto& checks = pools[static_cast<std::size_t>(slot)].checks;
      if (checks.size() < kMaxConstructorInstances && msp_pattern_violation(g, variant).empty()) {
        checks.push_back({std::string("msp-") + (variant == MspVariant::A ? "a " : "b ") + describe_graph(g),
                          [g, variant] { return certified(g, msp_pattern_weighting(g, variant)); }});
      }
    }
    if (pools[4].checks.size() < kMaxConstructorInstances && cycle_block_violation(g).empty()) {
      pools[4].checks.push_back(
          {"cycle-blocks " + describe_graph(g), [g] { return certified(g, cycle_block_weighting(g)); }});
    }
    const std::vector<Vertex> dominant = dominant_vertices(g);
    if (pools[6].checks.size() < kMaxConstructorInstances && !dominant.empty() && g.edge_count() <= kGuardEdgesK2) {
      const Vertex v = dominant.back();
      pools[6].checks.push_back({"dominant v=" + std::to_string(v) + " " + describe_graph(g),
                                 [g, v] { return certified(g, dominant_vertex_weighting(g, v)); }});
    }
  }
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t seed = o.seed * 1000 + static_cast<std::uint64_t>(i);
    const Graph g = random_cactus(seed);
    if (!cycle_block_violation(g).empty()) continue;
    pools[4].checks.push_back({"cycle-blocks random_cactus(" + std::to_string(seed) + ")",
                               [g] { return certified(g, cycle_block_weighting(g)); }});
  }

  pools[5].name = "multipartite_weighting";
  for (int r = 2; r <= 5; ++r) {
    for (int n = 2; n <= 6; ++n) {
      pools[5].checks.push_back({"multipartite r=" + std::to_string(r) + " n=" + std::to_string(n), [r, n] {
                                   const WeightedGraph wg = multipartite_weighting(r, n);
                                   return certified(wg.graph, wg.weighting);
                                 }});
    }
  }

  std::vector<Check> checks;
  for (ConstructorPool& p : pools) {
    const std::size_t count = p.checks.size();
    checks.push_back({p.name + " instance count", [count] {
                        return Outcome::check(count >= kMinConstructorInstances,
                                              ">= " + std::to_string(kMinConstructorInstances),
                                              std::to_string(count));
                      }});
    for (Check& c : p.checks) checks.push_back(std::move(c));
  }
  return checks;
}

struct CampaignEntry {
  CampaignInfo info;
  std::vector<Check> (*build)(const CampaignOptions&);
};

const std::vector<CampaignEntry>& registry() {
  static const std::vector<CampaignEntry> entries{
      {{"thm-1.3", "mu of paths, cycles (n <= max-vertices, default 12) and cliques (n <= 6) vs closed forms"},
       basic_families},
      {{"thm-2.1", "product weighting of oracle witnesses over pairs of small paths, cycles and cliques"},
       composition},
      {{"lemma-2.3", "connectivity of products, factor order <= max-vertices (default 8), product order <= 36"},
       connectivity_formula},
      {{"thm-2.4", "G x K2 for random connected bipartite G (samples default 100, max-vertices default 8)"},
       bipartite_products},
      {{"prop-2.5", "mu(G x H) = 1 iff mu(G) = mu(H) = 1, factors with 3..max-vertices (default 5) vertices"},
       product_vc1},
      {{"remark", "end-edge weights of proper 2-weightings of paths with 4..max-edges (default 16) edges"},
       end_edges},
      {{"thm-3.7", "mu <= 2 without single-edge maximal simple paths (n <= max-vertices, default 8, plus samples)"},
       no_single_edge},
      {{"prop-3.6", "multipartite weighting for r, n in 2..max-vertices (default 3)"}, multipartite},
      {{"thm-4.2", "theta classification, r = 3, 4, total length <= max-edges (default 16)"},
       theta_classification},
      {{"thm-4.3", "bipartite gpt classification, total length <= max-edges (default 14)"}, gpt_classification},
      {{"soundness", "rule-engine bound >= mu on connected graphs with 3..max-vertices (default 7) vertices"},
       soundness},
      {{"constructors", "every constructor certified proper on at least 20 instances"}, constructors},
  };
  return entries;
}

std::string format_seconds(double seconds) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, seconds, std::chars_format::fixed, 3);
  return std::string(buffer, result.ptr);
}

}  // namespace

const std::vector<CampaignInfo>& campaigns() {
  static const std::vector<CampaignInfo> infos = [] {
    std::vector<CampaignInfo> out;
    for (const CampaignEntry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

VerificationReport run_campaign(std::string_view id, const CampaignOptions& options) {
  for (const CampaignEntry& e : registry()) {
    if (e.info.id == id) return execute(id, e.build(options), options.threads);
  }
  throw InvalidArgument("unknown theorem id '" + std::string(id) + "'");
}

std::string describe_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e > 0) out += ',';
    out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  }
  return out;
}

std::string format_report_text(const VerificationReport& r) {
  std::string out = "theorem " + r.theorem + ": " + std::to_string(r.passes) + "/" + std::to_string(r.instances) +
                    " passed, " + std::to_string(r.failures.size()) + " failed";
  if (r.skipped > 0) out += ", " + std::to_string(r.skipped) + " skipped (search guard)";
  out += ", " + format_seconds(r.wall_seconds) + " s\n";
  for (const VerificationFailure& f : r.failures) {
    out += "  FAIL " + f.instance + ": expected " + f.expected + ", got " + f.got + "\n";
  }
  return out;
}

std::string format_report_machine(const VerificationReport& r) {
  std::string out = "theorem=" + r.theorem + "\ninstances=" + std::to_string(r.instances) +
                    "\npasses=" + std::to_string(r.passes) + "\nfailures=" + std::to_string(r.failures.size()) +
                    "\nskipped=" + std::to_string(r.skipped) + "\nwall_seconds=" + format_seconds(r.wall_seconds) +
                    "\n";
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const std::string key = "failure." + std::to_string(i) + ".";
    out += key + "instance=" + r.failures[i].instance + "\n";
    out += key + "expected=" + r.failures[i].expected + "\n";
    out += key + "got=" + r.failures[i].got + "\n";
  }
  return out;
}

}  // namespace vcew
