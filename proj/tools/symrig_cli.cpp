// Copyright 2026 The symrig Authors
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

// symrig command-line front end. Exit status: 0 success, 1 negative verdict
// of a predicate subcommand, 2 error.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symrig.hpp"
#include "verify_paper.hpp"

namespace {

using symrig::io::Json;
using namespace symrig;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Globals {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::size_t seeds = 3;
  double tol = symrig::detail::kRelativeTolerance;

  std::vector<std::uint64_t> seed_list() const {
    if (seed) return {*seed};
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s <= seeds; ++s) out.push_back(s);
    return out;
  }
};

void print_text(const Json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_text(value, indent + "  ");
    } else if (value.is_string()) {
      std::cout << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const Globals& opt, const Json& j) {
  if (opt.format == "text") {
    print_text(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

GainGraph load_graph(const std::string& input) { return fixtures::load(input).graph; }

std::vector<EdgeSubset> load_partition(const std::string& path) {
  return io::partition_from_json(io::read_json_file(path));
}

// ---- expand / quotient

int run_expand(const Globals& opt, const std::string& input) {
  const auto cov = expand(load_graph(input));
  if (opt.format == "text") {
    std::cout << to_dot(cov);
  } else {
    std::cout << io::to_json(cov).dump(2) << "\n";
  }
  return kOk;
}

int run_quotient(const Globals& opt, const std::string& input) {
  const auto cov = io::covering_from_json(io::read_json_file(input));
  emit(opt, io::to_json(quotient_of(cov)));
  return kOk;
}

// ---- connectivity

int run_mixed(const Globals& opt, const std::string& input, int n) {
  const auto g = load_graph(input);
  const auto cov = expand(g);
  const auto res = is_n_mixed_connected(cov, n);
  Json out = {{"n", n}, {"covering_vertices", cov.vertex_count()}, {"covering_edges", cov.edge_count()},
              {"connected", res.connected}};
  if (res.witness) {
    Json w = io::to_json(*res.witness, cov.graph());
    std::vector<std::string> names;
    for (std::size_t x : res.witness->vertices) names.push_back(cov.vertex_names()[x]);
    w["W_names"] = names;
    out["witness"] = w;
  }
  emit(opt, out);
  return res.connected ? kOk : kNegative;
}

int run_gain_mixed(const Globals& opt, const std::string& input, int n) {
  const auto g = load_graph(input);
  const auto res = is_n_gain_mixed_connected(g, n);
  Json out = {{"n", n}, {"connected", res.connected}};
  if (res.witness) {
    Json w = io::to_json(*res.witness, g);
    const auto cov = expand(g);
    const auto sep = symmetric_separation(g, cov, *res.witness);
    std::vector<std::string> u;
    for (std::size_t x : sep.vertices) u.push_back(cov.vertex_names()[x]);
    Json d = Json::array();
    for (std::size_t e : sep.edges)
      d.push_back({cov.vertex_names()[cov.graph().edges[e].first], cov.vertex_names()[cov.graph().edges[e].second]});
    w["covering_separation"] = {{"U", u}, {"D", d}, {"cost", sep.cost}};
    out["witness"] = w;
  }
  emit(opt, out);
  return res.connected ? kOk : kNegative;
}

// ---- rank

struct FamilyChoice {
  CountFamily family;
  std::optional<long> threshold;
  std::string label;
};

FamilyChoice choose_family(const std::string& name, int t, const GainGraph& g) {
  const long n2 = 2 * static_cast<long>(g.vertex_count());
  const GroupSpec& grp = g.group();
  if (name == "rho") {
    FamilyChoice c{CountFamily::rho(), std::nullopt, "forced-rigid"};
    try {
      c.threshold = forced_threshold(grp, g.vertex_count());
    } catch (const Unsupported&) {
    }
    return c;
  }
  if (name == "mu") return {CountFamily::mu(), n2 - 2, "iota_1-rigid"};
  if (name == "nu") {
    if (grp.kind() != GroupKind::cyclic) throw Unsupported("nu is defined over cyclic groups only");
    const int k = grp.k();
    const int tt = ((t % k) + k) % k;
    const long threshold = (tt == 0 || tt == 1 || tt == k - 1) ? n2 - 1 : n2;
    return {CountFamily::nu(tt), threshold, "iota_" + std::to_string(tt) + "-rigid"};
  }
  throw InvalidInput("unknown family '" + name + "' (expected rho, mu or nu)");
}

int run_rank(const Globals& opt, const std::string& input, const std::string& family, int t,
             const std::vector<std::string>& partitions) {
  const auto g = load_graph(input);
  const auto choice = choose_family(family, t, g);
  RankOptions options;
  for (const auto& p : partitions) options.candidate_partitions.push_back(load_partition(p));
  const auto r = rank(choice.family, g, g.all_edges(), options);
  Json out = io::to_json(r);
  out["family"] = choice.family.name();
  std::string verdict = "undetermined";
  if (choice.threshold) {
    const long th = *choice.threshold;
    out["threshold"] = th;
    const bool spans = g.vertex_count() < 2 || vertices_of(g, r.basis).size() == g.vertex_count();
    if (r.lower >= th && spans) {
      verdict = choice.label;
    } else if (r.upper < th || r.exact) {
      verdict = "not " + choice.label;
    }
  } else {
    verdict = "unsupported";
  }
  out["verdict"] = verdict;
  emit(opt, out);
  return kOk;
}

// ---- rigidity

struct Oracle {
  std::string status;  // rigid, flexible, indeterminate, unsupported
  Json detail = Json::object();
};

template <class F>
Oracle guarded(F&& f) {
  try {
    return f();
  } catch (const Unsupported& e) {
    return {"unsupported", {{"reason", e.what()}}};
  } catch (const Indeterminate& e) {
    return {"indeterminate", {{"reason", e.what()}}};
  }
}

Json decision_json(const RigidityDecision& d) {
  return {{"family", d.family.name()}, {"t", d.t}, {"threshold", d.threshold}, {"lower", d.rank.lower},
          {"upper", d.rank.upper}, {"exact", d.rank.exact}, {"rigid", d.rigid}};
}

Json motion_json(const MotionSpaceReport& m) {
  return {{"t", m.t}, {"subspace_dim", m.subspace_dim}, {"rank", m.rank}, {"kernel_dim", m.kernel_dim},
          {"trivial_dim", m.trivial_dim}, {"rigid", m.rigid}};
}

int run_rigidity(const Globals& opt, const std::string& input, const std::string& mode, int t,
                 const std::vector<std::string>& partitions) {
  const auto g = load_graph(input);
  const auto seeds = opt.seed_list();
  RankOptions options;
  for (const auto& p : partitions) options.candidate_partitions.push_back(load_partition(p));
  auto status = [](bool rigid) { return std::string(rigid ? "rigid" : "flexible"); };

  Oracle comb, num;
  if (mode == "forced" || mode == "iota") {
    const int tt = mode == "forced" ? 0 : t;
    comb = guarded([&] {
      const auto d = mode == "forced" ? is_forced_rigid_combinatorial(g, options)
                                      : is_iota_rigid_combinatorial(g, tt, options);
      return Oracle{status(d.rigid), decision_json(d)};
    });
    num = guarded([&] {
      const auto m = motion_space(g, tt, seeds, opt.tol);
      return Oracle{status(m.rigid), motion_json(m)};
    });
  } else if (mode == "full") {
    comb = guarded([&] {
      const auto d = is_rigid_combinatorial(g, options);
      Json chars = Json::array();
      for (const auto& c : d.characters) chars.push_back(decision_json(c));
      return Oracle{status(d.rigid), {{"characters", chars}, {"unsettled", d.unsettled}}};
    });
    num = guarded([&] {
      const auto n = is_rigid_numeric(g, seeds, opt.tol);
      Json chars = Json::array();
      for (const auto& c : n.characters) chars.push_back(motion_json(c));
      return Oracle{status(n.rigid), {{"rank", n.rank}, {"required_rank", n.required_rank}, {"characters", chars}}};
    });
  } else {
    throw InvalidInput("unknown mode '" + mode + "' (expected forced, iota or full)");
  }

  auto decided = [](const Oracle& o) { return o.status == "rigid" || o.status == "flexible"; };
  Json out = {{"mode", mode}, {"seeds", seeds}};
  if (mode == "iota") out["t"] = t;
  out["combinatorial"] = comb.detail;
  out["combinatorial"]["status"] = comb.status;
  out["numeric"] = num.detail;
  out["numeric"]["status"] = num.status;
  if (decided(comb) && decided(num) && comb.status != num.status) {
    out["verdict"] = "disagreement";
    emit(opt, out);
    std::cerr << "error: combinatorial and numeric verdicts disagree\n";
    return kError;
  }
  const Oracle& pick = decided(comb) ? comb : num;
  if (!decided(pick)) {
    out["verdict"] = "undetermined";
    emit(opt, out);
    std::cerr << "error: neither oracle settled the question\n";
    return kError;
  }
  out["verdict"] = pick.status;
  emit(opt, out);
  return pick.status == "rigid" ? kOk : kNegative;
}

// ---- cover

int run_cover(const Globals& opt, const std::string& input, const std::string& partition_path,
              const std::string& variant, bool hypotheses) {
  const auto f = fixtures::load(input);
  std::vector<EdgeSubset> partition;
  if (!partition_path.empty()) {
    partition = load_partition(partition_path);
  } else if (f.partitions.size() == 1) {
    partition = f.partitions.begin()->second;
  } else {
    throw InvalidInput("--partition is required when the input does not carry exactly one partition");
  }
  CoverVariant v;
  if (variant == "forced") {
    v = CoverVariant::forced;
  } else if (variant == "iota1") {
    v = CoverVariant::iota1;
  } else {
    throw InvalidInput("unknown variant '" + variant + "' (expected forced or iota1)");
  }
  const auto sc = cover_from_partition(f.graph, partition);
  const auto cov = expand(f.graph);
  Json sets = Json::array();
  for (const auto& s : sc.sets) {
    std::vector<std::string> names;
    for (std::size_t x : s.vertices) names.push_back(cov.vertex_names()[x]);
    sets.push_back({{"vertices", names}, {"part", s.part}, {"group_order", s.group.order()},
                    {"translate", f.graph.group().format(s.translate)}});
  }
  const auto bound = check_cover_lower_bound(f.graph, sc, v, hypotheses);
  Json b = {{"variant", variant}, {"lhs", bound.lhs}, {"rhs", bound.rhs}, {"holds", bound.holds}};
  if (bound.hypotheses) b["hypotheses"] = *bound.hypotheses;
  if (!bound.note.empty()) b["note"] = bound.note;
  emit(opt, {{"covering_vertices", sc.covering_vertices}, {"sets", sets}, {"bound", b}});
  return kOk;
}

// ---- verify-paper

int run_verify(const Globals& opt) {
  const auto results = cli::verify_paper(opt.seed_list());
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (opt.format == "json") {
    Json rows = Json::array();
    for (const auto& r : results)
      rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    std::cout << Json{{"checks", rows}, {"passed", all}}.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
                << "  " << std::right << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds << "s  "
                << r.detail << "\n";
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  if (!all) std::cerr << "error: verify-paper found mismatches\n";
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric framework rigidity from quotient gain graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Single placement seed (overrides --seeds)");
  app.add_option("--seeds", opt.seeds, "Use placement seeds 1..N")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol", opt.tol, "Relative singular-value threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.footer("Inputs are gain-graph JSON files or bundled fixture names; SYMRIG_FIXTURE_DIR overrides the fixture "
             "directory.");

  std::string input;
  int n = 0;
  int t = 0;
  std::string family = "rho", mode = "forced", partition, variant = "forced";
  std::vector<std::string> candidates;
  bool skip_hypotheses = false;

  auto* expand_cmd = app.add_subcommand("expand", "Covering graph of a gain graph");
  expand_cmd->add_option("graph", input, "Gain graph")->required();
  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient gain graph of a covering graph");
  quotient_cmd->add_option("covering", input, "Covering graph JSON")->required();

  auto* mixed_cmd = app.add_subcommand("check-mixed-conn", "Is the covering graph n-mixed-connected?");
  mixed_cmd->add_option("--n", n, "Connectivity level")->required()->check(CLI::PositiveNumber);
  mixed_cmd->add_option("graph", input, "Gain graph")->required();
  auto* gain_cmd = app.add_subcommand("check-gain-mixed-conn", "Is the gain graph n-gain-mixed-connected?");
  gain_cmd->add_option("--n", n, "Connectivity level")->required()->check(CLI::PositiveNumber);
  gain_cmd->add_option("graph", input, "Gain graph")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Rank of the edge set in a count matroid");
  rank_cmd->add_option("--family", family, "rho, mu or nu")->check(CLI::IsMember({"rho", "mu", "nu"}));
  rank_cmd->add_option("--t", t, "Character index for nu");
  rank_cmd->add_option("--candidate-partition", candidates, "Partition JSON giving an upper bound");
  rank_cmd->add_option("graph", input, "Gain graph")->required();

  auto* rig_cmd = app.add_subcommand("rigidity", "Combinatorial and numeric rigidity verdicts");
  rig_cmd->add_option("--mode", mode, "forced, iota or full")->check(CLI::IsMember({"forced", "iota", "full"}));
  rig_cmd->add_option("--t", t, "Character index for --mode iota");
  rig_cmd->add_option("--candidate-partition", candidates, "Partition JSON giving an upper bound");
  rig_cmd->add_option("graph", input, "Gain graph")->required();

  auto* cover_cmd = app.add_subcommand("cover", "Symmetric cover of a partition and its lower bound");
  cover_cmd->add_option("--partition", partition, "Partition JSON (defaults to the fixture's own)");
  cover_cmd->add_option("--variant", variant, "forced or iota1")->check(CLI::IsMember({"forced", "iota1"}));
  cover_cmd->add_flag("--no-hypotheses", skip_hypotheses, "Skip the connectivity hypotheses");
  cover_cmd->add_option("graph", input, "Gain graph")->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the bundled fixture reproduction checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (expand_cmd->parsed()) return run_expand(opt, input);
    if (quotient_cmd->parsed()) return run_quotient(opt, input);
    if (mixed_cmd->parsed()) return run_mixed(opt, input, n);
    if (gain_cmd->parsed()) return run_gain_mixed(opt, input, n);
    if (rank_cmd->parsed()) return run_rank(opt, input, family, t, candidates);
    if (rig_cmd->parsed()) return run_rigidity(opt, input, mode, t, candidates);
    if (cover_cmd->parsed()) return run_cover(opt, input, partition, variant, !skip_hypotheses);
    if (verify_cmd->parsed()) return run_verify(opt);
  } catch (const symrig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
