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

#pragma once

#include <chrono>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "symrig.hpp"

namespace symrig::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

using Check = std::function<std::string(bool&)>;

inline std::string eq(const std::string& what, long got, long want, bool& ok) {
  ok = ok && got == want;
  return what + " " + std::to_string(got) + (got == want ? " == " : " != ") + std::to_string(want) + "; ";
}

inline std::string truth(const std::string& what, bool got, bool want, bool& ok) {
  ok = ok && got == want;
  return what + (got ? " true" : " false") + (got == want ? "; " : " (expected otherwise); ");
}

inline const std::vector<EdgeSubset>& parts(const fixtures::Fixture& f, const std::string& key) {
  const auto it = f.partitions.find(key);
  if (it == f.partitions.end()) throw InvalidInput("fixture " + f.name + " has no partition '" + key + "'");
  return it->second;
}

inline RankOptions with_partition(const fixtures::Fixture& f, const std::string& key) {
  RankOptions o;
  o.candidate_partitions.push_back(parts(f, key));
  return o;
}

inline std::vector<std::pair<std::string, Check>> checks(const std::vector<std::uint64_t>& seeds) {
  std::vector<std::pair<std::string, Check>> out;
  auto add = [&](std::string name, Check c) { out.emplace_back(std::move(name), std::move(c)); };

  add("group: <s, r> in C_3v is dihedral of order 6", [](bool& ok) {
    const auto d3 = GroupSpec::dihedral(3);
    const auto h = subgroup_generated(d3, {d3.parse("s"), d3.parse("r")});
    std::string s = eq("order", static_cast<long>(h.order()), 6, ok);
    return s + truth("dihedral", classify_subgroup(h) == SubgroupClass::dihedral, true, ok);
  });

  add("fig1b: loop r read forward has gain r; E generates C_3v", [](bool& ok) {
    const auto f = fixtures::load("fig1b");
    const auto& grp = f.graph.group();
    const GroupElement loop = walk_gain(f.graph, Walk{*f.graph.find_vertex("1"), {{2, Direction::forward}}});
    std::string s = truth("loop gain is r", loop == grp.parse("r"), true, ok);
    return s + eq("|<E>|", static_cast<long>(induced_subgroup(f.graph, f.graph.all_edges(), 0).order()), 6, ok);
  });

  add("fig1b: covering has 12 vertices and 21 edges", [](bool& ok) {
    const auto f = fixtures::load("fig1b");
    const auto cov = expand(f.graph);
    std::string s = eq("vertices", static_cast<long>(cov.vertex_count()), f.expected_int("covering_vertices"), ok);
    return s + eq("edges", static_cast<long>(cov.edge_count()), f.expected_int("covering_edges"), ok);
  });

  add("fixtures: expand then quotient reproduces each gain graph", [](bool& ok) {
    std::string s;
    for (const auto& name : fixtures::bundled_names()) {
      const auto g = fixtures::load(name).graph;
      const bool same = is_switching_of(g, quotient_of(expand(g)));
      s += truth(name, same, true, ok);
    }
    return s;
  });

  add("covering: a loop s over Z_2 lifts to one fixed edge", [](bool& ok) {
    const auto z2 = GroupSpec::cyclic(2);
    GainGraph g(z2);
    g.add_vertex("v");
    g.add_edge(0, 0, z2.parse("r"));
    const auto cov = expand(g);
    std::string s = eq("edges", static_cast<long>(cov.edge_count()), 1, ok);
    return s + eq("fixed", static_cast<long>(fixed_edges(cov, g).fixed_edges.size()), 1, ok);
  });

  add("covering: two K_4 joined by a fixed matching lose the matching", [](bool& ok) {
    const auto cs = GroupSpec::reflection();
    GainGraph g(cs);
    for (int i = 0; i < 4; ++i) g.add_vertex("v" + std::to_string(i));
    for (VertexId a = 0; a < 4; ++a)
      for (VertexId b = a + 1; b < 4; ++b) g.add_edge(a, b, kIdentity);
    for (VertexId v = 0; v < 4; ++v) g.add_edge(v, v, cs.parse("s"));
    const auto cov = expand(g);
    const auto stripped = strip_fixed(cov, g);
    std::string s = eq("covering edges", static_cast<long>(cov.edge_count()), 16, ok);
    s += eq("after stripping", static_cast<long>(stripped.covering.edge_count()), 12, ok);
    return s + eq("quotient loops left", static_cast<long>(stripped.quotient.edge_count()), 6, ok);
  });

  add("fig2a: K_5 blocks are balanced with rho 7", [](bool& ok) {
    const auto f = fixtures::load("fig2a");
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& part = parts(f, "rho")[i];
      s += truth("balanced", is_balanced(f.graph, part), true, ok);
      s += eq("rho", count(CountFamily::rho(), f.graph, part), 7, ok);
    }
    return s;
  });

  add("fig2b: every part has rho 1; loop triples are cyclic with beta 2", [](bool& ok) {
    const auto f = fixtures::load("fig2b");
    std::string s;
    bool all_one = true;
    for (const auto& part : parts(f, "rho")) all_one = all_one && count(CountFamily::rho(), f.graph, part) == 1;
    s += truth("all parts rho 1", all_one, true, ok);
    const auto c = classify(f.graph, parts(f, "rho").front());
    s += truth("cyclic", c.kind == BalanceKind::unbalanced_cyclic, true, ok);
    return s + eq("beta", c.beta(), 2, ok);
  });

  add("fig4: K_6 blocks with two s-edges are unbalanced with mu 10", [](bool& ok) {
    const auto f = fixtures::load("fig4");
    const auto& part = parts(f, "mu").front();
    std::string s = truth("balanced", is_balanced(f.graph, part), false, ok);
    return s + eq("mu", count(CountFamily::mu(), f.graph, part), 10, ok);
  });

  add("switching along a spanning tree makes its gains trivial", [](bool& ok) {
    std::string s;
    for (const auto& name : {"fig2b", "fig4"}) {
      const auto f = fixtures::load(name);
      const auto g = switch_labels(f.graph, spanning_tree_switch(f.graph));
      std::size_t trivial = 0;
      for (const auto& e : g.edges())
        if (!e.is_loop() && e.gain == kIdentity) ++trivial;
      s += truth(std::string(name) + " tree edges trivial", trivial + 1 >= g.vertex_count(), true, ok);
      s += truth("balance preserved", is_balanced(g, g.all_edges()) == is_balanced(f.graph, f.graph.all_edges()),
                 true, ok);
    }
    return s;
  });

  for (const auto& name : {"fig2a", "fig2b", "fig3", "fig4"}) {
    add(std::string(name) + ": covering mixed-connectivity level", [name](bool& ok) {
      const auto f = fixtures::load(name);
      const auto cov = expand(f.graph);
      const int m = static_cast<int>(f.expected_int("mixed_connectivity"));
      std::string s = truth(std::to_string(m) + "-mixed", is_n_mixed_connected(cov, m).connected, true, ok);
      const auto above = is_n_mixed_connected(cov, m + 1);
      s += truth(std::to_string(m + 1) + "-mixed", above.connected, false, ok);
      if (above.witness) s += eq("cut cost", static_cast<long>(above.witness->cost), m, ok);
      return s;
    });
  }

  add("fig2b: quotient edge connectivity is 1", [](bool& ok) {
    const auto f = fixtures::load("fig2b");
    return eq("edge connectivity", static_cast<long>(edge_connectivity(f.graph).value),
              f.expected_int("edge_connectivity"), ok);
  });

  add("edge traces: fixed loop on a trivial frame 1, enlarging chord 6", [](bool& ok) {
    const auto z2 = GroupSpec::cyclic(2);
    GainGraph g(z2);
    g.add_vertex("v");
    g.add_edge(0, 0, z2.parse("r"));
    std::string s = eq("loop", static_cast<long>(edge_trace(g, Subgraph{{0}, {}}, 0).size), 1, ok);
    const auto z6 = GroupSpec::cyclic(6);
    GainGraph c(z6);
    c.add_vertex("a");
    c.add_vertex("b");
    c.add_edge(0, 1, kIdentity);
    c.add_edge(0, 1, z6.parse("r^2"));
    c.add_edge(0, 1, z6.parse("r^3"));
    return s + eq("chord", static_cast<long>(edge_trace(c, Subgraph{{0, 1}, {0, 1}}, 2).size), 6, ok);
  });

  add("fig2a: no k-block with k <= 4, a 5-block exists", [](bool& ok) {
    const auto f = fixtures::load("fig2a");
    std::string s = truth("block up to 4", find_k_block(f.graph, 4).has_value(), false, ok);
    const auto b = find_k_block(f.graph, 5);
    return s + eq("least k", b ? static_cast<long>(b->k) : -1, 5, ok);
  });

  add("loop over Z_2 is mu-dependent", [](bool& ok) {
    const auto z2 = GroupSpec::cyclic(2);
    GainGraph g(z2);
    g.add_vertex("v");
    g.add_edge(0, 0, z2.parse("r"));
    std::string s = eq("mu", count(CountFamily::mu(), g, {0}), 0, ok);
    return s + truth("independent", is_independent(CountFamily::mu(), g, {0}).independent, false, ok);
  });

  for (const auto& [name, key] : std::vector<std::pair<std::string, std::string>>{
           {"fig2a", "rho"}, {"fig2b", "rho"}, {"fig3", "rho"}, {"fig4", "mu"}}) {
    add(name + ": partition value falls below the threshold", [name, key](bool& ok) {
      const auto f = fixtures::load(name);
      const auto family = key == "mu" ? CountFamily::mu() : CountFamily::rho();
      const long n2 = 2 * static_cast<long>(f.graph.vertex_count());
      const long threshold = key == "mu" ? n2 - 2 : forced_threshold(f.graph.group(), f.graph.vertex_count());
      std::string s = eq("sum", symrig::detail::partition_value(family, f.graph, parts(f, key)),
                         f.expected_int("partition_sum"), ok);
      return s + eq("threshold", threshold, f.expected_int("threshold"), ok);
    });
  }

  for (const auto& name : {"fig1b", "fig2a", "fig2b", "fig3", "fig4"}) {
    add(std::string(name) + ": forced rigidity, combinatorial and numeric", [name, seeds](bool& ok) {
      const auto f = fixtures::load(name);
      const bool want = name == std::string("fig1b") ? true : f.expected_bool("forced_rigid");
      RankOptions o;
      if (!f.partitions.empty() && f.partitions.begin()->first == "rho") o = with_partition(f, "rho");
      std::string s = truth("combinatorial", is_forced_rigid_combinatorial(f.graph, o).rigid, want, ok);
      return s + truth("numeric", motion_space(f.graph, 0, seeds).rigid, want, ok);
    });
  }

  add("fig4: iota_1 rigidity, combinatorial and numeric", [seeds](bool& ok) {
    const auto f = fixtures::load("fig4");
    const bool want = f.expected_bool("iota1_rigid");
    std::string s = truth("combinatorial", is_iota_rigid_combinatorial(f.graph, 1, with_partition(f, "mu")).rigid,
                          want, ok);
    return s + truth("numeric", motion_space(f.graph, 1, seeds).rigid, want, ok);
  });

  for (const auto& [name, key] : std::vector<std::pair<std::string, std::string>>{{"fig2a", "rho"},
                                                                                  {"fig4", "mu"}}) {
    add(name + ": covering framework is not rigid", [name, key, seeds](bool& ok) {
      const auto f = fixtures::load(name);
      std::string s = truth("combinatorial", is_rigid_combinatorial(f.graph, with_partition(f, key)).rigid, false, ok);
      return s + truth("numeric", is_rigid_numeric(f.graph, seeds).rigid, false, ok);
    });
  }

  add("fig1b: symmetric cover has 8 sets of sizes 4,4,4,3,3,2,2,2", [](bool& ok) {
    const auto f = fixtures::load("fig1b");
    const auto sc = cover_from_partition(f.graph, parts(f, "cover"));
    std::vector<long> sizes;
    for (const auto& set : sc.sets) sizes.push_back(static_cast<long>(set.vertices.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    std::string s = eq("sets", static_cast<long>(sc.sets.size()), f.expected_int("cover_sets"), ok);
    return s + truth("sizes", sizes == std::vector<long>{4, 4, 4, 3, 3, 2, 2, 2}, true, ok);
  });

  return out;
}

}  // namespace detail

/// Runs every bundled reproduction check. A check that throws fails with the
/// error message as its detail.
inline std::vector<CheckResult> verify_paper(const std::vector<std::uint64_t>& seeds) {
  std::vector<CheckResult> out;
  for (auto& [name, check] : detail::checks(seeds)) {
    CheckResult r{name, true, "", 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check(r.passed);
      if (!r.detail.empty()) r.detail.resize(r.detail.size() - 2);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace symrig::cli
