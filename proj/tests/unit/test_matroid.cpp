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

#include <gtest/gtest.h>

#include <random>

#include "random_graphs.hpp"
#include "symrig/fixtures.hpp"
#include "symrig/matroid.hpp"

namespace symrig {
namespace {

EdgeSubset range(EdgeId from, EdgeId to) {
  EdgeSubset out;
  for (EdgeId e = from; e < to; ++e) out.push_back(e);
  return out;
}

GainGraph balanced_k4() {
  GainGraph g(GroupSpec::reflection());
  for (int v = 0; v < 4; ++v) g.add_vertex("v" + std::to_string(v));
  for (VertexId a = 0; a < 4; ++a)
    for (VertexId b = a + 1; b < 4; ++b) g.add_edge(a, b, kIdentity);
  return g;
}

// Independent rank oracle: largest subset whose every nonempty subset F has count(F) >= |F|.
long brute_rank(const CountFamily& f, const GainGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<char> good(std::size_t{1} << m, 0);
  good[0] = 1;
  long best = 0;
  for (std::uint64_t s = 1; s < good.size(); ++s) {
    EdgeSubset x;
    for (EdgeId e = 0; e < m; ++e)
      if ((s >> e) & 1U) x.push_back(e);
    bool ok = count(f, g, x) >= static_cast<long>(x.size());
    for (EdgeId e = 0; e < m && ok; ++e)
      if ((s >> e) & 1U) ok = good[s ^ (std::uint64_t{1} << e)] != 0;
    good[s] = ok;
    if (ok) best = std::max(best, static_cast<long>(x.size()));
  }
  return best;
}

TEST(CountTest, FixtureParts) {
  const auto a = fixtures::load("fig2a");
  EXPECT_EQ(count(CountFamily::rho(), a.graph, range(0, 10)), 7);
  const auto b = fixtures::load("fig2b");
  EXPECT_EQ(count(CountFamily::rho(), b.graph, {0, 1, 2}), 1);
  const auto c = fixtures::load("fig4");
  EXPECT_EQ(count(CountFamily::mu(), c.graph, range(0, 17)), 10);

  const auto cs = GroupSpec::reflection();
  GainGraph loop(cs);
  loop.add_vertex("v");
  loop.add_edge(0, 0, cs.parse("s"));
  EXPECT_EQ(count(CountFamily::mu(), loop, {0}), 0);
  EXPECT_EQ(count(CountFamily::rho(), loop, {0}), 1);
}

TEST(CountTest, RhoCorrections) {
  const auto c3v = GroupSpec::dihedral(3);
  const auto f = fixtures::load("fig1b");
  EXPECT_EQ(count(CountFamily::rho(), f.graph, {0}), 1);
  EXPECT_EQ(count(CountFamily::rho(), f.graph, {2}), 1);
  EXPECT_EQ(count(CountFamily::rho(), f.graph, f.graph.all_edges()), 4);
  // Max over components: one balanced, one unbalanced.
  GainGraph g(c3v);
  for (auto n : {"a", "b", "c", "d"}) g.add_vertex(n);
  g.add_edge(0, 1, kIdentity);
  g.add_edge(2, 3, kIdentity);
  g.add_edge(2, 3, c3v.parse("r"));
  EXPECT_EQ(count(CountFamily::rho(), g, {0, 1}), 5);
  EXPECT_EQ(count(CountFamily::rho(), g, {0, 1, 2}), 7);
  EXPECT_THROW(count(CountFamily::rho(), g, {}), InvalidInput);
}

TEST(CountTest, NuCorrections) {
  const auto z5 = GroupSpec::cyclic(5);
  GainGraph g(z5);
  g.add_vertex("v");
  g.add_edge(0, 0, z5.parse("r"));
  g.add_edge(0, 0, z5.parse("r^2"));
  for (int t : {0, 1, 4}) EXPECT_EQ(count(CountFamily::nu(t), g, {0}), 1) << t;
  // A single loop is near-balanced, so t = 2 also gets the smaller correction.
  EXPECT_EQ(count(CountFamily::nu(2), g, {0}), 1);
  EXPECT_EQ(count(CountFamily::nu(2), g, {0, 1}), 2);
  EXPECT_EQ(count(CountFamily::nu(0), g, {0, 1}), 1);
}

TEST(CountTest, UnsupportedFamilies) {
  const auto g = GainGraph(GroupSpec::cyclic(3));
  EXPECT_THROW(count(CountFamily::mu(), g, {0}), Unsupported);
  EXPECT_THROW(count(CountFamily::nu(1), g, {0}), Unsupported);
  EXPECT_THROW(count(CountFamily::rho(), GainGraph(GroupSpec::dihedral(2)), {0}), Unsupported);
  EXPECT_THROW(count(CountFamily::nu(1), GainGraph(GroupSpec::cyclic(1001)), {0}), Unsupported);
}

TEST(CountTest, NuDominatesRho) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_gain_graph(rng, GroupSpec::cyclic(5), {1, 4, 1, 7, true});
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.edge_count()); ++s) {
      EdgeSubset x;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if ((s >> e) & 1U) x.push_back(e);
      const long r = count(CountFamily::rho(), g, x);
      for (int t = 0; t < 5; ++t) ASSERT_GE(count(CountFamily::nu(t), g, x), r);
    }
  }
}

TEST(IndependenceTest, Examples) {
  const auto k4 = balanced_k4();
  EXPECT_TRUE(is_independent(CountFamily::rho(), k4, {0}).independent);
  const auto dep = is_independent(CountFamily::rho(), k4, k4.all_edges());
  EXPECT_FALSE(dep.independent);
  EXPECT_EQ(dep.violating, k4.all_edges());
  EXPECT_TRUE(is_independent(CountFamily::rho(), k4, {0, 1, 2, 3, 4}).independent);

  const auto cs = GroupSpec::reflection();
  GainGraph loop(cs);
  loop.add_vertex("v");
  loop.add_edge(0, 0, cs.parse("s"));
  EXPECT_FALSE(is_independent(CountFamily::mu(), loop, {0}).independent);
  EXPECT_TRUE(is_independent(CountFamily::rho(), loop, {0}).independent);
  EXPECT_THROW(is_independent(CountFamily::rho(), k4, k4.all_edges(), 3), TooLarge);
}

TEST(RankTest, PartitionValuesOfFixtures) {
  struct Case {
    const char* name;
    CountFamily family;
  };
  for (const auto& c : {Case{"fig2a", CountFamily::rho()}, Case{"fig2b", CountFamily::rho()},
                        Case{"fig3", CountFamily::rho()}, Case{"fig4", CountFamily::mu()}}) {
    const auto f = fixtures::load(c.name);
    RankOptions options;
    options.candidate_partitions.push_back(f.partitions.begin()->second);
    const auto r = greedy_rank(c.family, f.graph, f.graph.all_edges(), options);
    ASSERT_EQ(r.candidate_values.size(), 1u);
    EXPECT_EQ(r.candidate_values.front(), f.expected_int("partition_sum")) << c.name;
    EXPECT_LE(r.upper, r.candidate_values.front());
    EXPECT_LE(r.lower, r.upper);
    EXPECT_TRUE(is_independent(c.family, f.graph, EdgeSubset(r.basis.begin(), r.basis.begin() + 10)).independent);
  }
}

TEST(RankTest, ThresholdsOfFixtures) {
  for (const auto& name : {"fig2a", "fig2b", "fig3"}) {
    const auto f = fixtures::load(name);
    EXPECT_EQ(forced_threshold(f.graph.group(), f.graph.vertex_count()), f.expected_int("threshold")) << name;
  }
  EXPECT_EQ(forced_threshold(GroupSpec::cyclic(1), 3), 3);
  EXPECT_THROW(forced_threshold(GroupSpec::dihedral(4), 3), Unsupported);
}

TEST(RankTest, RejectsBadPartitions) {
  const auto k4 = balanced_k4();
  RankOptions options;
  options.candidate_partitions.push_back({{0, 1}, {2}});
  EXPECT_THROW(greedy_rank(CountFamily::rho(), k4, k4.all_edges(), options), InvalidInput);
  options.candidate_partitions = {{{0, 1, 2}, {2, 3, 4, 5}}};
  EXPECT_THROW(greedy_rank(CountFamily::rho(), k4, k4.all_edges(), options), InvalidInput);
}

TEST(RankTest, BalancedK4) {
  const auto k4 = balanced_k4();
  const auto r = rank(CountFamily::rho(), k4, k4.all_edges());
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value(), 5);
  EXPECT_EQ(exhaustive_rank(CountFamily::rho(), k4, k4.all_edges()).value, 5);
}

TEST(RankTest, GreedyMatchesExhaustiveAndBruteForce) {
  std::mt19937_64 rng(37);
  const std::vector<GroupSpec> groups{GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::cyclic(5),
                                      GroupSpec::reflection(), GroupSpec::dihedral(3)};
  for (int trial = 0; trial < 250; ++trial) {
    const auto& grp = groups[trial % groups.size()];
    const auto g = testing::random_gain_graph(rng, grp, {1, 4, 1, 8, true});
    std::vector<CountFamily> families{CountFamily::rho()};
    if (grp.order() == 2) families.push_back(CountFamily::mu());
    if (grp.order() == 5)
      for (int t = 0; t < 5; ++t) families.push_back(CountFamily::nu(t));
    for (const auto& f : families) {
      const auto greedy = greedy_rank(f, g, g.all_edges());
      ASSERT_TRUE(greedy.exact);
      const auto dp = exhaustive_rank(f, g, g.all_edges());
      ASSERT_EQ(greedy.lower, dp.value) << f.name() << " trial " << trial;
      ASSERT_EQ(dp.value, brute_rank(f, g)) << f.name() << " trial " << trial;
      const auto all_parts = exhaustive_rank(f, g, g.all_edges(), 12, false);
      ASSERT_EQ(all_parts.value, dp.value);
      ASSERT_TRUE(is_independent(f, g, greedy.basis).independent);
      ASSERT_EQ(rank(f, g, g.all_edges()).value(), dp.value);
    }
  }
}

TEST(RankTest, BoundsOnLargeSets) {
  const auto f = fixtures::load("fig2a");
  RankOptions options;
  options.subset_cap = 4;
  const auto r = greedy_rank(CountFamily::rho(), f.graph, f.graph.all_edges(), options);
  EXPECT_LE(r.lower, 38);
  EXPECT_TRUE(is_independent(CountFamily::rho(), f.graph, EdgeSubset(r.basis.begin(), r.basis.begin() + 12))
                  .independent);
  if (!r.exact) {
    EXPECT_THROW(r.value(), Indeterminate);
  }
}

TEST(RigidityTest, FixtureVerdicts) {
  EXPECT_FALSE(is_forced_rigid_combinatorial(fixtures::load("fig2a").graph).rigid);
  EXPECT_FALSE(is_forced_rigid_combinatorial(fixtures::load("fig2b").graph).rigid);
  EXPECT_FALSE(is_forced_rigid_combinatorial(fixtures::load("fig3").graph).rigid);
  const auto fig4 = fixtures::load("fig4");
  EXPECT_EQ(is_forced_rigid_combinatorial(fig4.graph).rigid, fig4.expected_bool("forced_rigid"));
  const auto iota = is_iota_rigid_combinatorial(fig4.graph, 1);
  EXPECT_FALSE(iota.rigid);
  EXPECT_EQ(iota.threshold, 70);
  EXPECT_LT(iota.rank.upper, 70);
  EXPECT_FALSE(is_rigid_combinatorial(fig4.graph).rigid);
  EXPECT_FALSE(is_rigid_combinatorial(fixtures::load("fig2a").graph).rigid);
}

TEST(RigidityTest, SmallExamples) {
  const auto z6 = GroupSpec::cyclic(6);
  GainGraph loops(z6);
  loops.add_vertex("v");
  loops.add_edge(0, 0, z6.parse("r"));
  loops.add_edge(0, 0, z6.parse("r^2"));
  // One orbit of six points joined by a hexagon and two triangles: rank 1 = 2|V| - 1.
  EXPECT_EQ(is_forced_rigid_combinatorial(loops).rank.value(), 1);
  EXPECT_TRUE(is_forced_rigid_combinatorial(loops).rigid);

  const auto z2 = GroupSpec::cyclic(2);
  GainGraph edge(z2);
  edge.add_vertex("a");
  edge.add_vertex("b");
  edge.add_edge(0, 1, kIdentity);
  const auto d = is_iota_rigid_combinatorial(edge, 1);
  EXPECT_FALSE(d.rigid);
  EXPECT_EQ(d.rank.value(), 1);
  EXPECT_EQ(d.threshold, 2);

  const auto z3 = GroupSpec::cyclic(3);
  GainGraph tri(z3);
  tri.add_vertex("v");
  tri.add_edge(0, 0, z3.parse("r"));
  EXPECT_TRUE(is_forced_rigid_combinatorial(tri).rigid);
  EXPECT_TRUE(is_rigid_combinatorial(tri).rigid);
  EXPECT_THROW(is_iota_rigid_combinatorial(tri, 1), Unsupported);

  // nu_2 over C_5: the loop pair is independent, so the rank reaches 2 = 2|V|.
  const auto z5 = GroupSpec::cyclic(5);
  GainGraph pair(z5);
  pair.add_vertex("v");
  pair.add_edge(0, 0, z5.parse("r"));
  pair.add_edge(0, 0, z5.parse("r^2"));
  const auto nu2 = is_iota_rigid_combinatorial(pair, 2);
  EXPECT_EQ(nu2.threshold, 2);
  EXPECT_EQ(nu2.rank.value(), 2);
  EXPECT_TRUE(nu2.rigid);
  EXPECT_TRUE(is_iota_rigid_combinatorial(pair, 1).rigid);
  EXPECT_TRUE(is_rigid_combinatorial(pair).rigid);
  EXPECT_THROW(is_rigid_combinatorial(GainGraph(GroupSpec::dihedral(2))), Unsupported);
}

}  // namespace
}  // namespace symrig
