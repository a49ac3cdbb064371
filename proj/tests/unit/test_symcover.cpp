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

#include <functional>
#include <random>
#include <set>
#include <tuple>

#include "random_graphs.hpp"
#include "symrig/fixtures.hpp"
#include "symrig/symcover.hpp"

namespace symrig {
namespace {

using NameSet = std::vector<std::string>;

std::multiset<NameSet> named(const SymmetricCover& sc, const CoveringGraph& cov) {
  std::multiset<NameSet> out;
  for (const auto& s : sc.sets) {
    NameSet names;
    for (auto x : s.vertices) names.push_back(cov.vertex_names()[x]);
    std::sort(names.begin(), names.end());
    out.insert(names);
  }
  return out;
}

// Calls f on every set partition of {0..m-1}, as restricted growth strings.
void each_partition(std::size_t m, const std::function<void(const std::vector<EdgeSubset>&)>& f) {
  std::vector<std::size_t> label(m, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == m) {
      std::vector<EdgeSubset> parts(blocks);
      for (std::size_t e = 0; e < m; ++e) parts[label[e]].push_back(e);
      f(parts);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

std::vector<EdgeSubset> random_partition(std::mt19937_64& rng, std::size_t m) {
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::vector<EdgeSubset> parts(m);
  for (EdgeId e = 0; e < m; ++e) parts[pick(rng)].push_back(e);
  std::erase_if(parts, [](const EdgeSubset& p) { return p.empty(); });
  return parts;
}

TEST(SymmetricCoverTest, WorkedExampleOnFigureOne) {
  const auto f = fixtures::load("fig1b");
  const auto cov = expand(f.graph);
  const auto sc = cover_from_partition(f.graph, f.partitions.at("cover"));
  const std::multiset<NameSet> expected{
      {"id:1", "id:2", "s:1", "s:2"},
      {"r^1:1", "r^1:2", "s*r^2:1", "s*r^2:2"},
      {"r^2:1", "r^2:2", "s*r^1:1", "s*r^1:2"},
      {"id:1", "r^1:1", "r^2:1"},
      {"s*r^1:1", "s*r^2:1", "s:1"},
      {"id:1", "s*r^2:1"},
      {"r^1:1", "s*r^1:1"},
      {"r^2:1", "s:1"},
  };
  EXPECT_EQ(named(sc, cov), expected);
  EXPECT_EQ(static_cast<long>(sc.sets.size()), f.expected_int("cover_sets"));
  EXPECT_TRUE(covers_all_edges(sc, cov));
}

TEST(SymmetricCoverTest, BalancedEdgeOverZ2) {
  const auto z2 = GroupSpec::cyclic(2);
  GainGraph g(z2);
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge(0, 1, kIdentity);
  const auto sc = cover_from_partition(g, {{0}});
  ASSERT_EQ(sc.sets.size(), 2u);
  EXPECT_EQ(sc.sets[0].vertices.size(), 2u);
  std::vector<std::size_t> common;
  std::set_intersection(sc.sets[0].vertices.begin(), sc.sets[0].vertices.end(), sc.sets[1].vertices.begin(),
                        sc.sets[1].vertices.end(), std::back_inserter(common));
  EXPECT_TRUE(common.empty());
}

TEST(SymmetricCoverTest, WholeEdgeSetOfStar) {
  const auto f = fixtures::load("fig2b");
  const auto sc = cover_from_partition(f.graph, {f.graph.all_edges()});
  ASSERT_EQ(sc.sets.size(), 1u);
  EXPECT_EQ(sc.sets[0].group.order(), 6u);
  EXPECT_EQ(sc.sets[0].vertices.size(), expand(f.graph).vertex_count());
}

TEST(SymmetricCoverTest, RejectsNonPartitions) {
  const auto f = fixtures::load("fig1b");
  EXPECT_THROW(cover_from_partition(f.graph, {{0, 1}, {2}}), InvalidInput);
  EXPECT_THROW(cover_from_partition(f.graph, {{0, 1}, {1, 2, 3}}), InvalidInput);
  EXPECT_THROW(cover_from_partition(f.graph, {{0, 1, 2, 3}, {}}), InvalidInput);
  EXPECT_THROW(cover_from_partition(f.graph, {{0, 1, 2, 3, 9}}), InvalidInput);
}

TEST(SymmetricCoverTest, StructureOnRandomPartitions) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto grp = testing::small_groups()[trial % testing::small_groups().size()];
    const auto g = testing::random_gain_graph(rng, grp, {1, 4, 1, 8, true});
    const auto cov = expand(g);
    const auto parts = random_partition(rng, g.edge_count());
    const auto sc = cover_from_partition(g, parts);
    ASSERT_TRUE(covers_all_edges(sc, cov));
    std::vector<std::size_t> per_part(parts.size(), 0);
    for (std::size_t i = 0; i < sc.sets.size(); ++i) {
      const auto& s = sc.sets[i];
      ++per_part[s.part];
      ASSERT_EQ(s.vertices.size(), s.group.order() * vertices_of(g, sc.parts[s.part]).size());
      // Every edge of the part lifts into the first translate.
      EXPECT_EQ(sc.in_x2(i), s.group.order() > 1);
      EXPECT_EQ(sc.in_x2(i), !is_balanced(g, sc.parts[s.part]));
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const auto first = std::find_if(sc.sets.begin(), sc.sets.end(), [&](const auto& s) { return s.part == p; });
      ASSERT_EQ(per_part[p] * first->group.order(), grp.order());
    }
  }
}

TEST(SymmetricCoverTest, OverlapIsSharedWithLargeSets) {
  const auto f = fixtures::load("fig1b");
  const auto sc = cover_from_partition(f.graph, f.partitions.at("cover"));
  for (std::size_t i = 0; i < sc.sets.size(); ++i) {
    for (auto x : sc.overlap(i)) {
      EXPECT_TRUE(std::binary_search(sc.sets[i].vertices.begin(), sc.sets[i].vertices.end(), x));
      bool shared = false;
      for (std::size_t j = 0; j < sc.sets.size(); ++j)
        shared = shared || (j != i && sc.in_x3(j) &&
                            std::binary_search(sc.sets[j].vertices.begin(), sc.sets[j].vertices.end(), x));
      EXPECT_TRUE(shared);
    }
  }
  EXPECT_EQ(sc.distinct_count(), 8u);
}

TEST(CoverBoundTest, StarFailsWithoutEdgeConnectivity) {
  const auto f = fixtures::load("fig2b");
  const auto sc = cover_from_partition(f.graph, f.partitions.at("rho"));
  const auto bound = check_cover_lower_bound(f.graph, sc, CoverVariant::forced);
  EXPECT_FALSE(bound.holds);
  ASSERT_TRUE(bound.hypotheses.has_value());
  EXPECT_FALSE(*bound.hypotheses);
  EXPECT_EQ(bound.note, "not 2-edge-connected");
  const auto quick = check_cover_lower_bound(f.graph, sc, CoverVariant::forced, false);
  EXPECT_FALSE(quick.hypotheses.has_value());
  EXPECT_EQ(quick.lhs, bound.lhs);
}

TEST(CoverBoundTest, HoldsOnFigureFour) {
  const auto f = fixtures::load("fig4");
  const auto sc = cover_from_partition(f.graph, f.partitions.at("mu"));
  const auto forced = check_cover_lower_bound(f.graph, sc, CoverVariant::forced);
  EXPECT_TRUE(*forced.hypotheses);
  EXPECT_TRUE(forced.holds);
  const auto iota = check_cover_lower_bound(f.graph, sc, CoverVariant::iota1);
  EXPECT_FALSE(*iota.hypotheses);
}

// Every partition of every small graph meeting the hypotheses satisfies the
// inequality, as long as no cover set is the whole vertex set.
TEST(CoverBoundTest, InequalityUnderHypotheses) {
  std::mt19937_64 rng(43);
  std::vector<GainGraph> graphs;
  // Below four vertices only these groups admit 6-gain-mixed-connected graphs
  // small enough for exhaustive partitions; order 2 is sampled further down.
  for (const auto& [grp, max_edges, wanted] :
       {std::tuple{GroupSpec::cyclic(3), 9, 3}, std::tuple{GroupSpec::cyclic(4), 8, 12},
        std::tuple{GroupSpec::cyclic(5), 8, 12}}) {
    std::size_t taken = 0;
    for (int trial = 0; trial < 3000 && taken < static_cast<std::size_t>(wanted); ++trial) {
      auto g = testing::random_gain_graph(rng, grp, {1, 3, 4, static_cast<std::size_t>(max_edges), true});
      if (!is_n_gain_mixed_connected(g, 6).connected) continue;
      graphs.push_back(std::move(g));
      ++taken;
    }
  }
  ASSERT_EQ(graphs.size(), 27u);
  std::size_t checked = 0, whole = 0;
  for (const auto& g : graphs) {
    each_partition(g.edge_count(), [&](const std::vector<EdgeSubset>& parts) {
      const auto bound = check_cover_lower_bound(g, cover_from_partition(g, parts), CoverVariant::forced, false);
      if (!bound.proper) {
        ++whole;
        return;
      }
      ASSERT_TRUE(bound.holds);
      ++checked;
    });
  }
  EXPECT_GT(checked, 5000u);
  EXPECT_GT(whole, 0u);

  // Dense graphs beyond the exhaustive range, with sampled partitions.
  for (const auto& g : {testing::complete_gain_graph(GroupSpec::cyclic(3), 3),
                        testing::complete_gain_graph(GroupSpec::reflection(), 4),
                        testing::complete_gain_graph(GroupSpec::cyclic(5), 2)}) {
    ASSERT_TRUE(is_n_gain_mixed_connected(g, 6).connected) << g.group().name();
    for (int i = 0; i < 500; ++i) {
      const auto sc = cover_from_partition(g, random_partition(rng, g.edge_count()));
      const auto bound = check_cover_lower_bound(g, sc, CoverVariant::forced, false);
      if (bound.proper) {
        ASSERT_TRUE(bound.holds);
      }
    }
  }
}

TEST(CoverBoundTest, WholeVertexSetBreaksTheBound) {
  // The single-part cover is {V~}: 2|V~| - 3 on the left, at least 2|V~| on the right.
  const auto g = testing::complete_gain_graph(GroupSpec::cyclic(3), 3);
  const auto bound = check_cover_lower_bound(g, cover_from_partition(g, {g.all_edges()}), CoverVariant::forced);
  EXPECT_FALSE(bound.proper);
  EXPECT_FALSE(bound.holds);
  EXPECT_FALSE(*bound.hypotheses);
  EXPECT_EQ(bound.note, "a cover set is the whole vertex set");
}

}  // namespace
}  // namespace symrig
