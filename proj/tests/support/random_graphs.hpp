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

// Random gain graphs for property tests.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"

namespace symrig::testing {

struct RandomGraphSpec {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 4;
  std::size_t min_edges = 0;
  std::size_t max_edges = 8;
  bool loops = true;
};

/// Number of distinct edges the graph can hold: |G| per vertex pair and one
/// per inverse pair of non-identity elements per vertex.
inline std::size_t edge_capacity(const GroupSpec& grp, std::size_t n) {
  std::size_t loop_classes = 0;
  for (const auto& x : grp.elements())
    if (x != kIdentity && grp.index(x) <= grp.index(grp.inverse(x))) ++loop_classes;
  return n * (n - 1) / 2 * grp.order() + n * loop_classes;
}

/// Draws a graph by rejection: random endpoints and gains, duplicates skipped.
inline GainGraph random_gain_graph(std::mt19937_64& rng, const GroupSpec& grp, const RandomGraphSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> nv(spec.min_vertices, spec.max_vertices);
  const std::size_t n = nv(rng);
  GainGraph g(grp);
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  std::size_t cap = spec.loops ? edge_capacity(grp, n) : n * (n - 1) / 2 * grp.order();
  std::uniform_int_distribution<std::size_t> ne(std::min(spec.min_edges, cap), std::min(spec.max_edges, cap));
  const std::size_t target = ne(rng);
  std::uniform_int_distribution<std::size_t> pick_v(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_g(0, grp.order() - 1);
  for (int tries = 0; g.edge_count() < target && tries < 1000; ++tries) {
    const VertexId a = pick_v(rng);
    const VertexId b = pick_v(rng);
    if (a == b && !spec.loops) continue;
    const GroupElement x = grp.element(pick_g(rng));
    if (a == b && x == kIdentity) continue;
    try {
      g.add_edge(a, b, x);
    } catch (const InvalidInput&) {
    }
  }
  return g;
}

/// Every edge the group allows on n vertices.
inline GainGraph complete_gain_graph(const GroupSpec& grp, std::size_t n, bool loops = true) {
  GainGraph g(grp);
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a; b < n; ++b)
      for (const auto& x : grp.elements()) {
        if (a == b && (!loops || x == kIdentity || grp.index(x) > grp.index(grp.inverse(x)))) continue;
        g.add_edge(a, b, x);
      }
  return g;
}

/// Copy of g without the edges in `drop`.
inline GainGraph without_edges(const GainGraph& g, const EdgeSubset& drop) {
  GainGraph out(g.group());
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  for (const auto& e : g.edges())
    if (std::find(drop.begin(), drop.end(), e.id) == drop.end()) out.add_edge(e.tail, e.head, e.gain);
  return out;
}

/// The groups of order at most six.
inline std::vector<GroupSpec> small_groups() {
  return {GroupSpec::reflection(), GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::cyclic(4),
          GroupSpec::cyclic(5),    GroupSpec::cyclic(6), GroupSpec::dihedral(1), GroupSpec::dihedral(2),
          GroupSpec::dihedral(3)};
}

}  // namespace symrig::testing
