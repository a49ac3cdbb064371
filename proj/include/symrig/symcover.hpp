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

// Symmetric covers of covering graphs built from partitions of the quotient
// edge set, and the two lower-bound inequalities they satisfy under
// connectivity hypotheses.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symrig/connectivity.hpp"
#include "symrig/covering.hpp"
#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"

namespace symrig {

struct CoverSet {
  std::vector<std::size_t> vertices;  // covering vertex indices, sorted
  std::size_t part = 0;               // index of E_X in the partition
  Subgroup group;                     // Gamma_X
  GroupElement translate;             // X = translate . X_part
};

/// Kept as a multiset: sets from different parts are never merged, since the
/// inequalities count one set per coset of each part.
struct SymmetricCover {
  std::vector<EdgeSubset> parts;
  std::vector<CoverSet> sets;
  std::size_t covering_vertices = 0;

  bool in_x3(std::size_t i) const { return sets[i].vertices.size() >= 3; }
  bool in_xu(std::size_t i) const { return sets[i].group.order() >= 4; }
  bool in_x2(std::size_t i) const { return sets[i].group.order() > 1; }

  /// Y_X: vertices of X shared with another set of size at least three.
  std::vector<std::size_t> overlap(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (j == i || !in_x3(j)) continue;
      std::vector<std::size_t> common;
      std::set_intersection(sets[i].vertices.begin(), sets[i].vertices.end(), sets[j].vertices.begin(),
                            sets[j].vertices.end(), std::back_inserter(common));
      out.insert(out.end(), common.begin(), common.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t distinct_count() const {
    std::vector<std::vector<std::size_t>> all;
    for (const auto& s : sets) all.push_back(s.vertices);
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }
};

/// For each part E_i: per-component spanning-tree potentials h rooted at the
/// smallest vertex, Gamma_i generated by all cycle gains, X_i = {(g h(v), v)}
/// for g in Gamma_i, and one translate d X_i per left coset d Gamma_i.
inline SymmetricCover cover_from_partition(const GainGraph& g, const std::vector<EdgeSubset>& partition) {
  const GroupSpec& grp = g.group();
  std::vector<EdgeSubset> parts;
  EdgeSubset all;
  for (const auto& p : partition) {
    if (p.empty()) throw InvalidInput("partition contains an empty part");
    parts.push_back(normalized(p));
    require_subset(g, parts.back());
    all.insert(all.end(), parts.back().begin(), parts.back().end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw InvalidInput("partition parts overlap");
  if (all != g.all_edges()) throw InvalidInput("partition does not cover every edge");

  SymmetricCover out;
  out.parts = parts;
  out.covering_vertices = grp.order() * g.vertex_count();
  const auto elems = grp.elements();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto frame = detail::build_forest(grp, g.vertex_count(), detail::arcs_of(g, parts[i]));
    Subgroup gamma_i(grp);
    for (const auto& [root, h] : frame.group_at_root)
      for (const auto& x : h.generated_by()) gamma_i.adjoin(x);
    const auto vs = vertices_of(g, parts[i]);
    const auto members = gamma_i.elements();
    std::vector<char> taken(grp.order(), 0);
    for (const auto& d : elems) {
      if (taken[grp.index(d)]) continue;
      for (const auto& x : members) taken[grp.index(grp.multiply(d, x))] = 1;
      CoverSet set{{}, i, gamma_i.conjugated(d), d};
      for (VertexId v : vs)
        for (const auto& x : members)
          set.vertices.push_back(
              lift_index(grp, g.vertex_count(), grp.multiply(grp.multiply(d, x), *frame.potential[v]), v));
      std::sort(set.vertices.begin(), set.vertices.end());
      out.sets.push_back(std::move(set));
    }
  }
  return out;
}

/// Every covering edge has both ends in some set of the cover.
inline bool covers_all_edges(const SymmetricCover& sc, const CoveringGraph& cov) {
  std::vector<std::vector<std::size_t>> member(cov.vertex_count());
  for (std::size_t i = 0; i < sc.sets.size(); ++i)
    for (std::size_t x : sc.sets[i].vertices) member[x].push_back(i);
  for (const auto& [a, b] : cov.graph().edges) {
    std::vector<std::size_t> common;
    std::set_intersection(member[a].begin(), member[a].end(), member[b].begin(), member[b].end(),
                          std::back_inserter(common));
    if (common.empty()) return false;
  }
  return true;
}

enum class CoverVariant { forced, iota1 };

struct CoverBound {
  CoverVariant variant = CoverVariant::forced;
  long lhs = 0;  // sum over X of 2|X| - 3
  long rhs = 0;
  bool holds = false;
  bool proper = true;              // no set is all of V~; the bound needs a vertex outside each set
  std::optional<bool> hypotheses;  // unset when not checked
  std::string note;
};

/// forced: sum(2|X| - 3) >= 2|V~| + sum over |X| >= 3, |Gamma_X| >= 4 of (|Gamma_X| - 3).
/// iota1:  sum(2|X| - 3) >= 2|V~| + #{X : Gamma_X nontrivial}.
/// With check_hypotheses the connectivity assumptions under which the
/// inequality is guaranteed are evaluated and reported alongside.
inline CoverBound check_cover_lower_bound(const GainGraph& g, const SymmetricCover& sc, CoverVariant variant,
                                          bool check_hypotheses = true) {
  CoverBound out;
  out.variant = variant;
  for (const auto& s : sc.sets) out.lhs += 2 * static_cast<long>(s.vertices.size()) - 3;
  out.rhs = 2 * static_cast<long>(sc.covering_vertices);
  for (std::size_t i = 0; i < sc.sets.size(); ++i) {
    if (variant == CoverVariant::forced && sc.in_x3(i) && sc.in_xu(i))
      out.rhs += static_cast<long>(sc.sets[i].group.order()) - 3;
    if (variant == CoverVariant::iota1 && sc.in_x2(i)) out.rhs += 1;
  }
  out.holds = out.lhs >= out.rhs;
  out.proper = std::none_of(sc.sets.begin(), sc.sets.end(),
                            [&](const CoverSet& s) { return s.vertices.size() == sc.covering_vertices; });
  if (!check_hypotheses) return out;
  if (variant == CoverVariant::forced) {
    const bool mixed = is_n_gain_mixed_connected(g, 6).connected;
    bool edges_ok = true;
    if (g.group().order() >= 6) {
      const auto ec = edge_connectivity(g);
      edges_ok = ec.unbounded || ec.value >= 2;
    }
    out.hypotheses = mixed && edges_ok && out.proper;
    if (!mixed) out.note = "not 6-gain-mixed-connected";
    else if (!edges_ok) out.note = "not 2-edge-connected";
    else if (!out.proper) out.note = "a cover set is the whole vertex set";
  } else {
    GainGraph loopless(g.group());
    for (const auto& name : g.vertex_names()) loopless.add_vertex(name);
    for (const auto& e : g.edges())
      if (!e.is_loop()) loopless.add_edge(e.tail, e.head, e.gain);
    const bool mixed = is_n_gain_mixed_connected(loopless, 7).connected;
    out.hypotheses = mixed && out.proper;
    if (!mixed) out.note = "loopless graph is not 7-gain-mixed-connected";
    else if (!out.proper) out.note = "a cover set is the whole vertex set";
  }
  return out;
}

}  // namespace symrig
