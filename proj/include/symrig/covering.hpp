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

// Covering graphs of quotient gain graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"

namespace symrig {

/// Undirected simple graph on vertices 0..n-1; edges stored with first < second.
struct SimpleGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;  // neighbour lists
  std::vector<std::vector<std::size_t>> incident;   // edge indices per vertex

  SimpleGraph() = default;
  SimpleGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> e)
      : vertex_count(n), edges(std::move(e)), adjacency(n), incident(n) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto& [a, b] = edges[i];
      if (a >= n || b >= n) throw InvalidInput("edge endpoint out of range");
      if (a == b) throw InvalidInput("simple graph cannot contain a loop");
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) throw InvalidInput("simple graph cannot contain parallel edges");
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
      incident[a].push_back(i);
      incident[b].push_back(i);
    }
  }

  std::size_t edge_count() const { return edges.size(); }

  std::size_t component_count() const {
    detail::DisjointSets ds(vertex_count);
    std::size_t comps = vertex_count;
    for (const auto& [a, b] : edges)
      if (ds.unite(a, b)) --comps;
    return comps;
  }
};

/// Graph on Gamma x V with the left action gamma . (delta, v) = (gamma delta, v).
/// Hand-built coverings supply their own action table and orbit structure.
class CoveringGraph {
 public:
  /// action[g][x] is the image of vertex x under group element index g.
  CoveringGraph(GroupSpec group, SimpleGraph graph, std::vector<std::vector<std::size_t>> action,
                std::vector<std::string> vertex_names, std::vector<VertexId> covering_map,
                std::vector<std::string> quotient_names, std::vector<EdgeId> edge_origin)
      : group_(group),
        graph_(std::move(graph)),
        action_(std::move(action)),
        names_(std::move(vertex_names)),
        cover_(std::move(covering_map)),
        quotient_names_(std::move(quotient_names)),
        origin_(std::move(edge_origin)) {
    const std::size_t n = graph_.vertex_count;
    if (action_.size() != group_.order()) throw InvalidInput("action table must have one row per group element");
    if (names_.size() != n || cover_.size() != n) throw InvalidInput("vertex tables disagree in size");
    if (origin_.size() != graph_.edge_count()) throw InvalidInput("edge origin table disagrees in size");
    for (const auto& row : action_) {
      if (row.size() != n) throw InvalidInput("action row has wrong length");
      std::vector<char> hit(n, 0);
      for (std::size_t y : row) {
        if (y >= n || hit[y]) throw InvalidInput("group element does not act as a permutation");
        hit[y] = 1;
      }
    }
    for (std::size_t g = 0; g < group_.order(); ++g)
      for (std::size_t h = 0; h < group_.order(); ++h) {
        const std::size_t gh = group_.index(group_.multiply(group_.element(g), group_.element(h)));
        for (std::size_t x = 0; x < n; ++x)
          if (action_[g][action_[h][x]] != action_[gh][x]) throw InvalidInput("action is not a group action");
      }
    const std::size_t id = group_.index(kIdentity);
    for (std::size_t g = 0; g < group_.order(); ++g) {
      if (g == id) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (action_[g][x] == x) throw InvalidInput("action is not free on vertices");
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t g = 0; g < group_.order(); ++g)
        if (cover_[action_[g][x]] != cover_[x]) throw InvalidInput("covering map is not invariant under the action");
    for (const auto& [a, b] : graph_.edges)
      for (std::size_t g = 0; g < group_.order(); ++g)
        if (!has_edge(action_[g][a], action_[g][b])) throw InvalidInput("edge set is not invariant under the action");
  }

  const GroupSpec& group() const { return group_; }
  const SimpleGraph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count; }
  std::size_t edge_count() const { return graph_.edge_count(); }
  std::size_t quotient_vertex_count() const { return quotient_names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<std::string>& quotient_names() const { return quotient_names_; }

  std::size_t act(const GroupElement& g, std::size_t x) const { return action_[group_.index(g)][x]; }
  VertexId covering_map(std::size_t x) const { return cover_.at(x); }
  /// Quotient edge whose orbit contains the covering edge (or the position in
  /// the hand-built edge list when no quotient is known).
  EdgeId edge_origin(std::size_t e) const { return origin_.at(e); }
  const std::vector<std::vector<std::size_t>>& action_table() const { return action_; }

  bool has_edge(std::size_t a, std::size_t b) const {
    const auto& adj = graph_.adjacency[a];
    return std::find(adj.begin(), adj.end(), b) != adj.end();
  }

  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const {
    for (std::size_t e : graph_.incident[a]) {
      const auto& [x, y] = graph_.edges[e];
      if ((x == a && y == b) || (x == b && y == a)) return e;
    }
    return std::nullopt;
  }

 private:
  GroupSpec group_;
  SimpleGraph graph_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::string> names_;
  std::vector<VertexId> cover_;
  std::vector<std::string> quotient_names_;
  std::vector<EdgeId> origin_;
};

/// Index of the covering vertex (gamma, v) produced by expand().
inline std::size_t lift_index(const GroupSpec& group, std::size_t quotient_vertices,
                              const GroupElement& gamma, VertexId v) {
  return group.index(gamma) * quotient_vertices + v;
}

/// Covering graph: vertices Gamma x V, edges {(g, i), (g a, j)} for every
/// quotient edge (i, j, a) and every g.
inline CoveringGraph expand(const GainGraph& g) {
  const GroupSpec& grp = g.group();
  const std::size_t n = g.vertex_count();
  const std::size_t total = grp.order() * n;
  const auto elems = grp.elements();

  std::vector<std::string> names(total);
  std::vector<VertexId> cover(total);
  for (const auto& gamma : elems)
    for (VertexId v = 0; v < n; ++v) {
      names[lift_index(grp, n, gamma, v)] = grp.format(gamma) + ":" + g.vertex_name(v);
      cover[lift_index(grp, n, gamma, v)] = v;
    }

  std::vector<std::vector<std::size_t>> action(grp.order(), std::vector<std::size_t>(total));
  for (const auto& a : elems)
    for (const auto& gamma : elems)
      for (VertexId v = 0; v < n; ++v)
        action[grp.index(a)][lift_index(grp, n, gamma, v)] = lift_index(grp, n, grp.multiply(a, gamma), v);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<EdgeId> origin;
  std::map<std::pair<std::size_t, std::size_t>, EdgeId> seen;
  for (const auto& e : g.edges()) {
    for (const auto& gamma : elems) {
      std::size_t a = lift_index(grp, n, gamma, e.tail);
      std::size_t b = lift_index(grp, n, grp.multiply(gamma, e.gain), e.head);
      if (a == b) throw InvalidInput("edge " + std::to_string(e.id) + " lifts to a loop");
      if (a > b) std::swap(a, b);
      const auto [it, fresh] = seen.emplace(std::make_pair(a, b), e.id);
      if (!fresh) {
        if (it->second != e.id)
          throw InvalidInput("edges " + std::to_string(it->second) + " and " + std::to_string(e.id) +
                             " lift to the same covering edge");
        continue;
      }
      edges.emplace_back(a, b);
      origin.push_back(e.id);
    }
  }
  std::vector<std::string> qnames = g.vertex_names();
  return CoveringGraph(grp, SimpleGraph(total, std::move(edges)), std::move(action), std::move(names),
                       std::move(cover), std::move(qnames), std::move(origin));
}

/// Number of covering edges over quotient edge e: |Gamma|, halved for loops
/// whose gain has order 2.
inline std::size_t orbit_size(const GainGraph& g, EdgeId e) {
  const GainEdge& ge = g.edge(e);
  const std::size_t full = g.group().order();
  return ge.is_loop() && g.group().order_of(ge.gain) == 2 ? full / 2 : full;
}

/// Recovers a gain graph from a covering graph. The lowest-indexed vertex of
/// each orbit is its representative; quotient vertices are ordered by their
/// representatives, and the result is switched so that a spanning forest
/// carries identity gains.
inline GainGraph quotient_of(const CoveringGraph& cov) {
  const GroupSpec& grp = cov.group();
  const std::size_t n = cov.vertex_count();
  const auto elems = grp.elements();
  std::vector<std::size_t> orbit(n, n);
  std::vector<GroupElement> offset(n);  // x = offset[x] . rep(orbit[x])
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (orbit[x] != n) continue;
    const std::size_t id = reps.size();
    reps.push_back(x);
    for (const auto& gamma : elems) {
      const std::size_t y = cov.act(gamma, x);
      if (orbit[y] != n) throw InvalidInput("action is not free on vertices");
      orbit[y] = id;
      offset[y] = gamma;
    }
  }
  GainGraph q(grp);
  for (std::size_t r : reps) q.add_vertex(cov.quotient_names().at(cov.covering_map(r)));

  std::vector<char> covered(cov.edge_count(), 0);
  for (std::size_t e = 0; e < cov.edge_count(); ++e) {
    if (covered[e]) continue;
    const auto [x, y] = cov.graph().edges[e];
    const GroupElement gain = grp.multiply(grp.inverse(offset[x]), offset[y]);
    q.add_edge(orbit[x], orbit[y], gain);
    for (const auto& gamma : elems) {
      const auto image = cov.edge_index(cov.act(gamma, x), cov.act(gamma, y));
      if (!image) throw InvalidInput("edge set is not invariant under the action");
      covered[*image] = 1;
    }
  }
  return switch_labels(q, spanning_tree_switch(q));
}

struct FixedEdgeReport {
  std::vector<std::size_t> fixed_edges;     // covering edge indices
  EdgeSubset quotient_loops_of_order_2;     // quotient edge ids
};

struct StrippedGraphs {
  CoveringGraph covering;    // covering graph without its fixed edges
  GainGraph quotient;        // gain graph without its loops
  EdgeSubset kept_edges;     // quotient edge id of each surviving edge, in order
  FixedEdgeReport report;
};

/// Covering edges {x, y} with gamma x = y and gamma y = x for some gamma != id.
inline FixedEdgeReport fixed_edges(const CoveringGraph& cov, const GainGraph& g) {
  FixedEdgeReport out;
  const auto id = kIdentity;
  for (std::size_t e = 0; e < cov.edge_count(); ++e) {
    const auto [x, y] = cov.graph().edges[e];
    for (const auto& gamma : cov.group().elements()) {
      if (gamma == id) continue;
      if (cov.act(gamma, x) == y && cov.act(gamma, y) == x) {
        out.fixed_edges.push_back(e);
        break;
      }
    }
  }
  for (const auto& e : g.edges())
    if (e.is_loop() && g.group().order_of(e.gain) == 2) out.quotient_loops_of_order_2.push_back(e.id);
  return out;
}

inline StrippedGraphs strip_fixed(const CoveringGraph& cov, const GainGraph& g) {
  FixedEdgeReport report = fixed_edges(cov, g);
  std::vector<char> drop(cov.edge_count(), 0);
  for (std::size_t e : report.fixed_edges) drop[e] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<EdgeId> origin;
  for (std::size_t e = 0; e < cov.edge_count(); ++e) {
    if (drop[e]) continue;
    edges.push_back(cov.graph().edges[e]);
    origin.push_back(cov.edge_origin(e));
  }
  std::vector<VertexId> cover(cov.vertex_count());
  for (std::size_t x = 0; x < cov.vertex_count(); ++x) cover[x] = cov.covering_map(x);
  CoveringGraph stripped(cov.group(), SimpleGraph(cov.vertex_count(), std::move(edges)), cov.action_table(),
                         cov.vertex_names(), std::move(cover), cov.quotient_names(), std::move(origin));

  GainGraph q(g.group());
  for (const auto& name : g.vertex_names()) q.add_vertex(name);
  EdgeSubset kept;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    q.add_edge(e.tail, e.head, e.gain);
    kept.push_back(e.id);
  }
  return StrippedGraphs{std::move(stripped), std::move(q), std::move(kept), std::move(report)};
}

/// Graphviz rendering; edge labels are the originating quotient edge ids.
inline std::string to_dot(const CoveringGraph& cov) {
  std::ostringstream os;
  os << "graph covering {\n";
  for (std::size_t x = 0; x < cov.vertex_count(); ++x)
    os << "  " << x << " [label=\"" << cov.vertex_names()[x] << "\"];\n";
  for (std::size_t e = 0; e < cov.edge_count(); ++e) {
    const auto [a, b] = cov.graph().edges[e];
    os << "  " << a << " -- " << b << " [label=\"" << cov.edge_origin(e) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace symrig
