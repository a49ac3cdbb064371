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

// Quotient gain graphs: directed multigraphs whose edges carry group labels.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symrig/error.hpp"
#include "symrig/group.hpp"

namespace symrig {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Edge ids of a host graph. Kept sorted and duplicate free by the helpers below.
using EdgeSubset = std::vector<EdgeId>;

struct GainEdge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  GroupElement gain;

  bool is_loop() const { return tail == head; }
  bool touches(VertexId v) const { return tail == v || head == v; }
  VertexId other(VertexId v) const { return tail == v ? head : tail; }
};

class GainGraph {
 public:
  explicit GainGraph(GroupSpec group) : group_(group) {}

  const GroupSpec& group() const { return group_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<GainEdge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_names() const { return names_; }

  const GainEdge& edge(EdgeId id) const {
    if (id >= edges_.size()) throw InvalidInput("edge id " + std::to_string(id) + " out of range");
    return edges_[id];
  }

  const std::string& vertex_name(VertexId v) const {
    if (v >= names_.size()) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
    return names_[v];
  }

  std::optional<VertexId> find_vertex(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
  }

  VertexId add_vertex(std::string name) {
    if (find_vertex(name)) throw InvalidInput("duplicate vertex name '" + name + "'");
    names_.push_back(std::move(name));
    incident_.emplace_back();
    return names_.size() - 1;
  }

  /// Adds the edge tail -> head with the given gain and returns its id.
  /// Rejects identity loops and edges equivalent to an existing one, since
  /// either would make the covering graph non-simple.
  EdgeId add_edge(VertexId tail, VertexId head, GroupElement gain) {
    if (tail >= vertex_count() || head >= vertex_count())
      throw InvalidInput("edge endpoint out of range");
    if (!group_.contains(gain)) throw InvalidInput("edge gain is not an element of " + group_.name());
    if (tail == head && gain == kIdentity)
      throw InvalidInput("loop at '" + names_[tail] + "' has identity gain");
    const auto key = canonical_key(tail, head, gain);
    if (!keys_.insert(key).second)
      throw InvalidInput("edge " + names_[tail] + "->" + names_[head] + " with gain " +
                         group_.format(gain) + " duplicates an existing edge");
    const EdgeId id = edges_.size();
    edges_.push_back(GainEdge{id, tail, head, gain});
    incident_[tail].push_back(id);
    if (head != tail) incident_[head].push_back(id);
    return id;
  }

  /// Edge ids incident with v, loops included once.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    if (v >= vertex_count()) throw InvalidInput("vertex id out of range");
    return incident_[v];
  }

  EdgeSubset all_edges() const {
    EdgeSubset out(edges_.size());
    std::iota(out.begin(), out.end(), EdgeId{0});
    return out;
  }

 private:
  // (min endpoint, max endpoint, gain read from min to max); loops use the
  // smaller of gain and its inverse.
  std::tuple<VertexId, VertexId, std::size_t> canonical_key(VertexId t, VertexId h,
                                                            GroupElement g) const {
    if (t == h) {
      const std::size_t a = group_.index(g);
      const std::size_t b = group_.index(group_.inverse(g));
      return {t, h, std::min(a, b)};
    }
    if (t < h) return {t, h, group_.index(g)};
    return {h, t, group_.index(group_.inverse(g))};
  }

  GroupSpec group_;
  std::vector<std::string> names_;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::set<std::tuple<VertexId, VertexId, std::size_t>> keys_;
};

inline EdgeSubset normalized(EdgeSubset x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

inline void require_subset(const GainGraph& g, const EdgeSubset& x) {
  for (EdgeId e : x)
    if (e >= g.edge_count()) throw InvalidInput("edge id " + std::to_string(e) + " out of range");
}

/// V(X): endpoints of the edges in X, sorted.
inline std::vector<VertexId> vertices_of(const GainGraph& g, const EdgeSubset& x) {
  std::vector<VertexId> out;
  for (EdgeId e : x) {
    out.push_back(g.edge(e).tail);
    out.push_back(g.edge(e).head);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

/// Labelled arc list used by routines that work on modified copies of a graph
/// (splits, candidate subsets) without building a GainGraph.
struct Arc {
  VertexId tail;
  VertexId head;
  GroupElement gain;
};

/// Potentials h with h(root) = id and h(head) = h(tail) * gain along a
/// spanning forest; the subgroup of each tree is generated by the cycle gains
/// h(tail) * gain * h(head)^-1 of the remaining arcs.
struct ForestFrame {
  std::vector<std::optional<GroupElement>> potential;
  std::vector<VertexId> root_of;
  std::vector<VertexId> roots;
  std::map<VertexId, Subgroup> group_at_root;
};

inline ForestFrame build_forest(const GroupSpec& group, std::size_t vertex_count,
                                const std::vector<Arc>& arcs) {
  ForestFrame f;
  f.potential.assign(vertex_count, std::nullopt);
  f.root_of.assign(vertex_count, vertex_count);
  std::vector<std::vector<std::size_t>> inc(vertex_count);
  std::vector<char> used(vertex_count, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    inc[arcs[i].tail].push_back(i);
    if (arcs[i].head != arcs[i].tail) inc[arcs[i].head].push_back(i);
    used[arcs[i].tail] = used[arcs[i].head] = 1;
  }
  std::vector<char> tree(arcs.size(), 0);
  for (VertexId r = 0; r < vertex_count; ++r) {
    if (!used[r] || f.potential[r]) continue;
    f.roots.push_back(r);
    f.potential[r] = kIdentity;
    f.root_of[r] = r;
    std::vector<VertexId> stack{r};
    std::size_t head = 0;
    while (head < stack.size()) {
      const VertexId x = stack[head++];
      for (std::size_t ai : inc[x]) {
        const Arc& a = arcs[ai];
        if (a.tail == x && !f.potential[a.head]) {
          f.potential[a.head] = group.multiply(*f.potential[x], a.gain);
        } else if (a.head == x && !f.potential[a.tail]) {
          f.potential[a.tail] = group.multiply(*f.potential[x], group.inverse(a.gain));
        } else {
          continue;
        }
        tree[ai] = 1;
        const VertexId y = a.tail == x ? a.head : a.tail;
        f.root_of[y] = r;
        stack.push_back(y);
      }
    }
    f.group_at_root.emplace(r, Subgroup(group));
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (tree[i]) continue;
    const Arc& a = arcs[i];
    const GroupElement c = group.multiply(group.multiply(*f.potential[a.tail], a.gain),
                                          group.inverse(*f.potential[a.head]));
    f.group_at_root.at(f.root_of[a.tail]).adjoin(c);
  }
  return f;
}

inline bool all_balanced(const GroupSpec& group, std::size_t vertex_count,
                         const std::vector<Arc>& arcs) {
  std::vector<std::optional<GroupElement>> pot(vertex_count);
  std::vector<std::vector<std::size_t>> inc(vertex_count);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].tail == arcs[i].head) return false;  // loops never carry identity gain
    inc[arcs[i].tail].push_back(i);
    inc[arcs[i].head].push_back(i);
  }
  for (VertexId r = 0; r < vertex_count; ++r) {
    if (pot[r] || inc[r].empty()) continue;
    pot[r] = kIdentity;
    std::vector<VertexId> stack{r};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (std::size_t ai : inc[x]) {
        const Arc& a = arcs[ai];
        const bool forward = a.tail == x;
        const VertexId y = forward ? a.head : a.tail;
        const GroupElement want = forward ? group.multiply(*pot[x], a.gain)
                                          : group.multiply(*pot[x], group.inverse(a.gain));
        if (!pot[y]) {
          pot[y] = want;
          stack.push_back(y);
        } else if (*pot[y] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<Arc> arcs_of(const GainGraph& g, const EdgeSubset& x) {
  std::vector<Arc> out;
  out.reserve(x.size());
  for (EdgeId e : x) out.push_back(Arc{g.edge(e).tail, g.edge(e).head, g.edge(e).gain});
  return out;
}

}  // namespace detail

/// Connected components of X (by shared endpoints), ordered by smallest vertex.
inline std::vector<EdgeSubset> components(const GainGraph& g, const EdgeSubset& x) {
  detail::DisjointSets ds(g.vertex_count());
  for (EdgeId e : x) ds.unite(g.edge(e).tail, g.edge(e).head);
  std::map<std::size_t, EdgeSubset> by_root;
  for (EdgeId e : normalized(x)) by_root[ds.find(g.edge(e).tail)].push_back(e);
  std::vector<EdgeSubset> out;
  for (auto& [root, part] : by_root) out.push_back(std::move(part));
  return out;
}

inline bool is_connected(const GainGraph& g, const EdgeSubset& x) {
  return !x.empty() && components(g, x).size() == 1;
}

enum class Direction { forward, backward };

struct WalkStep {
  EdgeId edge;
  Direction direction = Direction::forward;
};

struct Walk {
  VertexId start = 0;
  std::vector<WalkStep> steps;
};

/// Product of the gains along the walk, inverted on backward steps.
inline GroupElement walk_gain(const GainGraph& g, const Walk& w) {
  if (w.start >= g.vertex_count()) throw InvalidInput("walk starts at unknown vertex");
  const GroupSpec& grp = g.group();
  VertexId at = w.start;
  GroupElement acc = kIdentity;
  for (const WalkStep& s : w.steps) {
    const GainEdge& e = g.edge(s.edge);
    if (s.direction == Direction::forward) {
      if (e.tail != at) throw InvalidInput("walk step on edge " + std::to_string(e.id) +
                                           " does not leave the current vertex");
      acc = grp.multiply(acc, e.gain);
      at = e.head;
    } else {
      if (e.head != at) throw InvalidInput("walk step on edge " + std::to_string(e.id) +
                                           " does not leave the current vertex");
      acc = grp.multiply(acc, grp.inverse(e.gain));
      at = e.tail;
    }
  }
  return acc;
}

/// <X>_{psi,base}: generated by the fundamental-cycle gains of a spanning tree
/// of the component of X containing base, switched so tree edges carry id.
inline Subgroup induced_subgroup(const GainGraph& g, const EdgeSubset& x, VertexId base) {
  require_subset(g, x);
  const auto vs = vertices_of(g, x);
  if (!std::binary_search(vs.begin(), vs.end(), base))
    throw InvalidInput("base vertex is not incident with the edge subset");
  std::vector<detail::Arc> arcs;
  for (const auto& comp : components(g, x)) {
    const auto cv = vertices_of(g, comp);
    if (std::binary_search(cv.begin(), cv.end(), base)) arcs = detail::arcs_of(g, comp);
  }
  // Re-root at base by relabelling vertex ids so that base comes first.
  std::vector<VertexId> relabel(g.vertex_count());
  std::iota(relabel.begin(), relabel.end(), VertexId{0});
  std::swap(relabel[0], relabel[base]);
  for (auto& a : arcs) {
    a.tail = relabel[a.tail];
    a.head = relabel[a.head];
  }
  const auto frame = detail::build_forest(g.group(), g.vertex_count(), arcs);
  return frame.group_at_root.at(0);
}

enum class BalanceKind { balanced, unbalanced_cyclic, other };

inline std::string_view to_string(BalanceKind k) {
  switch (k) {
    case BalanceKind::balanced: return "balanced";
    case BalanceKind::unbalanced_cyclic: return "unbalanced_cyclic";
    case BalanceKind::other: return "other";
  }
  return "?";
}

struct ComponentBalance {
  EdgeSubset edges;
  std::vector<VertexId> vertices;
  Subgroup group;
};

struct BalanceClass {
  BalanceKind kind = BalanceKind::balanced;
  std::vector<ComponentBalance> components;

  /// 0 / 2 / 3 for balanced / unbalanced cyclic / otherwise.
  int beta() const {
    switch (kind) {
      case BalanceKind::balanced: return 0;
      case BalanceKind::unbalanced_cyclic: return 2;
      case BalanceKind::other: return 3;
    }
    return 3;
  }
};

inline BalanceClass classify(const GainGraph& g, const EdgeSubset& x) {
  if (x.empty()) throw InvalidInput("cannot classify an empty edge set");
  require_subset(g, x);
  BalanceClass out;
  bool all_trivial = true;
  bool all_cyclic = true;
  for (auto& comp : components(g, x)) {
    auto vs = vertices_of(g, comp);
    const auto frame = detail::build_forest(g.group(), g.vertex_count(), detail::arcs_of(g, comp));
    const Subgroup& h = frame.group_at_root.begin()->second;
    all_trivial = all_trivial && h.order() == 1;
    all_cyclic = all_cyclic && h.is_cyclic();
    out.components.push_back(ComponentBalance{std::move(comp), std::move(vs), h});
  }
  out.kind = all_trivial  ? BalanceKind::balanced
             : all_cyclic ? BalanceKind::unbalanced_cyclic
                          : BalanceKind::other;
  return out;
}

inline bool is_balanced(const GainGraph& g, const EdgeSubset& x) {
  require_subset(g, x);
  return detail::all_balanced(g.group(), g.vertex_count(), detail::arcs_of(g, x));
}

/// Relabels every edge (i, j, a) to h(i) * a * h(j)^-1. Edge ids are preserved.
inline GainGraph switch_labels(const GainGraph& g, const std::vector<GroupElement>& h) {
  if (h.size() != g.vertex_count()) throw InvalidInput("switching map must cover every vertex");
  const GroupSpec& grp = g.group();
  GainGraph out(grp);
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  for (const auto& e : g.edges())
    out.add_edge(e.tail, e.head,
                 grp.multiply(grp.multiply(h[e.tail], e.gain), grp.inverse(h[e.head])));
  return out;
}

/// Switching that makes a spanning forest of the whole edge set carry identity gains.
inline std::vector<GroupElement> spanning_tree_switch(const GainGraph& g) {
  const auto frame = detail::build_forest(g.group(), g.vertex_count(), detail::arcs_of(g, g.all_edges()));
  std::vector<GroupElement> h(g.vertex_count(), kIdentity);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (frame.potential[v]) h[v] = *frame.potential[v];
  return h;
}

/// Whether b = switch_labels(a, h) for some h, matching edges by id. b may
/// store an edge reversed with the inverse label. On each component the root
/// value determines h, so every root value is tried.
inline bool is_switching_of(const GainGraph& a, const GainGraph& b) {
  if (a.group() != b.group() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  const GroupSpec& grp = a.group();
  std::vector<GroupElement> target(a.edge_count());
  for (const auto& e : a.edges()) {
    const GainEdge& f = b.edge(e.id);
    if (f.tail == e.tail && f.head == e.head) {
      target[e.id] = f.gain;
    } else if (f.tail == e.head && f.head == e.tail) {
      target[e.id] = grp.inverse(f.gain);
    } else {
      return false;
    }
  }
  auto matches = [&](const GainEdge& e, const std::vector<GroupElement>& h) {
    const GroupElement x = grp.multiply(grp.multiply(h[e.tail], e.gain), grp.inverse(h[e.head]));
    return x == target[e.id] || (e.is_loop() && x == grp.inverse(target[e.id]));
  };
  std::vector<char> seen(a.vertex_count(), 0);
  std::vector<GroupElement> h(a.vertex_count(), kIdentity);
  for (VertexId root = 0; root < a.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<VertexId> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (EdgeId e : a.incident_edges(comp[i])) {
        const VertexId w = a.edge(e).other(comp[i]);
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    bool found = false;
    for (const auto& start : grp.elements()) {
      std::vector<char> set(a.vertex_count(), 0);
      h[root] = start;
      set[root] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const VertexId v = comp[i];
        for (EdgeId id : a.incident_edges(v)) {
          const GainEdge& e = a.edge(id);
          const VertexId w = e.other(v);
          if (set[w]) continue;
          h[w] = e.tail == v ? grp.multiply(grp.multiply(grp.inverse(target[id]), h[v]), e.gain)
                             : grp.multiply(grp.multiply(target[id], h[v]), grp.inverse(e.gain));
          set[w] = 1;
        }
      }
      bool ok = true;
      for (VertexId v : comp)
        for (EdgeId id : a.incident_edges(v)) ok = ok && matches(a.edge(id), h);
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Same graph with one edge stored in the opposite direction and inverted label.
inline GainGraph reversed_edge(const GainGraph& g, EdgeId which) {
  GainGraph out(g.group());
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  for (const auto& e : g.edges()) {
    if (e.id == which)
      out.add_edge(e.head, e.tail, g.group().inverse(e.gain));
    else
      out.add_edge(e.tail, e.head, e.gain);
  }
  return out;
}

struct SplitPartition {
  EdgeSubset first;
  EdgeSubset second;
};

/// Splits v into v_1 (keeping v's id) and v_2 (appended). Non-loop edges at v
/// are re-attached according to `part` and oriented away from v; each loop at
/// v becomes an arc v_1 -> v_2 with the same label.
inline GainGraph split(const GainGraph& g, VertexId v, const SplitPartition& part) {
  if (v >= g.vertex_count()) throw InvalidInput("split vertex out of range");
  EdgeSubset expected;
  for (EdgeId e : g.incident_edges(v))
    if (!g.edge(e).is_loop()) expected.push_back(e);
  expected = normalized(expected);
  EdgeSubset given = part.first;
  given.insert(given.end(), part.second.begin(), part.second.end());
  std::sort(given.begin(), given.end());
  if (given != expected)
    throw InvalidInput("split parts must partition the non-loop edges at the split vertex");
  const std::set<EdgeId> second(part.second.begin(), part.second.end());

  const GroupSpec& grp = g.group();
  GainGraph out(grp);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    out.add_vertex(u == v ? g.vertex_name(u) + "_1" : g.vertex_name(u));
  const VertexId v2 = out.add_vertex(g.vertex_name(v) + "_2");
  for (const auto& e : g.edges()) {
    if (e.is_loop() && e.tail == v) {
      out.add_edge(v, v2, e.gain);
    } else if (e.touches(v)) {
      const VertexId copy = second.count(e.id) ? v2 : v;
      if (e.tail == v)
        out.add_edge(copy, e.head, e.gain);
      else
        out.add_edge(copy, e.tail, grp.inverse(e.gain));
    } else {
      out.add_edge(e.tail, e.head, e.gain);
    }
  }
  return out;
}

struct SplitWitness {
  VertexId vertex;
  SplitPartition partition;
};

struct NearBalance {
  bool near_balanced = false;
  std::optional<SplitWitness> witness;
};

/// Searches every vertex of F and every assignment of its non-loop F-edges to
/// the two copies. Assignments are ordered, which also covers the two ways of
/// reading a loop as an arc. Exponential in the degree (capped at 20).
inline NearBalance is_near_balanced(const GainGraph& g, const EdgeSubset& f_in) {
  const EdgeSubset f = normalized(f_in);
  require_subset(g, f);
  if (f.empty()) throw InvalidInput("near-balance needs a nonempty edge set");
  if (!is_connected(g, f)) throw InvalidInput("near-balance is only defined for connected edge sets");
  if (is_balanced(g, f)) return {};
  const std::size_t n = g.vertex_count();
  for (VertexId v : vertices_of(g, f)) {
    std::vector<EdgeId> at_v;
    for (EdgeId e : f)
      if (!g.edge(e).is_loop() && g.edge(e).touches(v)) at_v.push_back(e);
    if (at_v.size() > 20) throw TooLarge("near-balance search: vertex degree above 20");
    const std::uint64_t masks = std::uint64_t{1} << at_v.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<detail::Arc> arcs;
      arcs.reserve(f.size());
      std::size_t slot = 0;
      for (EdgeId e : f) {
        const GainEdge& ge = g.edge(e);
        if (ge.is_loop() && ge.tail == v) {
          arcs.push_back({v, n, ge.gain});
        } else if (!ge.is_loop() && ge.touches(v)) {
          const VertexId copy = (mask >> slot++) & 1U ? n : v;
          if (ge.tail == v)
            arcs.push_back({copy, ge.head, ge.gain});
          else
            arcs.push_back({ge.tail, copy, ge.gain});
        } else {
          arcs.push_back({ge.tail, ge.head, ge.gain});
        }
      }
      if (detail::all_balanced(g.group(), n + 1, arcs)) {
        SplitWitness w{v, {}};
        for (std::size_t i = 0; i < at_v.size(); ++i)
          ((mask >> i) & 1U ? w.partition.second : w.partition.first).push_back(at_v[i]);
        return NearBalance{true, std::move(w)};
      }
    }
  }
  return {};
}

}  // namespace symrig
