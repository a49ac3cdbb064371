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

// Mixed connectivity of covering graphs and gain-mixed connectivity of
// quotient gain graphs.
//
// A mixed cut (W, F) of a simple graph costs 2|W| + |F|. The cheapest cut is
// found by enumerating W in order of size and solving a minimum edge cut of
// G - W with unit-capacity flows, capped at the best cost seen so far.
//
// Blocks of a gain graph are searched by branching from a seed vertex that is
// the smallest vertex of the block. Each step takes the lowest undecided edge
// leaving the block and either grows the block along it, deletes the far
// vertex, separates the far vertex, or deletes the edge. Partial costs times
// the order of the current subgroup bound the final cost from below.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "symrig/covering.hpp"
#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"

namespace symrig {

namespace detail {

/// Unit-capacity max-flow on an undirected multigraph, restricted to live vertices.
class UnitFlow {
 public:
  UnitFlow(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : edges_(edges), incident_(n), flow_(edges.size(), 0), parent_(n), reach_(n, 0) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident_[edges[i].first].push_back(i);
      if (edges[i].first != edges[i].second) incident_[edges[i].second].push_back(i);
    }
  }

  /// Flow value from s to t, stopping once it reaches `cap`. After the call
  /// reached() marks the residual source side.
  std::size_t run(std::size_t s, std::size_t t, std::size_t cap, const std::vector<char>& alive) {
    std::fill(flow_.begin(), flow_.end(), 0);
    std::size_t value = 0;
    while (value < cap && augment(s, t, alive)) ++value;
    return value;
  }

  bool reached(std::size_t v) const { return reach_[v] != 0; }

 private:
  bool augment(std::size_t s, std::size_t t, const std::vector<char>& alive) {
    std::fill(reach_.begin(), reach_.end(), 0);
    reach_[s] = 1;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      for (std::size_t e : incident_[x]) {
        const auto [a, b] = edges_[e];
        if (a == b) continue;
        const bool forward = a == x;
        const std::size_t y = forward ? b : a;
        if (!alive[y] || reach_[y]) continue;
        if (forward ? flow_[e] >= 1 : flow_[e] <= -1) continue;
        reach_[y] = 1;
        parent_[y] = e;
        queue.push_back(y);
      }
    }
    if (!reach_[t]) return false;
    for (std::size_t y = t; y != s;) {
      const std::size_t e = parent_[y];
      const auto [a, b] = edges_[e];
      if (b == y) {
        ++flow_[e];
        y = a;
      } else {
        --flow_[e];
        y = b;
      }
    }
    return true;
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> flow_;
  std::vector<std::size_t> parent_;
  std::vector<char> reach_;
};

/// Cheapest edge cut of the live part with fewer than `cap` edges, if any.
/// The source is the smallest live vertex; targets are tried in increasing order.
inline std::optional<std::vector<std::size_t>> min_edge_cut_below(
    UnitFlow& flow, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::vector<char>& alive, std::size_t cap) {
  std::size_t s = n;
  std::size_t live = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) {
      if (s == n) s = v;
      ++live;
    }
  if (live <= 1 || cap == 0) return std::nullopt;
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t t = s + 1; t < n && cap > 0; ++t) {
    if (!alive[t]) continue;
    const std::size_t f = flow.run(s, t, cap, alive);
    if (f >= cap) continue;
    std::vector<std::size_t> cut;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e];
      if (alive[a] && alive[b] && flow.reached(a) != flow.reached(b)) cut.push_back(e);
    }
    best = std::move(cut);
    cap = f;
  }
  return best;
}

/// Calls f on every r-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    f(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace detail

struct MixedCut {
  std::vector<std::size_t> vertices;  // W
  std::vector<std::size_t> edges;     // F, as edge indices of the graph
  std::size_t cost = 0;               // 2|W| + |F|
};

/// Cheapest mixed cut of cost strictly below `bound`, or nullopt. Ties are
/// resolved by the first cut met with |W| increasing and W lexicographic.
inline std::optional<MixedCut> cheapest_mixed_cut(const SimpleGraph& g, std::size_t bound) {
  const std::size_t n = g.vertex_count;
  detail::UnitFlow flow(n, g.edges);
  std::optional<MixedCut> best;
  std::vector<char> alive(n, 1);
  for (std::size_t w = 0; 2 * w < bound && w + 2 <= n; ++w) {
    detail::for_each_combination(n, w, [&](const std::vector<std::size_t>& pick) {
      if (2 * w >= bound) return;
      for (std::size_t v : pick) alive[v] = 0;
      auto cut = detail::min_edge_cut_below(flow, n, g.edges, alive, bound - 2 * w);
      for (std::size_t v : pick) alive[v] = 1;
      if (!cut) return;
      const std::size_t cost = 2 * w + cut->size();
      best = MixedCut{pick, std::move(*cut), cost};
      bound = cost;
    });
  }
  return best;
}

struct MixedConnectivity {
  bool connected = true;
  std::optional<MixedCut> witness;  // a cheapest cut when not connected
};

/// G - W - F stays connected for every W, F with 2|W| + |F| <= n - 1. Graphs
/// left with at most one vertex count as connected.
inline MixedConnectivity is_n_mixed_connected(const SimpleGraph& g, int n) {
  if (n < 1) throw InvalidInput("mixed connectivity needs n >= 1");
  auto cut = cheapest_mixed_cut(g, static_cast<std::size_t>(n));
  if (!cut) return {};
  return MixedConnectivity{false, std::move(cut)};
}

inline MixedConnectivity is_n_mixed_connected(const CoveringGraph& cov, int n) {
  return is_n_mixed_connected(cov.graph(), n);
}

struct EdgeConnectivity {
  std::size_t value = 0;
  bool unbounded = false;  // fewer than two vertices
};

/// Edge connectivity of the underlying loopless multigraph.
inline EdgeConnectivity edge_connectivity(const GainGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return EdgeConnectivity{0, true};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges())
    if (!e.is_loop()) edges.emplace_back(e.tail, e.head);
  detail::UnitFlow flow(n, edges);
  const std::vector<char> alive(n, 1);
  std::size_t best = edges.size() + 1;
  for (std::size_t t = 1; t < n && best > 0; ++t) best = std::min(best, flow.run(0, t, best, alive));
  return EdgeConnectivity{best, false};
}

/// A connected subgraph H = (V', E') of a gain graph.
struct Subgraph {
  std::vector<VertexId> vertices;
  EdgeSubset edges;
};

/// Potentials of H rooted at its smallest vertex and the subgroup <E'>.
struct SubgraphFrame {
  VertexId root = 0;
  std::vector<std::optional<GroupElement>> potential;
  Subgroup group;
};

inline SubgraphFrame frame_of(const GainGraph& g, const Subgraph& h_in) {
  Subgraph h{h_in.vertices, normalized(h_in.edges)};
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  if (h.vertices.empty()) throw InvalidInput("subgraph has no vertices");
  require_subset(g, h.edges);
  for (VertexId v : h.vertices)
    if (v >= g.vertex_count()) throw InvalidInput("subgraph vertex out of range");
  for (EdgeId e : h.edges)
    for (VertexId v : {g.edge(e).tail, g.edge(e).head})
      if (!std::binary_search(h.vertices.begin(), h.vertices.end(), v))
        throw InvalidInput("subgraph edge leaves the subgraph's vertex set");
  auto frame = detail::build_forest(g.group(), g.vertex_count(), detail::arcs_of(g, h.edges));
  SubgraphFrame out{h.vertices.front(), std::vector<std::optional<GroupElement>>(g.vertex_count()),
                    Subgroup(g.group())};
  if (h.edges.empty()) {
    if (h.vertices.size() != 1) throw InvalidInput("subgraph is not connected");
    out.potential[out.root] = kIdentity;
    return out;
  }
  for (VertexId v : h.vertices)
    if (!frame.potential[v] || frame.root_of[v] != out.root) throw InvalidInput("subgraph is not connected");
  out.potential = std::move(frame.potential);
  out.group = frame.group_at_root.at(out.root);
  return out;
}

/// Covering vertices of the lifted component <E'> H through (id, root).
inline std::vector<std::size_t> lifted_component(const GainGraph& g, const Subgraph& h) {
  const auto frame = frame_of(g, h);
  const GroupSpec& grp = g.group();
  std::vector<std::size_t> out;
  for (VertexId v : h.vertices)
    for (const auto& gamma : frame.group.elements())
      out.push_back(lift_index(grp, g.vertex_count(), grp.multiply(gamma, *frame.potential[v]), v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct VertexTrace {
  Subgroup group;                    // <E'_v>
  GroupElement potential;            // h(v) read along the lowest v-H edge
  std::vector<std::size_t> lifts;    // v_H as covering vertex indices
};

/// v_H = <E'_v> v, where E'_v adds every edge between v and H to E'.
inline VertexTrace vertex_trace(const GainGraph& g, const Subgraph& h, VertexId v) {
  const auto frame = frame_of(g, h);
  const GroupSpec& grp = g.group();
  if (v >= g.vertex_count()) throw InvalidInput("vertex out of range");
  std::vector<VertexId> hv = h.vertices;
  std::sort(hv.begin(), hv.end());
  if (std::binary_search(hv.begin(), hv.end(), v)) throw InvalidInput("vertex lies in the subgraph");
  VertexTrace out{frame.group, kIdentity, {}};
  bool found = false;
  for (EdgeId e : g.incident_edges(v)) {
    const GainEdge& ge = g.edge(e);
    if (ge.is_loop()) continue;
    const VertexId a = ge.other(v);
    if (!std::binary_search(hv.begin(), hv.end(), a)) continue;
    // h(a) * gain read from a to v.
    const GroupElement step = ge.tail == a ? ge.gain : grp.inverse(ge.gain);
    const GroupElement reach = grp.multiply(*frame.potential[a], step);
    if (!found) {
      out.potential = reach;
      found = true;
    } else {
      out.group.adjoin(grp.multiply(reach, grp.inverse(out.potential)));
    }
  }
  if (!found) throw InvalidInput("vertex is not adjacent to the subgraph");
  for (const auto& gamma : out.group.elements())
    out.lifts.push_back(lift_index(grp, g.vertex_count(), grp.multiply(gamma, out.potential), v));
  std::sort(out.lifts.begin(), out.lifts.end());
  return out;
}

enum class TraceCase { loop, bridging, chord };

struct EdgeTrace {
  TraceCase kind = TraceCase::bridging;
  std::size_t size = 0;  // |e_H|
};

/// |e_H| for an edge outside E' that meets H: |<E'>| for bridging edges and
/// loops of order 2, 2|<E'>| for chords and longer loops. Chords and loops
/// must enlarge the subgroup.
inline EdgeTrace edge_trace(const GainGraph& g, const Subgraph& h, EdgeId e) {
  const auto frame = frame_of(g, h);
  const GroupSpec& grp = g.group();
  const GainEdge& ge = g.edge(e);
  if (std::find(h.edges.begin(), h.edges.end(), e) != h.edges.end())
    throw InvalidInput("edge belongs to the subgraph");
  std::vector<VertexId> hv = h.vertices;
  std::sort(hv.begin(), hv.end());
  const bool tail_in = std::binary_search(hv.begin(), hv.end(), ge.tail);
  const bool head_in = std::binary_search(hv.begin(), hv.end(), ge.head);
  const std::size_t order = frame.group.order();
  if (!tail_in && !head_in) throw InvalidInput("edge does not meet the subgraph");
  if (tail_in != head_in) return EdgeTrace{TraceCase::bridging, order};
  const GroupElement cycle = grp.multiply(grp.multiply(*frame.potential[ge.tail], ge.gain),
                                          grp.inverse(*frame.potential[ge.head]));
  if (frame.group.contains(cycle))
    throw InvalidInput("edge closes a cycle whose gain is already in <E'>");
  if (ge.is_loop())
    return EdgeTrace{TraceCase::loop, grp.order_of(ge.gain) == 2 ? order : 2 * order};
  return EdgeTrace{TraceCase::chord, 2 * order};
}

struct KBlock {
  Subgraph h;
  std::vector<VertexId> removed_vertices;  // U
  EdgeSubset removed_edges;                // D
  std::size_t k = 0;
  std::vector<std::size_t> vertex_trace_sizes;  // aligned with U
  std::vector<std::size_t> edge_trace_sizes;    // aligned with D
  std::size_t group_order = 1;                  // |<E'>|
};

namespace detail {

inline bool block_before(const KBlock& a, const KBlock& b) {
  const auto head = [](const KBlock& x) {
    return std::make_tuple(x.k, x.removed_vertices.size(), x.removed_edges.size());
  };
  if (head(a) != head(b)) return head(a) < head(b);
  return std::tie(a.removed_vertices, a.removed_edges, a.h.vertices) <
         std::tie(b.removed_vertices, b.removed_edges, b.h.vertices);
}

class BlockSearch {
 public:
  enum Mode { minimum, collect };

  BlockSearch(const GainGraph& g, std::size_t k_max, Mode mode)
      : g_(g), grp_(g.group()), mode_(mode), bound_(k_max), n_(g.vertex_count()), m_(g.edge_count()),
        vstate_(n_, kUndecided), estate_(m_, kOpen), pot_(n_), group_(grp_) {}

  void run() {
    for (VertexId s = 0; s < n_; ++s) {
      seed_ = s;
      vstate_[s] = kInside;
      pot_[s] = kIdentity;
      inside_ = 1;
      recurse();
      vstate_[s] = kUndecided;
    }
  }

  std::vector<KBlock> results;

 private:
  enum : std::uint8_t { kUndecided, kInside, kDeleted, kOutside, kMustJoin };
  enum : std::uint8_t { kOpen, kKept, kCut, kGone };

  std::size_t lower_bound() const { return units_ * group_.order(); }

  void recurse() {
    if (lower_bound() > bound_) return;
    for (EdgeId e = 0; e < m_; ++e) {
      if (estate_[e] != kOpen) continue;
      const GainEdge& ge = g_.edge(e);
      const bool tin = vstate_[ge.tail] == kInside;
      const bool hin = vstate_[ge.head] == kInside;
      if (!tin && !hin) continue;
      if (tin && hin) {
        branch_internal(e);
        return;
      }
      const VertexId b = tin ? ge.head : ge.tail;
      switch (vstate_[b]) {
        case kDeleted:
          estate_[e] = kGone;
          recurse();
          estate_[e] = kOpen;
          return;
        case kOutside:
          cut(e, 1);
          return;
        case kMustJoin:
          join(e, b, false);
          cut(e, 2);
          return;
        default:
          break;
      }
      if (b > seed_) join(e, b, true);
      // b is deleted.
      vstate_[b] = kDeleted;
      units_ += 2;
      recurse();
      units_ -= 2;
      // b stays outside the block.
      vstate_[b] = kOutside;
      recurse();
      vstate_[b] = kUndecided;
      if (b > seed_) {
        // e is deleted and b joins the block through another edge later.
        vstate_[b] = kMustJoin;
        ++must_join_;
        cut(e, 2);
        --must_join_;
        vstate_[b] = kUndecided;
      }
      return;
    }
    leaf();
  }

  GroupElement cycle_gain(const GainEdge& ge) const {
    return grp_.multiply(grp_.multiply(pot_[ge.tail], ge.gain), grp_.inverse(pot_[ge.head]));
  }

  void branch_internal(EdgeId e) {
    const GainEdge& ge = g_.edge(e);
    const GroupElement c = cycle_gain(ge);
    if (group_.contains(c)) {
      estate_[e] = kKept;
      recurse();
      estate_[e] = kOpen;
      return;
    }
    const Subgroup saved = group_;
    group_.adjoin(c);
    estate_[e] = kKept;
    recurse();
    group_ = saved;
    const std::size_t units = ge.is_loop() && grp_.order_of(ge.gain) == 2 ? 1 : 2;
    cut(e, units);
  }

  void cut(EdgeId e, std::size_t units) {
    estate_[e] = kCut;
    units_ += units;
    recurse();
    units_ -= units;
    estate_[e] = kOpen;
  }

  void join(EdgeId e, VertexId b, bool fresh) {
    const GainEdge& ge = g_.edge(e);
    const std::uint8_t before = vstate_[b];
    pot_[b] = ge.head == b ? grp_.multiply(pot_[ge.tail], ge.gain)
                           : grp_.multiply(pot_[ge.head], grp_.inverse(ge.gain));
    vstate_[b] = kInside;
    if (!fresh) --must_join_;
    ++inside_;
    estate_[e] = kKept;
    recurse();
    estate_[e] = kOpen;
    --inside_;
    if (!fresh) ++must_join_;
    vstate_[b] = before;
  }

  void leaf() {
    if (must_join_ > 0) return;
    const std::size_t order = group_.order();
    KBlock block;
    block.group_order = order;
    std::size_t k = 0;
    std::size_t deleted = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (vstate_[v] == kInside) block.h.vertices.push_back(v);
      if (vstate_[v] != kDeleted) continue;
      ++deleted;
      Subgroup gv = group_;
      std::optional<GroupElement> hv;
      for (EdgeId e : g_.incident_edges(v)) {
        const GainEdge& ge = g_.edge(e);
        if (ge.is_loop() || vstate_[ge.other(v)] != kInside) continue;
        const VertexId a = ge.other(v);
        const GroupElement reach =
            grp_.multiply(pot_[a], ge.tail == a ? ge.gain : grp_.inverse(ge.gain));
        if (!hv)
          hv = reach;
        else
          gv.adjoin(grp_.multiply(reach, grp_.inverse(*hv)));
      }
      block.removed_vertices.push_back(v);
      block.vertex_trace_sizes.push_back(gv.order());
      k += 2 * gv.order();
    }
    for (EdgeId e = 0; e < m_; ++e) {
      if (estate_[e] == kKept) block.h.edges.push_back(e);
      if (estate_[e] != kCut) continue;
      const GainEdge& ge = g_.edge(e);
      std::size_t size = order;
      if (vstate_[ge.tail] == kInside && vstate_[ge.head] == kInside) {
        if (group_.contains(cycle_gain(ge))) return;
        size = ge.is_loop() && grp_.order_of(ge.gain) == 2 ? order : 2 * order;
      }
      block.removed_edges.push_back(e);
      block.edge_trace_sizes.push_back(size);
      k += size;
    }
    if (k > bound_) return;
    if (inside_ + deleted == n_ && !group_.is_proper()) return;
    block.k = k;
    if (mode_ == collect) {
      results.push_back(std::move(block));
      return;
    }
    if (results.empty() || block_before(block, results.front())) {
      bound_ = k;
      results.assign(1, std::move(block));
    }
  }

  const GainGraph& g_;
  const GroupSpec& grp_;
  Mode mode_;
  std::size_t bound_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint8_t> vstate_;
  std::vector<std::uint8_t> estate_;
  std::vector<GroupElement> pot_;
  Subgroup group_;
  VertexId seed_ = 0;
  std::size_t units_ = 0;
  std::size_t inside_ = 0;
  std::size_t must_join_ = 0;
};

}  // namespace detail

/// Every k-block with k <= k_max, sorted by (k, |U|, |D|, U, D, V').
inline std::vector<KBlock> enumerate_blocks(const GainGraph& g, std::size_t k_max) {
  detail::BlockSearch search(g, k_max, detail::BlockSearch::collect);
  search.run();
  auto out = std::move(search.results);
  std::sort(out.begin(), out.end(),
            detail::block_before);
  return out;
}

/// The block with the smallest k <= k_max, ties broken as in enumerate_blocks.
inline std::optional<KBlock> find_k_block(const GainGraph& g, std::size_t k_max) {
  detail::BlockSearch search(g, k_max, detail::BlockSearch::minimum);
  search.run();
  if (search.results.empty()) return std::nullopt;
  return std::move(search.results.front());
}

struct GainMixedConnectivity {
  bool connected = true;
  std::optional<KBlock> witness;
};

/// No k-block with k <= n - 1.
inline GainMixedConnectivity is_n_gain_mixed_connected(const GainGraph& g, int n) {
  if (n < 1) throw InvalidInput("gain-mixed connectivity needs n >= 1");
  auto block = find_k_block(g, static_cast<std::size_t>(n - 1));
  if (!block) return {};
  return GainMixedConnectivity{false, std::move(block)};
}

struct SymmetricSeparation {
  std::vector<std::size_t> vertices;   // U_H, covering vertex indices
  std::vector<std::size_t> edges;      // D_H, covering edge indices
  std::vector<std::size_t> component;  // <E'> H, covering vertex indices
  std::size_t cost = 0;                // 2|U_H| + |D_H|
};

/// (U_H, D_H) of a block inside the covering graph `cov` = expand(g).
inline SymmetricSeparation symmetric_separation(const GainGraph& g, const CoveringGraph& cov,
                                                const KBlock& b) {
  if (cov.vertex_count() != g.group().order() * g.vertex_count())
    throw InvalidInput("covering graph does not match the gain graph");
  SymmetricSeparation out;
  out.component = lifted_component(g, b.h);
  for (VertexId v : b.removed_vertices) {
    const auto trace = vertex_trace(g, b.h, v);
    out.vertices.insert(out.vertices.end(), trace.lifts.begin(), trace.lifts.end());
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::vector<char> in_component(cov.vertex_count(), 0);
  for (std::size_t x : out.component) in_component[x] = 1;
  for (std::size_t e = 0; e < cov.edge_count(); ++e) {
    if (!std::binary_search(b.removed_edges.begin(), b.removed_edges.end(), cov.edge_origin(e))) continue;
    const auto [x, y] = cov.graph().edges[e];
    if (in_component[x] || in_component[y]) out.edges.push_back(e);
  }
  out.cost = 2 * out.vertices.size() + out.edges.size();
  return out;
}

}  // namespace symrig
