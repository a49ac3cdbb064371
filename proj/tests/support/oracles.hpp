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

// Brute-force reference implementations used to check the searches.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "symrig/connectivity.hpp"
#include "symrig/covering.hpp"
#include "symrig/gain_graph.hpp"

namespace symrig::testing {

inline bool splits(const SimpleGraph& g, const std::vector<char>& dead_v, const std::vector<char>& dead_e) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (dead_e[e]) continue;
    const auto [a, b] = g.edges[e];
    if (dead_v[a] || dead_v[b]) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::size_t start = g.vertex_count, live = 0;
  for (std::size_t v = 0; v < g.vertex_count; ++v)
    if (!dead_v[v]) {
      ++live;
      if (start == g.vertex_count) start = v;
    }
  if (live <= 1) return false;
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached < live;
}

template <class F>
void each_subset(std::size_t n, std::size_t size, F&& f) {
  std::vector<std::size_t> pick(size);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t depth) {
    if (depth == size) {
      f(pick);
      return;
    }
    for (std::size_t i = from; i + (size - depth) <= n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// Smallest 2|W| + |F| over all (W, F) that disconnect g, searched up to `limit`.
inline std::optional<std::size_t> brute_mixed_cost(const SimpleGraph& g, std::size_t limit) {
  std::vector<char> dead_v(g.vertex_count, 0), dead_e(g.edges.size(), 0);
  for (std::size_t cost = 0; cost <= limit; ++cost) {
    bool found = false;
    for (std::size_t w = 0; 2 * w <= cost && !found; ++w) {
      const std::size_t f = cost - 2 * w;
      if (w > g.vertex_count || f > g.edges.size()) continue;
      each_subset(g.vertex_count, w, [&](const std::vector<std::size_t>& ws) {
        if (found) return;
        for (auto v : ws) dead_v[v] = 1;
        each_subset(g.edges.size(), f, [&](const std::vector<std::size_t>& fs) {
          if (found) return;
          for (auto e : fs) dead_e[e] = 1;
          found = splits(g, dead_v, dead_e);
          for (auto e : fs) dead_e[e] = 0;
        });
        for (auto v : ws) dead_v[v] = 0;
      });
    }
    if (found) return cost;
  }
  return std::nullopt;
}

struct BruteBlock {
  std::vector<VertexId> u;
  EdgeSubset d;
  std::vector<VertexId> h;
  std::size_t k = 0;
  auto key() const { return std::tie(k, u, d, h); }
  bool operator<(const BruteBlock& o) const { return key() < o.key(); }
  bool operator==(const BruteBlock& o) const { return key() == o.key(); }
};

/// Every block with k <= k_max found by trying all (U, D) with 2|U| + |D| <= k_max.
/// Only pairs where each removed vertex and edge meets H (and no removed edge
/// touches U, and removed chords enlarge <E'>) are kept.
inline std::vector<BruteBlock> brute_blocks(const GainGraph& g, std::size_t k_max) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::vector<BruteBlock> out;
  for (std::size_t w = 0; 2 * w <= k_max && w <= n; ++w) {
    each_subset(n, w, [&](const std::vector<std::size_t>& us) {
      std::vector<char> in_u(n, 0);
      for (auto v : us) in_u[v] = 1;
      for (std::size_t f = 0; 2 * w + f <= k_max && f <= m; ++f) {
        each_subset(m, f, [&](const std::vector<std::size_t>& ds) {
          std::vector<char> in_d(m, 0);
          for (auto e : ds) in_d[e] = 1;
          for (auto e : ds)
            if (in_u[g.edge(e).tail] || in_u[g.edge(e).head]) return;
          EdgeSubset live;
          for (EdgeId e = 0; e < m; ++e)
            if (!in_d[e] && !in_u[g.edge(e).tail] && !in_u[g.edge(e).head]) live.push_back(e);
          std::vector<char> placed(n, 0);
          for (VertexId s = 0; s < n; ++s) {
            if (in_u[s] || placed[s]) continue;
            // Component of s in G - U - D.
            std::vector<VertexId> comp{s};
            placed[s] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i)
              for (EdgeId e : live) {
                const auto& ge = g.edge(e);
                if (!ge.touches(comp[i])) continue;
                const VertexId o = ge.other(comp[i]);
                if (!placed[o]) {
                  placed[o] = 1;
                  comp.push_back(o);
                }
              }
            std::sort(comp.begin(), comp.end());
            auto inside = [&](VertexId v) { return std::binary_search(comp.begin(), comp.end(), v); };
            Subgraph h{comp, {}};
            for (EdgeId e : live)
              if (inside(g.edge(e).tail)) h.edges.push_back(e);
            BruteBlock b{us, ds, comp, 0};
            bool ok = true;
            for (VertexId v : us) {
              bool adjacent = false;
              for (EdgeId e : g.incident_edges(v))
                adjacent = adjacent || (!g.edge(e).is_loop() && inside(g.edge(e).other(v)));
              if (!adjacent) {
                ok = false;
                break;
              }
              b.k += 2 * vertex_trace(g, h, v).lifts.size();
            }
            for (EdgeId e : ds) {
              if (!ok) break;
              if (!inside(g.edge(e).tail) && !inside(g.edge(e).head)) {
                ok = false;
                break;
              }
              try {
                b.k += edge_trace(g, h, e).size;
              } catch (const InvalidInput&) {
                ok = false;
              }
            }
            if (!ok || b.k > k_max) continue;
            if (comp.size() + us.size() == n && !frame_of(g, h).group.is_proper()) continue;
            out.push_back(std::move(b));
          }
        });
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether b = switch_labels(a, h) up to edge order and orientation for some h,
/// with vertices matched by index. Backtracks over h one vertex at a time.
inline bool switching_equivalent(const GainGraph& a, const GainGraph& b) {
  if (a.group() != b.group() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  const GroupSpec& grp = a.group();
  const std::size_t n = a.vertex_count();
  // Gains between (u, v) with u <= v, read from u; loops keep the smaller of x, x^-1.
  auto bucket = [&](const GainGraph& g, const std::vector<GroupElement>& h, VertexId u, VertexId v) {
    std::vector<std::size_t> out;
    for (const auto& e : g.edges()) {
      GroupElement x = grp.multiply(grp.multiply(h[e.tail], e.gain), grp.inverse(h[e.head]));
      if (e.tail == u && e.head == v) {
      } else if (e.tail == v && e.head == u) {
        x = grp.inverse(x);
      } else {
        continue;
      }
      std::size_t i = grp.index(x);
      if (u == v) i = std::min(i, grp.index(grp.inverse(x)));
      out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::vector<GroupElement> ident(n, kIdentity);
  std::vector<GroupElement> h(n, kIdentity);
  std::function<bool(VertexId)> assign = [&](VertexId v) {
    if (v == n) return true;
    for (const auto& x : grp.elements()) {
      h[v] = x;
      bool ok = true;
      for (VertexId u = 0; u <= v && ok; ++u) ok = bucket(a, h, u, v) == bucket(b, ident, u, v);
      if (ok && assign(v + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

}  // namespace symrig::testing
