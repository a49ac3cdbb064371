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

// Count functions on edge sets of gain graphs and the matroids they induce.
//
//   rho(X)  = 2|V(X)| - 3 + (0 balanced, 2 unbalanced cyclic, 3 otherwise)
//   mu(X)   = 2|V(X)| - 3 + (0 balanced, 1 otherwise)
//   nu_t(X) = 2|V(X)| - 3 + (0 balanced, 2 near-balanced or <X> = Z_l with
//             t = 0, 1, -1 mod l, 3 otherwise)
//
// On disconnected sets the correction term is the maximum over components.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"

namespace symrig {

enum class CountKind { rho, mu, nu };

struct CountFamily {
  CountKind kind = CountKind::rho;
  int t = 0;

  static CountFamily rho() { return {CountKind::rho, 0}; }
  static CountFamily mu() { return {CountKind::mu, 1}; }
  static CountFamily nu(int t) { return {CountKind::nu, t}; }

  std::string name() const {
    switch (kind) {
      case CountKind::rho: return "rho";
      case CountKind::mu: return "mu";
      case CountKind::nu: return "nu_" + std::to_string(t);
    }
    return "?";
  }
};

inline bool is_order_two_group(const GroupSpec& grp) { return grp.order() == 2; }

inline bool is_characterized_odd_cyclic(const GroupSpec& grp) {
  return grp.kind() == GroupKind::cyclic && grp.k() % 2 == 1 && grp.k() >= 5 && grp.k() < 1000;
}

/// Throws Unsupported when the family has no matroid characterization over the group.
inline void validate(const CountFamily& f, const GroupSpec& grp) {
  switch (f.kind) {
    case CountKind::rho:
      if (grp.kind() == GroupKind::dihedral && grp.k() % 2 == 0)
        throw Unsupported("rho is only characterized for C_s, C_k and C_kv with k odd");
      return;
    case CountKind::mu:
      if (!is_order_two_group(grp)) throw Unsupported("mu is only defined for groups of order 2");
      return;
    case CountKind::nu:
      if (!is_characterized_odd_cyclic(grp))
        throw Unsupported("nu_t is only characterized for C_k with k odd and 5 <= k < 1000");
      return;
  }
}

namespace detail {

inline long correction(const CountFamily& f, const GainGraph& g, const EdgeSubset& component,
                       const Subgroup& h) {
  if (h.order() == 1) return 0;
  switch (f.kind) {
    case CountKind::rho: return h.is_cyclic() ? 2 : 3;
    case CountKind::mu: return 1;
    case CountKind::nu: {
      const long l = static_cast<long>(h.order());
      const long t = ((f.t % l) + l) % l;
      if (t == 0 || t == 1 || t == l - 1) return 2;
      return is_near_balanced(g, component).near_balanced ? 2 : 3;
    }
  }
  return 3;
}

/// Count of a nonempty, normalized subset; no validation.
inline long count_unchecked(const CountFamily& f, const GainGraph& g, const EdgeSubset& x) {
  long term = 0;
  if (f.kind == CountKind::mu) {
    term = is_balanced(g, x) ? 0 : 1;
  } else {
    for (const auto& comp : classify(g, x).components) {
      term = std::max(term, correction(f, g, comp.edges, comp.group));
      if (term == 3) break;
    }
  }
  return 2 * static_cast<long>(vertices_of(g, x).size()) - 3 + term;
}

inline bool connected_subset(const GainGraph& g, const EdgeSubset& x) {
  if (x.empty()) return false;
  DisjointSets ds(g.vertex_count());
  std::size_t comps = 0;
  std::vector<char> seen(g.vertex_count(), 0);
  for (EdgeId e : x)
    for (VertexId v : {g.edge(e).tail, g.edge(e).head})
      if (!seen[v]) {
        seen[v] = 1;
        ++comps;
      }
  for (EdgeId e : x)
    if (ds.unite(g.edge(e).tail, g.edge(e).head)) --comps;
  return comps == 1;
}

inline EdgeSubset pick(const EdgeSubset& base, std::uint64_t mask) {
  EdgeSubset out;
  for (std::size_t i = 0; i < base.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(base[i]);
  return out;
}

}  // namespace detail

inline long count(const CountFamily& f, const GainGraph& g, const EdgeSubset& x) {
  validate(f, g.group());
  if (x.empty()) throw InvalidInput("count functions are evaluated on nonempty edge sets");
  const EdgeSubset xs = normalized(x);
  require_subset(g, xs);
  return detail::count_unchecked(f, g, xs);
}

struct Independence {
  bool independent = true;
  EdgeSubset violating;  // a smallest F with count(F) < |F| when dependent
};

/// count(F) >= |F| for every nonempty F. Only connected F are tested, since a
/// disconnected violator always has a violating component.
inline Independence is_independent(const CountFamily& f, const GainGraph& g, const EdgeSubset& x_in,
                                   std::size_t cap = 20) {
  validate(f, g.group());
  const EdgeSubset x = normalized(x_in);
  require_subset(g, x);
  if (x.size() > cap)
    throw TooLarge("independence test on " + std::to_string(x.size()) + " edges exceeds the cap of " +
                   std::to_string(cap));
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << x.size()); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  for (std::uint64_t m : masks) {
    const EdgeSubset sub = detail::pick(x, m);
    if (!detail::connected_subset(g, sub)) continue;
    if (detail::count_unchecked(f, g, sub) < static_cast<long>(sub.size())) return {false, sub};
  }
  return {};
}

struct ExhaustiveRank {
  long value = 0;
  std::vector<EdgeSubset> partition;
};

/// min over partitions {E_i} of sum count(E_i), by dynamic programming over
/// subsets (3^|X| steps). Restricting parts to connected sets gives the same value.
inline ExhaustiveRank exhaustive_rank(const CountFamily& f, const GainGraph& g, const EdgeSubset& x_in,
                                      std::size_t cap = 12, bool connected_parts_only = true) {
  validate(f, g.group());
  const EdgeSubset x = normalized(x_in);
  require_subset(g, x);
  if (x.size() > cap)
    throw TooLarge("partition search on " + std::to_string(x.size()) + " edges exceeds the cap of " +
                   std::to_string(cap));
  const std::size_t m = x.size();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<long> value(full + 1, kInf);
  for (std::uint64_t s = 1; s <= full; ++s) {
    const EdgeSubset sub = detail::pick(x, s);
    if (connected_parts_only && !detail::connected_subset(g, sub)) continue;
    value[s] = detail::count_unchecked(f, g, sub);
  }
  std::vector<long> best(full + 1, kInf);
  std::vector<std::uint64_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t part = sub | low;
      if (value[part] < kInf && best[s ^ part] < kInf && value[part] + best[s ^ part] < best[s]) {
        best[s] = value[part] + best[s ^ part];
        choice[s] = part;
      }
      if (sub == 0) break;
    }
  }
  ExhaustiveRank out{best[full], {}};
  for (std::uint64_t s = full; s != 0; s ^= choice[s]) out.partition.push_back(detail::pick(x, choice[s]));
  return out;
}

struct RankOptions {
  std::size_t exhaustive_cap = 12;  // partition DP up to this many edges
  std::size_t subset_cap = 16;      // greedy subset search per edge
  bool connected_parts_only = true;
  std::vector<std::vector<EdgeSubset>> candidate_partitions;
};

struct RankResult {
  long lower = 0;                    // size of a certified independent set
  long upper = 0;                    // value of the best partition found
  bool exact = false;                // the rank is known to equal `lower`
  std::vector<EdgeSubset> partition; // attains `upper`
  EdgeSubset basis;                  // certified independent, |basis| = lower
  EdgeSubset undecided;              // edges whose independence was not settled
  std::vector<long> candidate_values;

  long value() const {
    if (!exact) throw Indeterminate("rank is only bounded: " + std::to_string(lower) + " <= r <= " +
                                    std::to_string(upper));
    return lower;
  }
};

namespace detail {

/// Edges of the 2-edge-connected piece of `edges` around e (e included).
inline EdgeSubset two_edge_component(const GainGraph& g, const EdgeSubset& edges, EdgeId e) {
  auto connected_without = [&](EdgeId skip, VertexId a, VertexId b) {
    DisjointSets ds(g.vertex_count());
    for (EdgeId x : edges)
      if (x != skip) ds.unite(g.edge(x).tail, g.edge(x).head);
    return ds.find(a) == ds.find(b);
  };
  std::vector<char> bridge(g.edge_count(), 0);
  for (EdgeId x : edges) {
    const GainEdge& ge = g.edge(x);
    if (!ge.is_loop() && !connected_without(x, ge.tail, ge.head)) bridge[x] = 1;
  }
  if (bridge[e]) return {e};
  DisjointSets ds(g.vertex_count());
  for (EdgeId x : edges)
    if (!bridge[x]) ds.unite(g.edge(x).tail, g.edge(x).head);
  const std::size_t root = ds.find(g.edge(e).tail);
  EdgeSubset out;
  for (EdgeId x : edges)
    if (!bridge[x] && ds.find(g.edge(x).tail) == root) out.push_back(x);
  return out;
}

inline EdgeSubset connected_component_of(const GainGraph& g, const EdgeSubset& edges, EdgeId e) {
  for (auto& comp : components(g, edges))
    if (std::binary_search(comp.begin(), comp.end(), e)) return comp;
  return {e};
}

inline long partition_value(const CountFamily& f, const GainGraph& g, const std::vector<EdgeSubset>& parts) {
  long total = 0;
  for (const auto& p : parts) total += count_unchecked(f, g, normalized(p));
  return total;
}

inline void require_partition(const GainGraph& g, const EdgeSubset& x, const std::vector<EdgeSubset>& parts) {
  EdgeSubset all;
  for (const auto& p : parts) {
    if (p.empty()) throw InvalidInput("partition contains an empty part");
    require_subset(g, p);
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidInput("partition parts overlap");
  if (all != x) throw InvalidInput("partition does not cover the edge set exactly");
}

}  // namespace detail

/// Greedy basis in edge-id order. Each edge e is tested against every F that
/// contains e inside the region of I + e where circuits through e can live;
/// regions above the subset cap are only tested as a whole, and edges left
/// unsettled are skipped. The upper bound comes from merging the tight sets
/// C - e of the circuits found, plus any caller-supplied partitions.
inline RankResult greedy_rank(const CountFamily& f, const GainGraph& g, const EdgeSubset& x_in,
                              const RankOptions& options = {}) {
  validate(f, g.group());
  const EdgeSubset x = normalized(x_in);
  require_subset(g, x);
  RankResult out;
  if (x.empty()) {
    out.exact = true;
    return out;
  }
  const bool bridgeless = f.kind == CountKind::mu ||
                          (f.kind == CountKind::rho && g.group().is_abstractly_cyclic());
  EdgeSubset basis;
  std::vector<std::pair<EdgeId, EdgeSubset>> circuits;
  for (EdgeId e : x) {
    EdgeSubset trial = basis;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
    const EdgeSubset region =
        bridgeless ? detail::two_edge_component(g, trial, e) : detail::connected_component_of(g, trial, e);
    if (bridgeless && region.size() == 1 && !g.edge(e).is_loop()) {
      basis = std::move(trial);
      continue;
    }
    EdgeSubset others;
    for (EdgeId y : region)
      if (y != e) others.push_back(y);
    std::optional<EdgeSubset> violator;
    bool settled = true;
    if (others.size() <= options.subset_cap) {
      std::vector<std::uint64_t> masks;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << others.size()); ++m) masks.push_back(m);
      std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
      });
      for (std::uint64_t m : masks) {
        EdgeSubset sub = detail::pick(others, m);
        sub.insert(std::upper_bound(sub.begin(), sub.end(), e), e);
        if (!detail::connected_subset(g, sub)) continue;
        if (detail::count_unchecked(f, g, sub) < static_cast<long>(sub.size())) {
          violator = std::move(sub);
          break;
        }
      }
    } else if (detail::count_unchecked(f, g, region) < static_cast<long>(region.size())) {
      violator = region;
    } else {
      settled = false;
    }
    if (violator) {
      circuits.emplace_back(e, std::move(*violator));
    } else if (settled) {
      basis = std::move(trial);
    } else {
      out.undecided.push_back(e);
    }
  }

  // Tight sets C - e that share an edge merge into one part.
  std::vector<EdgeId> index_of(g.edge_count(), g.edge_count());
  for (std::size_t i = 0; i < basis.size(); ++i) index_of[basis[i]] = i;
  detail::DisjointSets ds(basis.size());
  std::vector<char> in_tight(basis.size(), 0);
  for (const auto& [e, c] : circuits) {
    std::optional<std::size_t> first;
    for (EdgeId y : c) {
      if (y == e) continue;
      const std::size_t i = index_of[y];
      in_tight[i] = 1;
      if (first) ds.unite(*first, i);
      else first = i;
    }
  }
  std::map<std::size_t, EdgeSubset> merged;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (in_tight[i]) merged[ds.find(i)].push_back(basis[i]);
  std::vector<EdgeSubset> parts;
  std::map<std::size_t, std::size_t> part_of_root;
  for (auto& [root, part] : merged) {
    part_of_root[root] = parts.size();
    parts.push_back(part);
  }
  for (const auto& [e, c] : circuits) {
    std::optional<std::size_t> root;
    for (EdgeId y : c)
      if (y != e) root = ds.find(index_of[y]);
    if (root)
      parts[part_of_root.at(*root)].push_back(e);
    else
      parts.push_back({e});
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!in_tight[i]) parts.push_back({basis[i]});
  for (EdgeId e : out.undecided) parts.push_back({e});
  for (auto& p : parts) p = normalized(p);
  std::sort(parts.begin(), parts.end());

  out.lower = static_cast<long>(basis.size());
  out.basis = std::move(basis);
  out.partition = parts;
  out.upper = detail::partition_value(f, g, parts);
  auto consider = [&](const std::vector<EdgeSubset>& candidate) {
    const long v = detail::partition_value(f, g, candidate);
    if (v < out.upper) {
      out.upper = v;
      out.partition = candidate;
    }
    return v;
  };
  consider({x});
  for (const auto& candidate : options.candidate_partitions) {
    std::vector<EdgeSubset> normalized_parts;
    for (const auto& p : candidate) normalized_parts.push_back(normalized(p));
    detail::require_partition(g, x, normalized_parts);
    out.candidate_values.push_back(consider(normalized_parts));
  }
  out.exact = out.undecided.empty() || out.lower == out.upper;
  return out;
}

/// Exact rank by partition search when |X| is within the cap (cross-checked
/// against the greedy basis), certified bounds from greedy_rank otherwise.
inline RankResult rank(const CountFamily& f, const GainGraph& g, const EdgeSubset& x_in,
                       const RankOptions& options = {}) {
  const EdgeSubset x = normalized(x_in);
  RankResult greedy = greedy_rank(f, g, x, options);
  if (x.size() > options.exhaustive_cap) return greedy;
  const auto dp = exhaustive_rank(f, g, x, options.exhaustive_cap, options.connected_parts_only);
  if (!greedy.exact || greedy.lower != dp.value)
    throw Error("greedy basis of size " + std::to_string(greedy.lower) +
                " disagrees with the partition minimum " + std::to_string(dp.value));
  greedy.upper = dp.value;
  greedy.partition = dp.partition;
  return greedy;
}

/// Rank needed for rigidity under rho: 2|V| - 3 for the trivial group,
/// 2|V| - 1 for cyclic groups (C_s included) and 2|V| for C_kv with k odd.
inline long forced_threshold(const GroupSpec& grp, std::size_t vertices) {
  const long n2 = 2 * static_cast<long>(vertices);
  if (grp.order() == 1) return n2 - 3;
  if (grp.is_abstractly_cyclic()) return n2 - 1;
  if (grp.k() % 2 == 1) return n2;
  throw Unsupported("forced rigidity over " + grp.name() + " has no known combinatorial characterization");
}

struct RigidityDecision {
  bool rigid = false;
  CountFamily family;
  int t = 0;
  long threshold = 0;
  RankResult rank;
};

namespace detail {

inline RigidityDecision decide(const CountFamily& f, int t, const GainGraph& g, long threshold,
                               const RankOptions& options) {
  RigidityDecision out{false, f, t, threshold, rank(f, g, g.all_edges(), options)};
  const auto spanned = vertices_of(g, out.rank.basis);
  const bool spanning = g.vertex_count() < 2 || spanned.size() == g.vertex_count();
  if (out.rank.lower >= threshold && spanning) {
    out.rigid = true;
  } else if (out.rank.upper < threshold || (out.rank.exact && out.rank.lower < threshold)) {
    out.rigid = false;
  } else if (out.rank.exact) {
    out.rigid = false;  // rank reached but the basis misses a vertex
  } else {
    throw Indeterminate("rank bounds " + std::to_string(out.rank.lower) + ".." + std::to_string(out.rank.upper) +
                        " do not settle the threshold " + std::to_string(threshold));
  }
  return out;
}

}  // namespace detail

inline RigidityDecision is_forced_rigid_combinatorial(const GainGraph& g, const RankOptions& options = {}) {
  const long threshold = forced_threshold(g.group(), g.vertex_count());
  return detail::decide(CountFamily::rho(), 0, g, threshold, options);
}

/// Characters with a combinatorial description: t = 0 everywhere rho applies,
/// t = 1 over groups of order 2 (mu), every t over C_k with k odd in [5, 1000).
inline RigidityDecision is_iota_rigid_combinatorial(const GainGraph& g, int t, const RankOptions& options = {}) {
  const GroupSpec& grp = g.group();
  const long n2 = 2 * static_cast<long>(g.vertex_count());
  if (is_characterized_odd_cyclic(grp)) {
    const int k = grp.k();
    const int tt = ((t % k) + k) % k;
    const long threshold = (tt == 0 || tt == 1 || tt == k - 1) ? n2 - 1 : n2;
    return detail::decide(CountFamily::nu(tt), tt, g, threshold, options);
  }
  const int modulus = grp.is_abstractly_cyclic() ? static_cast<int>(grp.order()) : 0;
  const int tt = modulus > 0 ? ((t % modulus) + modulus) % modulus : t;
  if (tt == 0 && (grp.is_abstractly_cyclic() || grp.k() % 2 == 1)) return is_forced_rigid_combinatorial(g, options);
  if (is_order_two_group(grp) && tt == 1) return detail::decide(CountFamily::mu(), 1, g, n2 - 2, options);
  throw Unsupported("character t = " + std::to_string(t) + " over " + grp.name() +
                    " has no known combinatorial characterization");
}

struct FullRigidity {
  bool rigid = false;
  std::vector<RigidityDecision> characters;  // characters that were settled
  std::vector<int> unsettled;                // characters whose rank bounds straddle the threshold
};

/// Rigidity of the covering framework: every character for groups of order 2
/// and for C_k with k odd in [5, 1000); forced rigidity alone for C_3 and the
/// trivial group. One certified flexible character settles the answer; an
/// unsettled character otherwise raises Indeterminate.
inline FullRigidity is_rigid_combinatorial(const GainGraph& g, const RankOptions& options = {}) {
  const GroupSpec& grp = g.group();
  std::vector<int> characters;
  if (grp.order() == 1 || (grp.kind() == GroupKind::cyclic && grp.k() == 3)) {
    characters = {0};
  } else if (is_order_two_group(grp)) {
    characters = {0, 1};
  } else if (is_characterized_odd_cyclic(grp)) {
    for (int t = 0; t < grp.k(); ++t) characters.push_back(t);
  } else {
    throw Unsupported("rigidity over " + grp.name() + " has no known combinatorial characterization");
  }
  FullRigidity out;
  out.rigid = true;
  for (int t : characters) {
    try {
      out.characters.push_back(is_iota_rigid_combinatorial(g, t, options));
      out.rigid = out.rigid && out.characters.back().rigid;
    } catch (const Indeterminate&) {
      out.unsettled.push_back(t);
    }
  }
  if (out.rigid && !out.unsettled.empty())
    throw Indeterminate("character t = " + std::to_string(out.unsettled.front()) + " could not be settled");
  return out;
}

}  // namespace symrig
