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

// JSON encodings of groups, gain graphs, covering graphs and partitions.
//
//   gain graph: {"group": {"kind": "cyclic", "k": 6}, "vertices": ["1", "2"],
//                "edges": [{"tail": "1", "head": "2", "gain": "s*r^2"}, ...]}
//   covering:   {"group": ..., "vertices": [...], "edges": [[a, b], ...],
//                "action": {"<element>": [image of each vertex], ...}}
//   partition:  [[edge ids], ...]

#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symrig/connectivity.hpp"
#include "symrig/covering.hpp"
#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"
#include "symrig/matroid.hpp"

namespace symrig::io {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

template <class T>
T get(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string(what) + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InvalidInput(std::string(what) + " has a malformed \"" + key + "\"");
  }
}

}  // namespace detail

inline GroupSpec group_from_json(const Json& j) {
  const auto kind = detail::get<std::string>(j, "kind", "group");
  if (kind == "reflection") return GroupSpec::reflection();
  const int k = detail::get<int>(j, "k", "group");
  if (kind == "cyclic") return GroupSpec::cyclic(k);
  if (kind == "dihedral") return GroupSpec::dihedral(k);
  throw InvalidInput("unknown group kind '" + kind + "'");
}

inline Json to_json(const GroupSpec& g) {
  switch (g.kind()) {
    case GroupKind::reflection: return {{"kind", "reflection"}};
    case GroupKind::cyclic: return {{"kind", "cyclic"}, {"k", g.k()}};
    case GroupKind::dihedral: return {{"kind", "dihedral"}, {"k", g.k()}};
  }
  return {};
}

inline GainGraph gain_graph_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("gain graph must be a JSON object");
  GainGraph g(group_from_json(detail::get<Json>(j, "group", "gain graph")));
  for (const auto& name : detail::get<std::vector<std::string>>(j, "vertices", "gain graph")) g.add_vertex(name);
  const Json edges = detail::get<Json>(j, "edges", "gain graph");
  if (!edges.is_array()) throw InvalidInput("gain graph \"edges\" must be an array");
  for (const auto& e : edges) {
    const auto tail = detail::get<std::string>(e, "tail", "edge");
    const auto head = detail::get<std::string>(e, "head", "edge");
    const auto t = g.find_vertex(tail);
    const auto h = g.find_vertex(head);
    if (!t || !h) throw InvalidInput("edge " + tail + "->" + head + " names an unknown vertex");
    const std::string gain = e.contains("gain") ? detail::get<std::string>(e, "gain", "edge") : "id";
    g.add_edge(*t, *h, g.group().parse(gain));
  }
  return g;
}

inline Json to_json(const GainGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"tail", g.vertex_name(e.tail)}, {"head", g.vertex_name(e.head)}, {"gain", g.group().format(e.gain)}});
  return {{"group", to_json(g.group())}, {"vertices", g.vertex_names()}, {"edges", edges}};
}

inline Json to_json(const CoveringGraph& cov) {
  Json edges = Json::array();
  for (const auto& [a, b] : cov.graph().edges) edges.push_back({a, b});
  Json action = Json::object();
  for (const auto& gamma : cov.group().elements())
    action[cov.group().format(gamma)] = cov.action_table()[cov.group().index(gamma)];
  std::vector<std::size_t> cover(cov.vertex_count());
  std::vector<std::size_t> origin(cov.edge_count());
  for (std::size_t x = 0; x < cov.vertex_count(); ++x) cover[x] = cov.covering_map(x);
  for (std::size_t e = 0; e < cov.edge_count(); ++e) origin[e] = cov.edge_origin(e);
  return {{"group", to_json(cov.group())},
          {"vertices", cov.vertex_names()},
          {"edges", edges},
          {"action", action},
          {"covering_map", cover},
          {"quotient_vertices", cov.quotient_names()},
          {"edge_origin", origin}};
}

/// Reads a covering graph. "covering_map", "quotient_vertices" and
/// "edge_origin" are optional; without them orbits are numbered by their
/// smallest vertex and named after it.
inline CoveringGraph covering_from_json(const Json& j) {
  const GroupSpec grp = group_from_json(detail::get<Json>(j, "group", "covering graph"));
  const auto names = detail::get<std::vector<std::string>>(j, "vertices", "covering graph");
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(names[i], i).second) throw InvalidInput("duplicate covering vertex '" + names[i] + "'");
  auto vertex = [&](const Json& v) -> std::size_t {
    if (v.is_number_unsigned()) {
      const auto i = v.get<std::size_t>();
      if (i >= n) throw InvalidInput("covering vertex index out of range");
      return i;
    }
    if (v.is_string()) {
      const auto it = index.find(v.get<std::string>());
      if (it == index.end()) throw InvalidInput("unknown covering vertex '" + v.get<std::string>() + "'");
      return it->second;
    }
    throw InvalidInput("covering vertices are referenced by index or name");
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : detail::get<Json>(j, "edges", "covering graph")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("covering edges are pairs");
    edges.emplace_back(vertex(e[0]), vertex(e[1]));
  }
  const Json action_json = detail::get<Json>(j, "action", "covering graph");
  std::vector<std::vector<std::size_t>> action(grp.order());
  for (const auto& gamma : grp.elements()) {
    const std::string key = grp.format(gamma);
    if (gamma == kIdentity && !action_json.contains(key)) {
      for (std::size_t x = 0; x < n; ++x) action[grp.index(gamma)].push_back(x);
      continue;
    }
    if (!action_json.contains(key)) throw InvalidInput("action is missing element " + key);
    for (const auto& v : action_json.at(key)) action[grp.index(gamma)].push_back(vertex(v));
  }
  std::vector<std::size_t> cover(n, n);
  std::vector<std::string> qnames;
  if (j.contains("covering_map")) {
    cover = detail::get<std::vector<std::size_t>>(j, "covering_map", "covering graph");
    qnames = detail::get<std::vector<std::string>>(j, "quotient_vertices", "covering graph");
    for (std::size_t c : cover)
      if (c >= qnames.size()) throw InvalidInput("covering map points past the quotient vertices");
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      if (cover[x] != n) continue;
      for (const auto& row : action)
        if (row.size() == n) cover[row[x]] = qnames.size();
      qnames.push_back(names[x]);
    }
  }
  std::vector<EdgeId> origin(edges.size());
  if (j.contains("edge_origin")) {
    origin = detail::get<std::vector<EdgeId>>(j, "edge_origin", "covering graph");
  } else {
    for (std::size_t e = 0; e < origin.size(); ++e) origin[e] = e;
  }
  return CoveringGraph(grp, SimpleGraph(n, std::move(edges)), std::move(action), names, std::move(cover),
                       std::move(qnames), std::move(origin));
}

inline std::vector<EdgeSubset> partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("a partition is a list of edge-id lists");
  std::vector<EdgeSubset> out;
  for (const auto& part : j) {
    try {
      out.push_back(part.get<EdgeSubset>());
    } catch (const Json::exception&) {
      throw InvalidInput("a partition is a list of edge-id lists");
    }
  }
  return out;
}

inline Json to_json(const MixedCut& cut, const SimpleGraph& g) {
  Json edges = Json::array();
  for (std::size_t e : cut.edges) edges.push_back({g.edges[e].first, g.edges[e].second});
  return {{"W", cut.vertices}, {"F", edges}, {"cost", cut.cost}};
}

inline Json to_json(const KBlock& b, const GainGraph& g) {
  std::vector<std::string> hv, u;
  for (VertexId v : b.h.vertices) hv.push_back(g.vertex_name(v));
  for (VertexId v : b.removed_vertices) u.push_back(g.vertex_name(v));
  return {{"k", b.k},
          {"H", {{"vertices", hv}, {"edges", b.h.edges}}},
          {"U", u},
          {"D", b.removed_edges},
          {"vertex_trace_sizes", b.vertex_trace_sizes},
          {"edge_trace_sizes", b.edge_trace_sizes},
          {"group_order", b.group_order}};
}

inline Json to_json(const RankResult& r) {
  Json out = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}, {"basis", r.basis},
              {"partition", r.partition}, {"undecided", r.undecided}};
  if (!r.candidate_values.empty()) out["candidate_values"] = r.candidate_values;
  return out;
}

}  // namespace symrig::io
