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

// Bundled example graphs. The directory is taken from SYMRIG_FIXTURE_DIR when
// set, otherwise from the path compiled in as SYMRIG_DEFAULT_FIXTURE_DIR.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/io.hpp"

#ifndef SYMRIG_DEFAULT_FIXTURE_DIR
#define SYMRIG_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace symrig::fixtures {

struct Fixture {
  std::string name;
  std::string description;
  GainGraph graph;
  std::map<std::string, std::vector<EdgeSubset>> partitions;
  io::Json expected;

  long expected_int(const std::string& key) const { return value(key).get<long>(); }
  bool expected_bool(const std::string& key) const { return value(key).get<bool>(); }

 private:
  const io::Json& value(const std::string& key) const {
    if (!expected.contains(key)) throw InvalidInput("fixture " + name + " has no expected value '" + key + "'");
    const io::Json& v = expected.at(key);
    return v.is_object() ? v.at("value") : v;
  }
};

inline std::string fixture_dir() {
  if (const char* env = std::getenv("SYMRIG_FIXTURE_DIR"); env && *env) return env;
  return SYMRIG_DEFAULT_FIXTURE_DIR;
}

inline const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names{"fig1b", "fig2a", "fig2b", "fig3", "fig4"};
  return names;
}

/// Loads a bundled fixture by name, or any fixture file by path.
inline Fixture load(const std::string& name_or_path) {
  std::filesystem::path path(name_or_path);
  if (!std::filesystem::exists(path)) path = std::filesystem::path(fixture_dir()) / (name_or_path + ".json");
  const io::Json j = io::read_json_file(path.string());
  Fixture f{j.value("name", path.stem().string()), j.value("description", ""), io::gain_graph_from_json(j), {},
            j.value("expected", io::Json::object())};
  if (j.contains("partitions"))
    for (const auto& [key, parts] : j.at("partitions").items()) f.partitions[key] = io::partition_from_json(parts);
  return f;
}

}  // namespace symrig::fixtures
