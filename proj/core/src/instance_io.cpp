// Copyright 2026 The vgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgame/instance_io.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <fmt/format.h>

#include "json.hpp"

namespace vgame {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::array kKnownKeys = {"n",    "edges",       "weights",
                                   "facilities", "k", "name",
                                   "certificate", "profiles"};

std::int64_t require_integer(const json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw InputError(fmt::format("field '{}': expected an integer, got {}",
                                 field, value.dump()));
  }
  return value.get<std::int64_t>();
}

Vertex require_vertex(const json& value, const std::string& field) {
  auto v = require_integer(value, field);
  if (v < 0 || v > std::numeric_limits<std::int32_t>::max()) {
    throw InputError(fmt::format("field '{}': vertex id {} out of range",
                                 field, v));
  }
  return static_cast<Vertex>(v);
}

const json& require_array(const json& doc, const char* field) {
  const json& value = doc.at(field);
  if (!value.is_array()) {
    throw InputError(fmt::format("field '{}': expected an array", field));
  }
  return value;
}

}  // namespace

GameInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" in what().
    throw InputError(fmt::format("instance JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw InputError("instance JSON: expected an object");

  for (const auto& [key, _] : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) ==
        kKnownKeys.end()) {
      throw InputError(fmt::format("instance JSON: unknown field '{}'", key));
    }
  }
  for (const char* field : {"n", "edges", "k"}) {
    if (!doc.contains(field)) {
      throw InputError(fmt::format("instance JSON: missing field '{}'", field));
    }
  }

  auto n = require_integer(doc["n"], "n");
  auto k = require_integer(doc["k"], "k");
  if (n < 1) throw InputError("field 'n': must be positive");
  if (k < 1) throw InputError("field 'k': must be positive");

  std::vector<Edge> edges;
  const json& edge_list = require_array(doc, "edges");
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const json& e = edge_list[i];
    auto field = fmt::format("edges[{}]", i);
    if (!e.is_array() || e.size() != 2) {
      throw InputError(fmt::format("field '{}': expected a pair [u, v]", field));
    }
    edges.emplace_back(require_vertex(e[0], field), require_vertex(e[1], field));
  }

  std::optional<std::vector<std::int64_t>> weights;
  if (doc.contains("weights")) {
    const json& list = require_array(doc, "weights");
    weights.emplace();
    for (std::size_t i = 0; i < list.size(); ++i) {
      weights->push_back(require_integer(list[i], fmt::format("weights[{}]", i)));
    }
  }

  std::optional<std::vector<Vertex>> facilities;
  if (doc.contains("facilities")) {
    const json& list = require_array(doc, "facilities");
    facilities.emplace();
    for (std::size_t i = 0; i < list.size(); ++i) {
      facilities->push_back(
          require_vertex(list[i], fmt::format("facilities[{}]", i)));
    }
  }

  return build_instance(static_cast<std::size_t>(n), edges, std::move(weights),
                        std::move(facilities), static_cast<std::size_t>(k));
}

std::string serialize_instance(const GameInstance& instance) {
  ordered_json doc;
  doc["n"] = instance.vertex_count();
  json edges = json::array();
  for (auto [u, v] : instance.graph().edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  const auto& w = instance.weights();
  if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x != 1; })) {
    doc["weights"] = w;
  }
  if (instance.facilities().size() != instance.vertex_count()) {
    doc["facilities"] = instance.facilities();
  }
  doc["k"] = instance.player_count();
  return doc.dump();
}

std::string export_dot(const GameInstance& instance,
                       std::optional<std::span<const Vertex>> profile) {
  const std::size_t n = instance.vertex_count();
  std::map<Vertex, std::vector<std::size_t>> occupants;
  if (profile) {
    if (profile->size() != instance.player_count()) {
      throw InputError(fmt::format("profile: {} entries for k = {} players",
                                   profile->size(), instance.player_count()));
    }
    for (std::size_t i = 0; i < profile->size(); ++i) {
      Vertex v = (*profile)[i];
      if (v >= n || !instance.is_facility(v)) {
        throw InputError(
            fmt::format("profile[{}]: vertex {} is not a facility", i, v));
      }
      occupants[v].push_back(i);
    }
  }

  std::string out = "graph G {\n";
  for (Vertex v = 0; v < n; ++v) {
    std::string label = std::to_string(v);
    if (instance.weight(v) != 1) label += fmt::format("\\nw={}", instance.weight(v));
    std::string attrs = fmt::format("shape={}", instance.is_facility(v) ? "circle" : "box");
    if (auto it = occupants.find(v); it != occupants.end()) {
      std::string players;
      for (std::size_t i : it->second) {
        players += (players.empty() ? "" : ",") + fmt::format("P{}", i);
      }
      label += "\\n" + players;
      attrs += ", style=filled, fillcolor=lightgray";
      if (it->second.size() > 1) {
        attrs += fmt::format(", peripheries=2, xlabel=\"x{}\"", it->second.size());
      }
    }
    out += fmt::format("  {} [label=\"{}\", {}];\n", v, label, attrs);
  }
  for (auto [u, v] : instance.graph().edges()) {
    out += fmt::format("  {} -- {};\n", u, v);
  }
  out += "}\n";
  return out;
}

}  // namespace vgame
