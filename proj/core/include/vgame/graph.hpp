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

#ifndef VGAME_GRAPH_HPP_
#define VGAME_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vgame/types.hpp"

namespace vgame {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v) and sorted; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

bool is_connected(const Graph& graph);

// The generalized game <G, U, w, k>. Standard games have unit weights and
// U = V. Immutable once built.
class GameInstance {
 public:
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t player_count() const { return players_; }
  const Graph& graph() const { return graph_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t weight(Vertex v) const { return weights_[v]; }
  std::int64_t total_weight() const { return total_weight_; }

  // Allowed strategies, sorted ascending.
  const std::vector<Vertex>& facilities() const { return facilities_; }
  bool is_facility(Vertex v) const { return facility_mask_[v]; }

  bool is_standard() const { return standard_; }

  friend bool operator==(const GameInstance& a, const GameInstance& b) {
    return a.graph_ == b.graph_ && a.weights_ == b.weights_ &&
           a.facilities_ == b.facilities_ && a.players_ == b.players_;
  }

 private:
  friend GameInstance build_instance(std::size_t, std::span<const Edge>,
                                     std::optional<std::vector<std::int64_t>>,
                                     std::optional<std::vector<Vertex>>,
                                     std::size_t);

  Graph graph_;
  std::vector<std::int64_t> weights_;
  std::vector<Vertex> facilities_;
  std::vector<bool> facility_mask_;
  std::size_t players_ = 0;
  std::int64_t total_weight_ = 0;
  bool standard_ = true;
};

// Validates and builds an instance. Weights default to 1, facilities to V.
// Throws InputError for k >= n, k == 0, non-positive weights, bad vertex
// ids, duplicate facilities, or an empty facility set.
GameInstance build_instance(
    std::size_t n, std::span<const Edge> edges,
    std::optional<std::vector<std::int64_t>> weights = std::nullopt,
    std::optional<std::vector<Vertex>> facilities = std::nullopt,
    std::size_t k = 1);

inline bool is_connected(const GameInstance& instance) {
  return is_connected(instance.graph());
}

// Cycle v_0 - v_1 - ... - v_{n-1} - v_0 with the standard game on it.
GameInstance cycle_instance(std::size_t n, std::size_t k);

// Random spanning tree plus up to n extra edges, fully determined by `seed`.
GameInstance random_connected_instance(std::size_t n, std::size_t k,
                                       std::uint64_t seed);

// All-pairs breadth-first distances. Symmetric, zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& graph);

  std::size_t size() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return table_[u * n_ + v]; }

  // Distances from `source` to every vertex.
  std::span<const Distance> row(Vertex source) const {
    return {table_.data() + static_cast<std::size_t>(source) * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> table_;
};

inline DistanceMatrix all_pairs_distances(const GameInstance& instance) {
  return DistanceMatrix(instance.graph());
}

}  // namespace vgame

#endif  // VGAME_GRAPH_HPP_
