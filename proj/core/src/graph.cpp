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

#include "vgame/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>

#include <fmt/format.h>

namespace vgame {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError(fmt::format("edge ({}, {}): vertex id out of range 0..{}",
                                   u, v, vertex_count == 0 ? 0 : vertex_count - 1));
    }
    if (u == v) throw InputError(fmt::format("edge ({}, {}): self-loop", u, v));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError(
        fmt::format("edge ({}, {}): duplicate edge", dup->first, dup->second));
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool is_connected(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : graph.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

GameInstance build_instance(std::size_t n, std::span<const Edge> edges,
                            std::optional<std::vector<std::int64_t>> weights,
                            std::optional<std::vector<Vertex>> facilities,
                            std::size_t k) {
  if (n == 0) throw InputError("n: graph must have at least one vertex");
  if (k == 0) throw InputError("k: need at least one player");
  if (k >= n) {
    throw InputError(fmt::format("k: player count {} must be < n = {}", k, n));
  }

  GameInstance instance;
  instance.graph_ = Graph(n, edges);
  instance.players_ = k;

  if (weights) {
    if (weights->size() != n) {
      throw InputError(fmt::format("weights: length {} != n = {}",
                                   weights->size(), n));
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((*weights)[v] < 1) {
        throw InputError(fmt::format(
            "weights[{}]: weight {} must be a positive integer", v,
            (*weights)[v]));
      }
    }
    instance.weights_ = std::move(*weights);
  } else {
    instance.weights_.assign(n, 1);
  }
  for (auto w : instance.weights_) {
    if (instance.total_weight_ > std::numeric_limits<std::int64_t>::max() - w) {
      throw InputError("weights: total weight overflows 64 bits");
    }
    instance.total_weight_ += w;
  }

  instance.facility_mask_.assign(n, false);
  if (facilities) {
    if (facilities->empty()) throw InputError("facilities: set is empty");
    for (Vertex v : *facilities) {
      if (v >= n) {
        throw InputError(
            fmt::format("facilities: vertex {} out of range 0..{}", v, n - 1));
      }
      if (instance.facility_mask_[v]) {
        throw InputError(fmt::format("facilities: vertex {} listed twice", v));
      }
      instance.facility_mask_[v] = true;
    }
    instance.facilities_ = std::move(*facilities);
    std::sort(instance.facilities_.begin(), instance.facilities_.end());
  } else {
    instance.facilities_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      instance.facilities_[v] = static_cast<Vertex>(v);
      instance.facility_mask_[v] = true;
    }
  }

  instance.standard_ =
      instance.facilities_.size() == n &&
      std::all_of(instance.weights_.begin(), instance.weights_.end(),
                  [](std::int64_t w) { return w == 1; });
  return instance;
}

GameInstance cycle_instance(std::size_t n, std::size_t k) {
  if (n < 3) throw InputError(fmt::format("cycle: n = {} must be >= 3", n));
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return build_instance(n, edges, std::nullopt, std::nullopt, k);
}

GameInstance random_connected_instance(std::size_t n, std::size_t k,
                                       std::uint64_t seed) {
  if (n < 2) throw InputError(fmt::format("random instance: n = {} < 2", n));
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[draw(i + 1)]);

  std::set<Edge> edges;
  auto add = [&](Vertex u, Vertex v) { edges.insert(std::minmax(u, v)); };
  for (std::size_t i = 1; i < n; ++i) add(order[i], order[draw(i)]);
  const std::size_t extra = draw(n + 1);
  for (std::size_t e = 0; e < extra; ++e) {
    const auto u = static_cast<Vertex>(draw(n));
    const auto v = static_cast<Vertex>(draw(n - 1));
    add(u, v >= u ? v + 1 : v);
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return build_instance(n, list, std::nullopt, std::nullopt, k);
}

DistanceMatrix::DistanceMatrix(const Graph& graph)
    : n_(graph.vertex_count()), table_(n_ * n_, Distance::infinite()) {
  std::vector<Vertex> queue;
  queue.reserve(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    Distance* row = table_.data() + s * n_;
    row[s] = Distance(0);
    queue.clear();
    queue.push_back(static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      const std::uint32_t next = row[u].value() + 1;
      for (Vertex w : graph.neighbors(u)) {
        if (!row[w].is_finite()) {
          row[w] = Distance(next);
          queue.push_back(w);
        }
      }
    }
  }
}

}  // namespace vgame
