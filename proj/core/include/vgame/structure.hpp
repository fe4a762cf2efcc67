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

#ifndef VGAME_STRUCTURE_HPP_
#define VGAME_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgame/engine.hpp"
#include "vgame/graph.hpp"

namespace vgame {

// A vertex set of size >= 2 whose center is adjacent to every other member.
struct Star {
  std::vector<Vertex> members;  // ascending
  Vertex center = 0;

  friend bool operator==(const Star&, const Star&) = default;
};

bool is_star(const Graph& graph, std::span<const Vertex> members);

// Greedy star partition of a connected graph with at least two vertices.
//
// Each round picks the pendant edge (u, v) with the smallest pendant u, or
// the lexicographically smallest edge when no pendant exists, and takes
// {u, v} plus every remaining w whose remaining neighbors all lie in
// {u, v}. Throws InputError for disconnected or single-vertex graphs.
std::vector<Star> star_partition(const Graph& graph);

// Postcondition audit: disjoint, covering, each part a star with a valid
// center, and no isolated vertex left behind after removing the parts in
// order. Returns one message per problem; empty means valid.
std::vector<std::string> audit_star_partition(const Graph& graph,
                                              std::span<const Star> stars);

// cost_W(f) = sum_v W_v d(v, f). Infinite when some v with W_v > 0 is
// unreachable. Throws InputError if W is not in [0, 1]^n.
ExtendedRational restricted_cost(const Game& game,
                                 std::span<const Rational> weights,
                                 std::span<const Vertex> profile);

// (1/k) r (r - 1) / 2, the floor under cost_W(f) for a star whose largest
// cell radius is r.
Rational restricted_cost_floor(std::size_t players, std::uint32_t radius);

struct StarProximity {
  Star star;                          // over player indices of f
  std::uint32_t radius = 0;           // largest cell radius in the star
  std::optional<std::size_t> witness;  // j with max_i d(f_i, f'_j) <= 6r
  std::uint32_t witness_distance = 0;  // that max, for the closest j
  Rational mass;                      // |W|
  ExtendedRational cost_before;       // cost_W(f)
  ExtendedRational cost_after;        // cost_W(f')
  bool proximity_ok = false;
  bool cost_bound_ok = false;   // cost_W(f') <= cost_W(f) + 6r |W|
  bool cost_floor_ok = false;   // cost_W(f) >= (1/k) r (r-1) / 2
};

struct CloseLemmaReport {
  std::vector<StarProximity> stars;
  bool all_ok() const;
};

// For equilibria f and f' of a connected standard game, partitions H_f into
// stars and checks each star against f'. Throws InputError if either
// profile is not a shared-mode equilibrium or the game is not connected
// and standard.
CloseLemmaReport verify_close_lemma(const Game& game,
                                    std::span<const Vertex> equilibrium,
                                    std::span<const Vertex> other);

}  // namespace vgame

#endif  // VGAME_STRUCTURE_HPP_
