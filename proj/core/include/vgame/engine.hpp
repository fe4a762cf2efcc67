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

#ifndef VGAME_ENGINE_HPP_
#define VGAME_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vgame/graph.hpp"
#include "vgame/types.hpp"

namespace vgame {

// Shared: co-located players split their customers. Disjoint: co-located
// players all receive zero.
enum class GameMode { shared, disjoint };

std::string_view to_string(GameMode mode);
GameMode parse_game_mode(std::string_view text);

// Player-indexed facility choices (player i sits on profile[i]).
using StrategyProfile = std::vector<Vertex>;
using PayoffVector = std::vector<Rational>;

// An instance together with its distance table. Immutable; share freely
// across threads.
class Game {
 public:
  explicit Game(GameInstance instance);

  const GameInstance& instance() const { return instance_; }
  const DistanceMatrix& distances() const { return distances_; }
  std::size_t vertex_count() const { return instance_.vertex_count(); }
  std::size_t player_count() const { return instance_.player_count(); }

  // Common denominator of every payoff: lcm(1..k). Payoffs are exact
  // integers once multiplied by it.
  std::int64_t payoff_scale() const { return scale_; }

 private:
  GameInstance instance_;
  DistanceMatrix distances_;
  std::int64_t scale_ = 1;
};

// Throws InputError unless the profile has k entries, all in U.
void validate_profile(const Game& game, std::span<const Vertex> profile);

// The generalized partition F. Customers no facility can reach are assigned
// to nobody (their column is zero). In disjoint mode the rows of co-located
// players are zero.
struct VoronoiPartition {
  std::size_t players = 0;
  std::size_t vertices = 0;
  std::vector<Rational> shares;            // row-major players x vertices
  std::vector<Distance> customer_distance;  // d(v, f)

  const Rational& share(std::size_t player, Vertex v) const {
    return shares[player * vertices + v];
  }
  Rational column_sum(Vertex v) const;
  Rational row_sum(std::size_t player) const;
};

VoronoiPartition voronoi_partition(const Game& game,
                                   std::span<const Vertex> profile,
                                   GameMode mode);

// p_i = sum_v w(v) F_{i,v}.
PayoffVector payoffs(const Game& game, std::span<const Vertex> profile,
                     GameMode mode);

// sum_v w(v) d(v, f); infinite when a customer is unreachable.
Cost social_cost(const Game& game, std::span<const Vertex> profile);

struct BestResponse {
  std::vector<Vertex> vertices;  // every maximizing facility, ascending
  Rational value;
};

// Ties are returned in full; callers pick their own tie-break.
BestResponse best_responses(const Game& game, std::span<const Vertex> profile,
                            std::size_t player, GameMode mode);

bool is_happy(const Game& game, std::span<const Vertex> profile,
              std::size_t player, GameMode mode);
bool is_nash(const Game& game, std::span<const Vertex> profile, GameMode mode);

// Player graph H_f: i ~ j when their cells share a customer or contain the
// two ends of an edge. Shared-mode cells.
Graph delaunay_graph(const Game& game, std::span<const Vertex> profile);

// max d(v, f_i) over customers with F_{i,v} > 0. Throws InputError when the
// cell is empty (a co-located player in disjoint mode).
std::uint32_t cell_radius(const Game& game, std::span<const Vertex> profile,
                          std::size_t player,
                          GameMode mode = GameMode::shared);

// Integer payoff kernel for the exhaustive searches. Every value is a payoff
// multiplied by Game::payoff_scale(). Stateless; safe to share.
class PayoffKernel {
 public:
  PayoffKernel(const Game& game, GameMode mode);

  const Game& game() const { return *game_; }
  GameMode mode() const { return mode_; }
  std::int64_t scale() const { return game_->payoff_scale(); }

  void payoffs(std::span<const Vertex> profile,
               std::span<std::int64_t> out) const;

  // out[idx]: what `player` would earn on facilities()[idx], others fixed.
  void deviations(std::span<const Vertex> profile, std::size_t player,
                  std::span<std::int64_t> out) const;

  // Checks one player per distinct occupied vertex; co-located players have
  // the same deviation set and payoff.
  bool is_nash(std::span<const Vertex> profile) const;

  Rational to_rational(std::int64_t scaled) const {
    return Rational(scaled, scale());
  }

 private:
  const Game* game_;
  GameMode mode_;
};

}  // namespace vgame

#endif  // VGAME_ENGINE_HPP_
