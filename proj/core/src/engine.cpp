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

#include "vgame/engine.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace vgame {

std::string_view to_string(GameMode mode) {
  return mode == GameMode::shared ? "shared" : "disjoint";
}

GameMode parse_game_mode(std::string_view text) {
  if (text == "shared") return GameMode::shared;
  if (text == "disjoint") return GameMode::disjoint;
  throw InputError(fmt::format("unknown game mode '{}'", text));
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InputError(fmt::format("{}: exact payoff arithmetic overflows", what));
  }
  return out;
}

bool co_located(std::span<const Vertex> profile, std::size_t player) {
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j != player && profile[j] == profile[player]) return true;
  }
  return false;
}

}  // namespace

Game::Game(GameInstance instance)
    : instance_(std::move(instance)), distances_(instance_.graph()) {
  for (std::size_t m = 2; m <= instance_.player_count(); ++m) {
    auto mm = static_cast<std::int64_t>(m);
    scale_ = checked_mul(scale_ / std::gcd(scale_, mm), mm, "player count");
  }
  checked_mul(scale_, instance_.total_weight(), "total weight");
}

void validate_profile(const Game& game, std::span<const Vertex> profile) {
  const auto& inst = game.instance();
  if (profile.size() != inst.player_count()) {
    throw InputError(fmt::format("profile: {} entries for k = {} players",
                                 profile.size(), inst.player_count()));
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= inst.vertex_count() || !inst.is_facility(profile[i])) {
      throw InputError(fmt::format("profile[{}]: vertex {} is not a facility",
                                   i, profile[i]));
    }
  }
}

Rational VoronoiPartition::column_sum(Vertex v) const {
  Rational sum(0);
  for (std::size_t i = 0; i < players; ++i) sum += share(i, v);
  return sum;
}

Rational VoronoiPartition::row_sum(std::size_t player) const {
  Rational sum(0);
  for (std::size_t v = 0; v < vertices; ++v) sum += shares[player * vertices + v];
  return sum;
}

VoronoiPartition voronoi_partition(const Game& game,
                                   std::span<const Vertex> profile,
                                   GameMode mode) {
  validate_profile(game, profile);
  const std::size_t n = game.vertex_count();
  const std::size_t k = profile.size();
  const auto& dist = game.distances();

  VoronoiPartition part;
  part.players = k;
  part.vertices = n;
  part.shares.assign(k * n, Rational(0));
  part.customer_distance.assign(n, Distance::infinite());

  for (Vertex v = 0; v < n; ++v) {
    Distance best = Distance::infinite();
    for (Vertex f : profile) best = std::min(best, dist(v, f));
    part.customer_distance[v] = best;
    if (!best.is_finite()) continue;
    std::int64_t ties = 0;
    for (Vertex f : profile) ties += dist(v, f) == best;
    for (std::size_t i = 0; i < k; ++i) {
      if (dist(v, profile[i]) == best) {
        part.shares[i * n + v] = Rational(1, ties);
      }
    }
  }
  if (mode == GameMode::disjoint) {
    for (std::size_t i = 0; i < k; ++i) {
      if (co_located(profile, i)) {
        std::fill_n(part.shares.begin() + static_cast<std::ptrdiff_t>(i * n), n,
                    Rational(0));
      }
    }
  }
  return part;
}

PayoffKernel::PayoffKernel(const Game& game, GameMode mode)
    : game_(&game), mode_(mode) {}

void PayoffKernel::payoffs(std::span<const Vertex> profile,
                           std::span<std::int64_t> out) const {
  const auto& inst = game_->instance();
  const auto& dist = game_->distances();
  const std::size_t k = profile.size();
  const std::int64_t scale = game_->payoff_scale();
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), 0);

  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    auto row = dist.row(v);
    Distance best = Distance::infinite();
    std::int64_t ties = 0;
    for (Vertex f : profile) {
      Distance d = row[f];
      if (d < best) {
        best = d;
        ties = 1;
      } else if (d == best) {
        ++ties;
      }
    }
    if (!best.is_finite()) continue;
    const std::int64_t share = inst.weight(v) * (scale / ties);
    for (std::size_t i = 0; i < k; ++i) {
      if (row[profile[i]] == best) out[i] += share;
    }
  }
  if (mode_ == GameMode::disjoint) {
    for (std::size_t i = 0; i < k; ++i) {
      if (co_located(profile, i)) out[i] = 0;
    }
  }
}

void PayoffKernel::deviations(std::span<const Vertex> profile,
                              std::size_t player,
                              std::span<std::int64_t> out) const {
  const auto& inst = game_->instance();
  const auto& dist = game_->distances();
  const std::size_t n = inst.vertex_count();
  const std::int64_t scale = game_->payoff_scale();

  // Nearest distance and tie count among the other players.
  std::vector<Distance> others_best(n, Distance::infinite());
  std::vector<std::int64_t> others_ties(n, 0);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == player) continue;
    auto row = dist.row(profile[j]);
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] < others_best[v]) {
        others_best[v] = row[v];
        others_ties[v] = 1;
      } else if (row[v] == others_best[v]) {
        ++others_ties[v];
      }
    }
  }

  const auto& facilities = inst.facilities();
  for (std::size_t idx = 0; idx < facilities.size(); ++idx) {
    const Vertex u = facilities[idx];
    if (mode_ == GameMode::disjoint) {
      bool taken = false;
      for (std::size_t j = 0; j < profile.size(); ++j) {
        taken |= j != player && profile[j] == u;
      }
      if (taken) {
        out[idx] = 0;
        continue;
      }
    }
    auto row = dist.row(u);
    std::int64_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      const Distance d = row[v];
      if (!d.is_finite() || others_best[v] < d) continue;
      const std::int64_t w = inst.weight(v) * scale;
      total += d < others_best[v] ? w : w / (others_ties[v] + 1);
    }
    out[idx] = total;
  }
}

bool PayoffKernel::is_nash(std::span<const Vertex> profile) const {
  const std::size_t k = profile.size();
  std::vector<std::int64_t> current(k);
  std::vector<std::int64_t> options(game_->instance().facilities().size());
  payoffs(profile, current);
  for (std::size_t i = 0; i < k; ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen |= profile[j] == profile[i];
    if (seen) continue;
    deviations(profile, i, options);
    if (*std::max_element(options.begin(), options.end()) > current[i]) {
      return false;
    }
  }
  return true;
}

PayoffVector payoffs(const Game& game, std::span<const Vertex> profile,
                     GameMode mode) {
  validate_profile(game, profile);
  PayoffKernel kernel(game, mode);
  std::vector<std::int64_t> scaled(profile.size());
  kernel.payoffs(profile, scaled);
  PayoffVector out;
  out.reserve(scaled.size());
  for (auto s : scaled) out.push_back(kernel.to_rational(s));
  return out;
}

Cost social_cost(const Game& game, std::span<const Vertex> profile) {
  validate_profile(game, profile);
  const auto& inst = game.instance();
  const auto& dist = game.distances();
  std::int64_t total = 0;
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    Distance best = Distance::infinite();
    for (Vertex f : profile) best = std::min(best, dist(v, f));
    if (!best.is_finite()) return Cost::infinite();
    total += inst.weight(v) * static_cast<std::int64_t>(best.value());
  }
  return Cost(total);
}

BestResponse best_responses(const Game& game, std::span<const Vertex> profile,
                            std::size_t player, GameMode mode) {
  validate_profile(game, profile);
  if (player >= profile.size()) {
    throw InputError(fmt::format("player {} out of range 0..{}", player,
                                 profile.size() - 1));
  }
  PayoffKernel kernel(game, mode);
  const auto& facilities = game.instance().facilities();
  std::vector<std::int64_t> options(facilities.size());
  kernel.deviations(profile, player, options);
  const std::int64_t best = *std::max_element(options.begin(), options.end());
  BestResponse out;
  out.value = kernel.to_rational(best);
  for (std::size_t idx = 0; idx < facilities.size(); ++idx) {
    if (options[idx] == best) out.vertices.push_back(facilities[idx]);
  }
  return out;
}

bool is_happy(const Game& game, std::span<const Vertex> profile,
              std::size_t player, GameMode mode) {
  auto current = payoffs(game, profile, mode);
  return best_responses(game, profile, player, mode).value == current[player];
}

bool is_nash(const Game& game, std::span<const Vertex> profile, GameMode mode) {
  validate_profile(game, profile);
  return PayoffKernel(game, mode).is_nash(profile);
}

Graph delaunay_graph(const Game& game, std::span<const Vertex> profile) {
  auto part = voronoi_partition(game, profile, GameMode::shared);
  const std::size_t k = profile.size();
  const std::size_t n = game.vertex_count();

  std::vector<std::vector<std::size_t>> owners(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      if (part.share(i, v) > 0) owners[v].push_back(i);
    }
  }
  std::vector<bool> linked(k * k, false);
  auto link = [&](std::size_t i, std::size_t j) {
    if (i != j) linked[std::min(i, j) * k + std::max(i, j)] = true;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i : owners[v]) {
      for (std::size_t j : owners[v]) link(i, j);
    }
  }
  for (auto [v, w] : game.instance().graph().edges()) {
    for (std::size_t i : owners[v]) {
      for (std::size_t j : owners[w]) link(i, j);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (linked[i * k + j]) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(k, edges);
}

std::uint32_t cell_radius(const Game& game, std::span<const Vertex> profile,
                          std::size_t player, GameMode mode) {
  auto part = voronoi_partition(game, profile, mode);
  if (player >= profile.size()) {
    throw InputError(fmt::format("player {} out of range", player));
  }
  std::optional<std::uint32_t> radius;
  for (Vertex v = 0; v < game.vertex_count(); ++v) {
    if (part.share(player, v) > Rational(0)) {
      auto d = game.distances()(v, profile[player]).value();
      radius = std::max(radius.value_or(0), d);
    }
  }
  if (!radius) {
    throw InputError(fmt::format("player {} has an empty Voronoi cell", player));
  }
  return *radius;
}

}  // namespace vgame
