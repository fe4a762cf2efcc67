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

#include "vgame/structure.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace vgame {

bool is_star(const Graph& graph, std::span<const Vertex> members) {
  if (members.size() < 2) return false;
  for (Vertex c : members) {
    bool all = std::all_of(members.begin(), members.end(), [&](Vertex v) {
      return v == c || graph.has_edge(c, v);
    });
    if (all) return true;
  }
  return false;
}

std::vector<Star> star_partition(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n < 2) throw InputError("star partition: need at least two vertices");
  if (!is_connected(graph)) {
    throw InputError("star partition: graph is not connected");
  }

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::size_t remaining = n;

  auto live_neighbor = [&](Vertex u) {
    for (Vertex w : graph.neighbors(u)) {
      if (alive[w]) return w;
    }
    throw std::logic_error("star partition: vertex without live neighbor");
  };

  std::vector<Star> stars;
  while (remaining > 0) {
    std::optional<Edge> chosen;
    Vertex center = 0;
    for (Vertex u = 0; u < n && !chosen; ++u) {
      if (alive[u] && degree[u] == 1) {
        Vertex v = live_neighbor(u);
        chosen = Edge{u, v};
        center = v;
      }
    }
    for (auto [u, v] : graph.edges()) {
      if (chosen) break;
      if (alive[u] && alive[v]) {
        chosen = Edge{u, v};
        center = u;
      }
    }
    if (!chosen) {
      throw std::logic_error("star partition: isolated vertex in residual graph");
    }
    auto [u, v] = *chosen;

    Star star;
    star.center = center;
    star.members = {u, v};
    for (Vertex w = 0; w < n; ++w) {
      if (!alive[w] || w == u || w == v) continue;
      bool absorbed = std::all_of(
          graph.neighbors(w).begin(), graph.neighbors(w).end(),
          [&](Vertex x) { return !alive[x] || x == u || x == v; });
      if (absorbed) star.members.push_back(w);
    }
    std::sort(star.members.begin(), star.members.end());

    for (Vertex m : star.members) {
      alive[m] = false;
      --remaining;
      for (Vertex x : graph.neighbors(m)) --degree[x];
    }
    stars.push_back(std::move(star));
  }
  return stars;
}

std::vector<std::string> audit_star_partition(const Graph& graph,
                                              std::span<const Star> stars) {
  std::vector<std::string> problems;
  const std::size_t n = graph.vertex_count();
  std::vector<int> owner(n, -1);
  for (std::size_t s = 0; s < stars.size(); ++s) {
    const Star& star = stars[s];
    if (star.members.size() < 2) {
      problems.push_back(fmt::format("star {}: fewer than two members", s));
    }
    if (std::find(star.members.begin(), star.members.end(), star.center) ==
        star.members.end()) {
      problems.push_back(fmt::format("star {}: center {} not a member", s,
                                     star.center));
    }
    for (Vertex v : star.members) {
      if (v >= n) {
        problems.push_back(fmt::format("star {}: vertex {} out of range", s, v));
        continue;
      }
      if (owner[v] >= 0) {
        problems.push_back(
            fmt::format("vertex {} in stars {} and {}", v, owner[v], s));
      }
      owner[v] = static_cast<int>(s);
      if (v != star.center && !graph.has_edge(star.center, v)) {
        problems.push_back(fmt::format("star {}: {} not adjacent to center {}",
                                       s, v, star.center));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] < 0) problems.push_back(fmt::format("vertex {} uncovered", v));
  }
  if (!problems.empty()) return problems;

  // Residual invariant: removing stars in order never strands a vertex.
  std::vector<bool> alive(n, true);
  for (std::size_t s = 0; s < stars.size(); ++s) {
    for (Vertex v : stars[s].members) alive[v] = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      auto nb = graph.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex x) { return alive[x]; })) {
        problems.push_back(fmt::format(
            "vertex {} isolated after removing star {}", v, s));
      }
    }
  }
  return problems;
}

ExtendedRational restricted_cost(const Game& game,
                                 std::span<const Rational> weights,
                                 std::span<const Vertex> profile) {
  validate_profile(game, profile);
  const std::size_t n = game.vertex_count();
  if (weights.size() != n) {
    throw InputError(fmt::format("restricted cost: {} weights for {} vertices",
                                 weights.size(), n));
  }
  const auto& dist = game.distances();
  Rational total(0);
  for (Vertex v = 0; v < n; ++v) {
    if (weights[v] < Rational(0) || weights[v] > Rational(1)) {
      throw InputError(fmt::format("restricted cost: W[{}] = {} outside [0, 1]",
                                   v, to_string(weights[v])));
    }
    if (weights[v] == Rational(0)) continue;
    Distance best = Distance::infinite();
    for (Vertex f : profile) best = std::min(best, dist(v, f));
    if (!best.is_finite()) return ExtendedRational::infinite();
    total += weights[v] * static_cast<std::int64_t>(best.value());
  }
  return total;
}

Rational restricted_cost_floor(std::size_t players, std::uint32_t radius) {
  const auto r = static_cast<std::int64_t>(radius);
  return Rational(r * (r - 1), 2 * static_cast<std::int64_t>(players));
}

bool CloseLemmaReport::all_ok() const {
  return std::all_of(stars.begin(), stars.end(), [](const StarProximity& s) {
    return s.proximity_ok && s.cost_bound_ok && s.cost_floor_ok;
  });
}

CloseLemmaReport verify_close_lemma(const Game& game,
                                    std::span<const Vertex> equilibrium,
                                    std::span<const Vertex> other) {
  const auto& inst = game.instance();
  if (!inst.is_standard() || !is_connected(inst)) {
    throw InputError("close lemma: needs a connected standard game");
  }
  if (inst.player_count() < 2) {
    throw InputError("close lemma: needs at least two players");
  }
  if (!is_nash(game, equilibrium, GameMode::shared) ||
      !is_nash(game, other, GameMode::shared)) {
    throw InputError("close lemma: both profiles must be equilibria");
  }

  const std::size_t n = game.vertex_count();
  const std::size_t k = equilibrium.size();
  const auto& dist = game.distances();
  auto part = voronoi_partition(game, equilibrium, GameMode::shared);
  std::vector<std::uint32_t> radii(k);
  for (std::size_t i = 0; i < k; ++i) {
    radii[i] = cell_radius(game, equilibrium, i);
  }

  CloseLemmaReport report;
  for (Star& star : star_partition(delaunay_graph(game, equilibrium))) {
    StarProximity check;
    for (Vertex i : star.members) check.radius = std::max(check.radius, radii[i]);
    const std::uint32_t bound = 6 * check.radius;

    for (std::size_t j = 0; j < other.size(); ++j) {
      std::uint32_t farthest = 0;
      for (Vertex i : star.members) {
        farthest = std::max(farthest, dist(equilibrium[i], other[j]).value());
      }
      if (!check.witness || farthest < check.witness_distance) {
        check.witness = j;
        check.witness_distance = farthest;
      }
    }
    check.proximity_ok = check.witness_distance <= bound;
    if (!check.proximity_ok) check.witness.reset();

    std::vector<Rational> mass(n, Rational(0));
    for (Vertex i : star.members) {
      for (Vertex v = 0; v < n; ++v) mass[v] += part.share(i, v);
    }
    check.mass = std::accumulate(mass.begin(), mass.end(), Rational(0));
    check.cost_before = restricted_cost(game, mass, equilibrium);
    check.cost_after = restricted_cost(game, mass, other);
    check.cost_bound_ok =
        check.cost_before.is_finite() && check.cost_after.is_finite() &&
        check.cost_after.value() <=
            check.cost_before.value() +
                check.mass * static_cast<std::int64_t>(bound);
    check.cost_floor_ok =
        check.cost_before.is_finite() &&
        check.cost_before.value() >= restricted_cost_floor(k, check.radius);
    check.star = std::move(star);
    report.stars.push_back(std::move(check));
  }
  return report;
}

}  // namespace vgame
