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


#include "vgame/reductions.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "vgame/instance_io.hpp"

namespace vgame {

namespace {

using Triplet = std::array<std::size_t, 3>;

std::vector<Triplet> all_triplets(std::size_t count) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      for (std::size_t l = j + 1; l < count; ++l) out.push_back({i, j, l});
    }
  }
  return out;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

Graph random_candidate(std::uint64_t seed, std::uint64_t index) {
  constexpr std::size_t kN = 9;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::array<Vertex, kN> perm;
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = kN - 1; i > 0; --i) {
    std::swap(perm[i], perm[draw(rng, i + 1)]);
  }
  std::set<Edge> edges;
  auto add = [&](Vertex u, Vertex v) { edges.insert(std::minmax(u, v)); };
  for (std::size_t i = 1; i < kN; ++i) add(perm[i], perm[draw(rng, i)]);
  const auto extra = draw(rng, 13);
  for (std::uint64_t e = 0; e < extra; ++e) {
    const auto u = static_cast<Vertex>(draw(rng, kN));
    const auto v = static_cast<Vertex>(draw(rng, kN - 1));
    add(u, v >= u ? v + 1 : v);
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(kN, list);
}

}  // namespace

GameInstance expand_generalized(const GameInstance& instance) {
  const std::size_t n = instance.vertex_count();
  const std::size_t k = instance.player_count();
  const auto a = static_cast<std::size_t>(instance.total_weight());
  std::vector<Edge> edges = instance.graph().edges();
  auto next = static_cast<Vertex>(n);
  for (Vertex u = 0; u < n; ++u) {
    for (std::int64_t copy = 1; copy < instance.weight(u); ++copy) {
      edges.emplace_back(u, next++);
    }
  }
  const std::size_t hub_count = k * (a + 1);
  for (std::size_t h = 0; h < hub_count; ++h, ++next) {
    for (Vertex u : instance.facilities()) edges.emplace_back(u, next);
  }
  return build_instance(next, edges, std::nullopt, std::nullopt, k);
}

void ThreePartitionInstance::validate() const {
  if (m < 2) throw InputError(fmt::format("3-partition: m = {} must be >= 2", m));
  if (a.size() != 3 * m) {
    throw InputError(fmt::format("3-partition: {} values for m = {} (need {})",
                                 a.size(), m, 3 * m));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(4 * a[i] > bound && 2 * a[i] < bound)) {
      throw InputError(fmt::format(
          "3-partition: a[{}] = {} not strictly between B/4 and B/2 (B = {})",
          i, a[i], bound));
    }
    sum += a[i];
  }
  if (sum != static_cast<std::int64_t>(m) * bound) {
    throw InputError(fmt::format("3-partition: sum {} != m * B = {}", sum,
                                 static_cast<std::int64_t>(m) * bound));
  }
}

std::optional<std::vector<Triplet>> three_partition_oracle(
    const ThreePartitionInstance& instance) {
  instance.validate();
  const std::size_t count = instance.a.size();
  std::vector<bool> used(count, false);
  std::vector<Triplet> groups;

  // The lowest unused index always opens the next group.
  auto search = [&](auto&& self) -> bool {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) return true;
    const auto i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < count; ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (std::size_t l = j + 1; l < count; ++l) {
        if (used[l] ||
            instance.a[i] + instance.a[j] + instance.a[l] != instance.bound) {
          continue;
        }
        used[l] = true;
        groups.push_back({i, j, l});
        if (self(self)) return true;
        groups.pop_back();
        used[l] = false;
      }
      used[j] = false;
    }
    used[i] = false;
    return false;
  };
  if (search(search)) return groups;
  return std::nullopt;
}

ReductionConstants ReductionConstants::compute(
    const ThreePartitionInstance& instance) {
  instance.validate();
  const auto n3 = static_cast<std::int64_t>(3 * instance.m);
  const auto m = static_cast<std::int64_t>(instance.m);
  ReductionConstants out;
  out.c = n3 * (n3 - 1) * (n3 - 2) / 6 + 1;
  // (Bc - c + c/m) / 5 = ((B - 1) c m + c) / (5m)
  out.d = floor_div((instance.bound - 1) * out.c * m + out.c, 5 * m) + 1;
  return out;
}

std::vector<InequalityCheck> check_constant_inequalities(
    const ThreePartitionInstance& instance,
    const ReductionConstants& constants) {
  const Rational B(instance.bound);
  const Rational c(constants.c);
  const Rational d(constants.d);
  const Rational m(static_cast<std::int64_t>(instance.m));
  const Rational Bc = B * c;
  std::vector<InequalityCheck> out = {
      {"Bc - c + c/m < 5d", Bc - c + c / m, 5 * d},
      {"5d < Bc + c/m", 5 * d, Bc + c / m},
      {"(3/2)Bc + c/m < 9d", Rational(3, 2) * Bc + c / m, 9 * d},
      {"3d < (3/4)Bc + c/m", 3 * d, Rational(3, 4) * Bc + c / m},
      {"(3/4)Bc + c/(m+1) < 9d", Rational(3, 4) * Bc + c / (m + 1), 9 * d},
  };
  for (auto& check : out) check.holds = check.lhs < check.rhs;
  return out;
}

std::optional<Gadget> verify_gadget(const Graph& graph) {
  if (graph.vertex_count() != 9 || !is_connected(graph)) return std::nullopt;
  Game game(build_instance(9, graph.edges(), std::nullopt, std::nullopt, 2));
  Gadget gadget;
  gadget.graph = graph;
  std::optional<Vertex> anchor;
  for (Vertex p = 0; p < 9; ++p) {
    const StrategyProfile profile{p, p};
    Rational best = best_responses(game, profile, 1, GameMode::shared).value;
    if (best < Rational(5)) return std::nullopt;
    if (best == Rational(5) && !anchor) anchor = p;
    gadget.best.push_back(best);
  }
  if (!anchor) return std::nullopt;
  if (nash_exists(game, GameMode::shared)) return std::nullopt;
  gadget.anchor = *anchor;
  return gadget;
}

std::optional<GadgetSearchResult> gadget_search(std::uint64_t seed,
                                                std::uint64_t budget,
                                                std::size_t threads) {
  constexpr std::uint64_t kBlock = 4096;
  threads = std::max<std::size_t>(threads, 1);
  for (std::uint64_t start = 0; start < budget; start += kBlock) {
    const std::uint64_t end = std::min(budget, start + kBlock);
    std::atomic<std::uint64_t> winner = end;
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t t = lo; t < hi && t < winner; ++t) {
        if (verify_gadget(random_candidate(seed, t))) {
          std::uint64_t current = winner;
          while (t < current && !winner.compare_exchange_weak(current, t)) {
          }
          return;
        }
      }
    };
    if (threads == 1) {
      work(start, end);
    } else {
      std::vector<std::jthread> pool;
      const std::uint64_t chunk = (end - start + threads - 1) / threads;
      for (std::uint64_t lo = start; lo < end; lo += chunk) {
        pool.emplace_back(work, lo, std::min(end, lo + chunk));
      }
    }
    if (winner < end) {
      GadgetSearchResult result;
      result.gadget = *verify_gadget(random_candidate(seed, winner));
      result.seed = seed;
      result.budget = budget;
      result.candidate = winner;
      return result;
    }
  }
  return std::nullopt;
}

std::string gadget_to_json(const GadgetSearchResult& result) {
  nlohmann::ordered_json doc;
  doc["name"] = "gadget9";
  doc["n"] = 9;
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : result.gadget.graph.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  doc["k"] = 2;
  nlohmann::ordered_json cert;
  cert["predicate"] = kGadgetPredicate;
  cert["verified"] = true;
  cert["seed"] = result.seed;
  cert["budget"] = result.budget;
  cert["candidate"] = result.candidate;
  cert["anchor"] = result.gadget.anchor;
  auto best = nlohmann::ordered_json::array();
  for (const auto& b : result.gadget.best) best.push_back(to_string(b));
  cert["best"] = best;
  doc["certificate"] = cert;
  return doc.dump();
}

Gadget load_gadget(std::string_view json_text) {
  GameInstance instance = parse_instance(json_text);
  auto doc = nlohmann::json::parse(json_text);
  if (!doc.contains("certificate") || !doc["certificate"].is_object()) {
    throw InputError("gadget: missing certificate block");
  }
  const auto& cert = doc["certificate"];
  if (!cert.value("verified", false)) {
    throw InputError("gadget: certificate is not marked verified");
  }
  if (!instance.is_standard()) {
    throw InputError("gadget: weights and facilities must be the defaults");
  }
  auto gadget = verify_gadget(instance.graph());
  if (!gadget) throw InputError("gadget: graph fails the gadget predicate");
  if (cert.contains("anchor") &&
      cert["anchor"].get<Vertex>() != gadget->anchor) {
    throw InputError(fmt::format("gadget: certificate anchor {} != {}",
                                 cert["anchor"].get<Vertex>(), gadget->anchor));
  }
  return *gadget;
}

Vertex ThreePartitionGame::triplet_vertex(const Triplet& t) const {
  auto it = std::lower_bound(triplets.begin(), triplets.end(), t);
  if (it == triplets.end() || *it != t) {
    throw InputError("3-partition game: not a sorted triplet of indices");
  }
  return triplet_base + static_cast<Vertex>(it - triplets.begin());
}

ThreePartitionGame build_3partition_game(const ThreePartitionInstance& instance,
                                         const Gadget& gadget) {
  if (!verify_gadget(gadget.graph)) {
    throw InputError("3-partition game: gadget fails verification");
  }
  ThreePartitionGame out;
  out.constants = ReductionConstants::compute(instance);
  out.triplets = all_triplets(instance.a.size());
  out.triplet_base = static_cast<Vertex>(instance.a.size() + 1);
  out.gadget_base = out.triplet_base + static_cast<Vertex>(out.triplets.size());
  const std::size_t n = out.gadget_base + 9;

  std::vector<std::int64_t> weights(n, 1);
  for (std::size_t i = 0; i < instance.a.size(); ++i) {
    weights[i + 1] = instance.a[i] * out.constants.c;
  }
  std::vector<Edge> edges;
  std::vector<Vertex> facilities;
  for (std::size_t t = 0; t < out.triplets.size(); ++t) {
    const auto u = out.triplet_base + static_cast<Vertex>(t);
    edges.emplace_back(0, u);
    for (std::size_t i : out.triplets[t]) {
      edges.emplace_back(static_cast<Vertex>(i + 1), u);
    }
    facilities.push_back(u);
  }
  for (Vertex g = 0; g < 9; ++g) {
    weights[out.gadget_base + g] = out.constants.d;
    facilities.push_back(out.gadget_base + g);
  }
  for (auto [u, v] : gadget.graph.edges()) {
    edges.emplace_back(out.gadget_base + u, out.gadget_base + v);
  }
  out.instance = build_instance(n, edges, std::move(weights),
                                std::move(facilities), instance.m + 1);
  return out;
}

StrategyProfile partition_profile(const ThreePartitionGame& game,
                                  const Gadget& gadget,
                                  const std::vector<Triplet>& partition) {
  StrategyProfile profile;
  for (const auto& t : partition) profile.push_back(game.triplet_vertex(t));
  profile.push_back(game.gadget_base + gadget.anchor);
  return profile;
}

RoundtripReport reduction_roundtrip(const ThreePartitionInstance& instance,
                                    const Gadget& gadget,
                                    const EnumerationOptions& options) {
  RoundtripReport report;
  report.partition_exists = three_partition_oracle(instance).has_value();
  Game game(build_3partition_game(instance, gadget).instance);
  report.nash_exists = nash_exists(game, GameMode::shared, options);
  return report;
}

DiscrepancyFamily discrepancy_family(std::size_t k, std::size_t a,
                                     std::size_t b) {
  if (k < 2 || a < 1 || b < 1) {
    throw InputError(fmt::format(
        "family: need k >= 2, a >= 1, b >= 1 (got k = {}, a = {}, b = {})", k,
        a, b));
  }
  const std::size_t segment = 2 * a + 2;
  const std::size_t ring = k * segment;
  const std::size_t n = k * (2 * a + b + 2);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ring; ++i) {
    edges.emplace_back(static_cast<Vertex>(i),
                       static_cast<Vertex>((i + 1) % ring));
  }
  auto leaf = static_cast<Vertex>(ring);
  DiscrepancyFamily out;
  for (std::size_t h = 0; h < k; ++h) {
    const auto hub = static_cast<Vertex>(h * segment);
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(hub, leaf++);
    out.good.push_back(hub);
    out.bad.push_back(static_cast<Vertex>(hub + a));
  }
  out.instance = build_instance(n, edges, std::nullopt, std::nullopt, k);
  Game game(out.instance);
  if (!is_nash(game, out.good, GameMode::shared) ||
      !is_nash(game, out.bad, GameMode::shared)) {
    throw std::logic_error(fmt::format(
        "family: construction for k = {}, a = {}, b = {} failed the Nash check",
        k, a, b));
  }
  out.good_cost = social_cost(game, out.good);
  out.bad_cost = social_cost(game, out.bad);
  return out;
}

}  // namespace vgame
