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


#ifndef VGAME_REDUCTIONS_HPP_
#define VGAME_REDUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgame/engine.hpp"
#include "vgame/equilibria.hpp"

namespace vgame {

// Replaces every vertex u of weight w(u) by u plus w(u) - 1 pendant leaves,
// then adds k(a + 1) vertices adjacent to every facility, a = total weight.
// Original ids stay a prefix; the result has unit weights and V' as
// facilities.
GameInstance expand_generalized(const GameInstance& instance);

struct ThreePartitionInstance {
  std::size_t m = 0;
  std::vector<std::int64_t> a;  // 3m values
  std::int64_t bound = 0;       // B

  // Throws InputError unless m >= 2, |a| = 3m, B/4 < a_i < B/2 and
  // sum a_i = mB.
  void validate() const;
};

// Index triples into a, each summing to B, or nullopt. Exhaustive.
std::optional<std::vector<std::array<std::size_t, 3>>> three_partition_oracle(
    const ThreePartitionInstance& instance);

struct ReductionConstants {
  std::int64_t c = 0;  // C(3m, 3) + 1
  std::int64_t d = 0;  // floor((Bc - c + c/m) / 5) + 1

  static ReductionConstants compute(const ThreePartitionInstance& instance);
};

struct InequalityCheck {
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool holds = false;  // lhs < rhs
};

// The five strict orderings between c, d, B and m the reduction relies on.
std::vector<InequalityCheck> check_constant_inequalities(
    const ThreePartitionInstance& instance, const ReductionConstants& constants);

// A 9-vertex graph where, for every placement p of one player, the other
// player's best response earns at least 5; `anchor` is a placement whose best
// response earns exactly 5.
struct Gadget {
  Graph graph;
  Vertex anchor = 0;
  std::vector<Rational> best;  // best[p]: best response value against p
};

inline constexpr std::string_view kGadgetPredicate =
    "connected, 9 vertices, k=2; for every placement p the best response "
    "earns >= 5, and some anchor p has best response exactly 5; no "
    "equilibrium among the 45 multisets";

// nullopt unless the graph satisfies the gadget predicate.
std::optional<Gadget> verify_gadget(const Graph& graph);

struct GadgetSearchResult {
  Gadget gadget;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t candidate = 0;  // index of the winning candidate
};

// Samples random connected 9-vertex graphs (random spanning tree plus up to
// 12 extra edges); candidate t is drawn from an RNG seeded with (seed, t).
// Returns the lowest-index hit among the first `budget` candidates; the
// result does not depend on `threads`.
std::optional<GadgetSearchResult> gadget_search(std::uint64_t seed,
                                                std::uint64_t budget,
                                                std::size_t threads = 1);

// Instance JSON with a "certificate" block.
std::string gadget_to_json(const GadgetSearchResult& result);

// Parses a gadget file and re-verifies it; throws InputError on failure.
Gadget load_gadget(std::string_view json_text);

// Vertex ids: v_0 = 0, v_i = i (1 <= i <= 3m), then the C(3m, 3) triplet
// vertices in lexicographic order, then the nine gadget vertices.
struct ThreePartitionGame {
  GameInstance instance;
  ReductionConstants constants;
  std::vector<std::array<std::size_t, 3>> triplets;  // 0-based indices into a
  Vertex triplet_base = 0;
  Vertex gadget_base = 0;

  Vertex triplet_vertex(const std::array<std::size_t, 3>& t) const;
};

// k = m + 1, U = triplet vertices and gadget vertices. The gadget is a
// separate component with weight d on each vertex.
ThreePartitionGame build_3partition_game(const ThreePartitionInstance& instance,
                                         const Gadget& gadget);

// One player per partition triplet plus one on the gadget anchor.
StrategyProfile partition_profile(
    const ThreePartitionGame& game, const Gadget& gadget,
    const std::vector<std::array<std::size_t, 3>>& partition);

struct RoundtripReport {
  bool partition_exists = false;
  bool nash_exists = false;
  bool agrees() const { return partition_exists == nash_exists; }
};

RoundtripReport reduction_roundtrip(const ThreePartitionInstance& instance,
                                    const Gadget& gadget,
                                    const EnumerationOptions& options = {});

struct DiscrepancyFamily {
  GameInstance instance;
  StrategyProfile good;  // hubs
  StrategyProfile bad;   // hubs shifted a steps along the ring
  Cost good_cost;
  Cost bad_cost;
};

// k hubs on a ring joined by paths of 2a + 1 vertices, b leaves per hub;
// n = k(2a + b + 2). Throws InputError on k < 2, a < 1 or b < 1, and
// std::logic_error if either profile fails the Nash check.
DiscrepancyFamily discrepancy_family(std::size_t k, std::size_t a,
                                     std::size_t b);

}  // namespace vgame

#endif  // VGAME_REDUCTIONS_HPP_
