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

#ifndef VGAME_DYNAMICS_HPP_
#define VGAME_DYNAMICS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "vgame/engine.hpp"

namespace vgame {

// The two free choices of the best-response dynamic: which unhappy player
// moves, and which of its best responses it takes.
struct Policy {
  enum class Selection { lowest_index, seeded_random };
  enum class TieBreak { lowest_vertex, seeded_random };

  Selection selection = Selection::lowest_index;
  TieBreak tie_break = TieBreak::lowest_vertex;
  std::uint64_t seed = 0;
  std::size_t max_steps = 10000;

  bool deterministic() const {
    return selection == Selection::lowest_index &&
           tie_break == TieBreak::lowest_vertex;
  }
};

struct MoveRecord {
  std::size_t step = 0;  // 1-based
  std::size_t player = 0;
  Vertex from = 0;
  Vertex to = 0;
  Rational payoff_before;
  Rational payoff_after;
};

struct Converged {
  StrategyProfile profile;
  std::size_t steps = 0;
};

// states.front() == states.back(): the loop the dynamic keeps repeating.
struct Cycled {
  std::vector<StrategyProfile> states;
};

struct Exhausted {
  std::size_t max_steps = 0;
  StrategyProfile last;
};

using Outcome = std::variant<Converged, Cycled, Exhausted>;

struct DynamicRun {
  Outcome outcome;
  std::vector<MoveRecord> trace;
};

// Runs best-response dynamics from `start`. A repeated state is reported as
// Cycled only under a deterministic policy; randomized policies run until
// convergence or max_steps.
DynamicRun run_dynamic(const Game& game, std::span<const Vertex> start,
                       GameMode mode, const Policy& policy);

// Directed graph over all |U|^k ordered profiles with one edge per
// (unhappy player, best response) move.
class MoveGraph {
 public:
  struct Arc {
    std::size_t target = 0;
    std::size_t player = 0;
    Vertex to = 0;
  };

  std::size_t node_count() const { return arcs_.size(); }
  std::span<const Arc> arcs(std::size_t node) const { return arcs_[node]; }
  std::size_t out_degree(std::size_t node) const { return arcs_[node].size(); }

  StrategyProfile profile(std::size_t node) const;
  std::size_t node(std::span<const Vertex> profile) const;

  // Some directed cycle as a node sequence whose first and last entries
  // coincide, or nullopt when the graph is acyclic.
  std::optional<std::vector<std::size_t>> find_cycle() const;

 private:
  friend MoveGraph build_move_graph(const Game&, GameMode, std::uint64_t,
                                    std::size_t);
  std::vector<Vertex> facilities_;
  std::vector<std::size_t> index_of_;  // vertex -> facility index
  std::size_t players_ = 0;
  std::vector<std::vector<Arc>> arcs_;
};

// Throws BudgetExceeded when |U|^k exceeds `node_budget`. Work is split over
// `threads` workers; the result does not depend on the thread count.
MoveGraph build_move_graph(const Game& game, GameMode mode,
                           std::uint64_t node_budget = 1'000'000,
                           std::size_t threads = 1);

struct BestResponseCycle {
  GameInstance instance;
  std::vector<StrategyProfile> states;  // front() == back()
  std::vector<MoveRecord> moves;        // moves[i]: states[i] -> states[i+1]
};

// Scans cycles C_n for n in [n_min, n_max] and k in [k_min, k_max] (k < n),
// in that order, and returns the first whose move graph has a directed
// cycle.
std::optional<BestResponseCycle> find_best_response_cycle(
    std::size_t n_min, std::size_t n_max, std::size_t k_min, std::size_t k_max,
    GameMode mode, std::size_t threads = 1);

// Gap lengths between consecutive occupied vertices on a cycle.
class GapMultiset {
 public:
  GapMultiset() = default;
  explicit GapMultiset(std::vector<std::uint32_t> gaps);

  // Sorted descending.
  const std::vector<std::uint32_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const GapMultiset&, const GapMultiset&) = default;

 private:
  std::vector<std::uint32_t> values_;
};

// Dominance order. Fewer gaps dominate; at equal size the larger maximum
// dominates, ties recurse on the rest. `greater` means a dominates b.
std::strong_ordering dominance_compare(const GapMultiset& a,
                                       const GapMultiset& b);

// Gap multiset of a profile with pairwise distinct facilities on C_n.
// Throws InputError when two players share a vertex.
GapMultiset cycle_potential(std::size_t n, std::span<const Vertex> profile);

}  // namespace vgame

#endif  // VGAME_DYNAMICS_HPP_
