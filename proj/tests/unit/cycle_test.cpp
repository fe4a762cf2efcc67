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


#include <gtest/gtest.h>

#include <vector>

#include "vgame/cycle.hpp"
#include "vgame/equilibria.hpp"

namespace vgame {
namespace {

using U32 = std::vector<std::uint32_t>;

// Payoff of the player that moved, computed by the engine.
Rational engine_move_payoff(const CycleProfile& p, const CycleMove& move) {
  std::vector<Vertex> positions;
  for (std::size_t j = 0; j < p.distinct(); ++j) {
    positions.insert(positions.end(), p.counts[j], p.facilities[j]);
  }
  auto it = std::find(positions.begin(), positions.end(), p.facilities[move.from]);
  const auto mover = static_cast<std::size_t>(it - positions.begin());
  *it = static_cast<Vertex>((p.facilities[move.gap] + move.offset) % p.n);
  Game game(cycle_instance(p.n, positions.size()));
  return payoffs(game, positions, GameMode::shared)[mover];
}

TEST(CanonicalizeTest, Examples) {
  auto a = canonicalize(6, std::vector<Vertex>{0, 3});
  EXPECT_EQ(a.counts, (U32{1, 1}));
  EXPECT_EQ(a.gaps, (U32{3, 3}));
  EXPECT_EQ(a.halves, (U32{1, 1}));
  EXPECT_EQ(a.parities, (U32{0, 0}));

  auto b = canonicalize(8, std::vector<Vertex>{0, 0});
  EXPECT_EQ(b.distinct(), 1u);
  EXPECT_EQ(b.counts, (U32{2}));
  EXPECT_EQ(b.gaps, (U32{8}));
  EXPECT_EQ(b.halves, (U32{3}));
  EXPECT_EQ(b.parities, (U32{1}));

  auto c = canonicalize(5, std::vector<Vertex>{1, 0});
  EXPECT_EQ(c.counts, (U32{1, 1}));
  EXPECT_EQ(c.gaps, (U32{1, 4}));
  EXPECT_EQ(c.halves, (U32{0, 1}));
  EXPECT_EQ(c.parities, (U32{0, 1}));
}

TEST(CanonicalizeTest, RejectsBadInput) {
  EXPECT_THROW(canonicalize(2, std::vector<Vertex>{0}), InputError);
  EXPECT_THROW(canonicalize(5, std::vector<Vertex>{}), InputError);
  EXPECT_THROW(canonicalize(3, std::vector<Vertex>{0, 1, 2}), InputError);
  EXPECT_THROW(canonicalize(5, std::vector<Vertex>{0, 5}), InputError);
}

TEST(CyclePayoffTest, Examples) {
  EXPECT_EQ(cycle_payoffs(canonicalize(6, std::vector<Vertex>{0, 3})),
            (PayoffVector{3, 3}));
  auto c9 = canonicalize(9, std::vector<Vertex>{0, 1, 2});
  EXPECT_EQ(c9.gaps, (U32{1, 1, 7}));
  EXPECT_EQ(cycle_payoffs(c9), (PayoffVector{4, 1, 4}));
  EXPECT_EQ(c9.gamma, Rational(1));
  EXPECT_EQ(cycle_payoffs(canonicalize(5, std::vector<Vertex>{0, 1})),
            (PayoffVector{Rational(5, 2), Rational(5, 2)}));
}

TEST(CyclePayoffTest, ClosedFormMatchesEngineEverywhere) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t k = 2; k <= 4 && k < n; ++k) {
      Game game(cycle_instance(n, k));
      for (const auto& f : enumerate_profiles(game.instance())) {
        auto p = canonicalize(n, f);
        auto closed = cycle_payoffs(p);
        auto engine = payoffs(game, f, GameMode::shared);
        Rational weighted(0);
        for (std::size_t i = 0; i < k; ++i) {
          auto j = static_cast<std::size_t>(
              std::find(p.facilities.begin(), p.facilities.end(), f[i]) -
              p.facilities.begin());
          EXPECT_EQ(closed[j], engine[i]);
        }
        for (std::size_t j = 0; j < p.distinct(); ++j) {
          weighted += closed[j] * static_cast<std::int64_t>(p.counts[j]);
        }
        EXPECT_EQ(weighted, Rational(static_cast<std::int64_t>(n)));
      }
    }
  }
}

TEST(CycleConditionTest, Examples) {
  auto c9 = check_cycle_conditions(canonicalize(9, std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(c9.holds);
  ASSERT_EQ(c9.violations.size(), 1u);
  EXPECT_EQ(to_string(c9.violations[0]), "(ii)@2");

  EXPECT_TRUE(check_cycle_conditions(canonicalize(6, std::vector<Vertex>{0, 3})).holds);
  EXPECT_TRUE(check_cycle_conditions(canonicalize(8, std::vector<Vertex>{0, 0})).holds);
}

TEST(CycleConditionTest, StackOfThreeViolatesFirstCondition) {
  auto r = check_cycle_conditions(canonicalize(12, std::vector<Vertex>{0, 0, 0, 6}));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.violations.front().condition, CycleCondition::stack_size);
}

// The literal conditions and the Nash property disagree on these profiles;
// the acceptance suite reports the full count.
TEST(CycleConditionTest, KnownDisagreementsWithEngine) {
  Game c4(cycle_instance(4, 3));
  std::vector<Vertex> lone{0, 1, 2};
  EXPECT_TRUE(check_cycle_conditions(canonicalize(4, lone)).holds);
  EXPECT_FALSE(is_nash(c4, lone, GameMode::shared));

  Game c9(cycle_instance(9, 4));
  std::vector<Vertex> spread{0, 0, 3, 6};
  auto r = check_cycle_conditions(canonicalize(9, spread));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.violations.front().condition, CycleCondition::tight_single);
  EXPECT_TRUE(is_nash(c9, spread, GameMode::shared));
}

TEST(CycleMoveTest, ClosedFormMoveMatchesEngine) {
  for (std::size_t n = 4; n <= 11; ++n) {
    for (std::size_t k = 2; k <= 4 && k < n; ++k) {
      Game game(cycle_instance(n, k));
      for (const auto& f : enumerate_profiles(game.instance())) {
        auto p = canonicalize(n, f);
        for (std::size_t from = 0; from < p.distinct(); ++from) {
          for (std::size_t gap = 0; gap < p.distinct(); ++gap) {
            for (std::uint32_t t = 1; t < p.gaps[gap]; ++t) {
              CycleMove move{from, gap, t};
              EXPECT_EQ(move_payoff(p, move), engine_move_payoff(p, move));
            }
          }
        }
      }
    }
  }
}

TEST(CycleMoveTest, RejectsOccupiedTargets) {
  auto p = canonicalize(9, std::vector<Vertex>{0, 1, 2});
  EXPECT_THROW(move_payoff(p, {0, 0, 1}), InputError);
  EXPECT_THROW(move_payoff(p, {0, 2, 0}), InputError);
  EXPECT_THROW(move_payoff(p, {5, 2, 1}), InputError);
}

TEST(CycleMoveTest, StackStepMatchesEngine) {
  for (std::size_t n = 5; n <= 12; ++n) {
    for (std::size_t k = 2; k <= 5 && k < n; ++k) {
      Game game(cycle_instance(n, k));
      for (const auto& f : enumerate_profiles(game.instance())) {
        auto p = canonicalize(n, f);
        for (std::size_t j = 0; j < p.distinct(); ++j) {
          if (p.counts[j] < 2 || p.gaps[j] < 2) continue;
          EXPECT_EQ(stack_step_payoff(p, j), engine_move_payoff(p, {j, j, 1}));
        }
      }
    }
  }
}

TEST(CycleMoveTest, StackStepNextToThreeStack) {
  // Stack of three on 0, a lone player on 3: d_0 = 3, a = 1, b = 0.
  auto p = canonicalize(12, std::vector<Vertex>{0, 0, 0, 3});
  EXPECT_EQ(stack_step_payoff(p, 0), Rational(1) + Rational(1, 2));
  EXPECT_THROW(stack_step_payoff(p, 1), InputError);
}

TEST(CycleMoveTest, GapEntryFloorBoundsBestEntry) {
  for (std::size_t n = 5; n <= 12; ++n) {
    for (std::size_t k = 3; k <= 4 && k < n; ++k) {
      Game game(cycle_instance(n, k));
      for (const auto& f : enumerate_profiles(game.instance())) {
        auto p = canonicalize(n, f);
        if (p.distinct() < 3) continue;
        for (std::size_t j = 0; j < p.distinct(); ++j) {
          if (p.gaps[j] < 2) continue;
          EXPECT_GE(best_gap_entry(p, j), gap_entry_floor(p, j));
          if (Rational(p.gaps[j]) > p.gamma * 2) {
            EXPECT_GT(gap_entry_floor(p, j), p.gamma);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace vgame
