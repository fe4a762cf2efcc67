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

#ifndef VGAME_EQUILIBRIA_HPP_
#define VGAME_EQUILIBRIA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgame/engine.hpp"

namespace vgame {

// Default number of (multiset, deviation) checks an enumeration may spend.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// C(m + k - 1, k), saturating at UINT64_MAX.
std::uint64_t count_multisets(std::size_t m, std::size_t k);

// Walks the nondecreasing k-sequences over a sorted vertex list in
// lexicographic order.
class MultisetEnumerator {
 public:
  MultisetEnumerator(std::vector<Vertex> items, std::size_t k);

  const StrategyProfile& current() const { return current_; }
  bool done() const { return done_; }
  void advance();

 private:
  std::vector<Vertex> items_;
  std::vector<std::size_t> index_;
  StrategyProfile current_;
  bool done_ = false;
};

// Estimated cost of an exhaustive scan: multisets x |U| x k.
std::uint64_t enumeration_cost(const GameInstance& instance);

// All facility multisets of the instance. Throws BudgetExceeded when
// enumeration_cost exceeds `budget`.
std::vector<StrategyProfile> enumerate_profiles(const GameInstance& instance,
                                                std::uint64_t budget =
                                                    kDefaultBudget);

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  std::size_t threads = 1;
};

struct EquilibriumEntry {
  StrategyProfile profile;  // nondecreasing
  PayoffVector payoffs;
  Cost cost;
};

struct EquilibriumReport {
  GameMode mode = GameMode::shared;
  std::uint64_t examined = 0;  // multisets checked
  std::vector<EquilibriumEntry> equilibria;
  std::optional<Cost> min_cost;
  std::optional<Cost> max_cost;
  // max_cost / min_cost; infinite when the worst cost is infinite, nullopt
  // when there is no equilibrium.
  std::optional<ExtendedRational> discrepancy;
};

// Every equilibrium multiset, in enumeration order. The report does not
// depend on options.threads.
EquilibriumReport enumerate_equilibria(const Game& game, GameMode mode,
                                       const EnumerationOptions& options = {});

// Stops at the first equilibrium found.
bool nash_exists(const Game& game, GameMode mode,
                 const EnumerationOptions& options = {});

struct PayoffBoundViolation {
  StrategyProfile profile;
  std::size_t player = 0;
  Rational payoff;
  std::string condition;  // "lower" (p <= n/2k) or "upper" (p >= 2n/k)
};

struct PayoffBoundReport {
  Rational lower;  // n / 2k
  Rational upper;  // 2n / k
  std::vector<PayoffBoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks n/2k < p < 2n/k for every equilibrium payoff. Throws InputError
// unless the instance is connected and standard.
PayoffBoundReport verify_payoff_bounds(const EquilibriumReport& report,
                                       const GameInstance& instance);

}  // namespace vgame

#endif  // VGAME_EQUILIBRIA_HPP_
