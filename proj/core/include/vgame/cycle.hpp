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

#ifndef VGAME_CYCLE_HPP_
#define VGAME_CYCLE_HPP_

// Closed-form analysis of the standard game on the cycle C_n.
//
// A profile is described, up to player permutation and rotation, by the
// occupied vertices u_0 < ... < u_{l-1}, their occupancy counts c_j and the
// gaps d_j = dist(u_j -> u_{j+1}) along increasing vertex ids. Each gap
// splits as d_j = 1 + 2 a_j + b_j with b_j in {0, 1}: a_j vertices go to
// each side and b_j = 1 marks a shared midpoint. Indices wrap modulo l.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vgame/engine.hpp"
#include "vgame/types.hpp"

namespace vgame {

struct CycleProfile {
  std::size_t n = 0;
  std::vector<Vertex> facilities;        // u_j, ascending
  std::vector<std::uint32_t> counts;     // c_j >= 1
  std::vector<std::uint32_t> gaps;       // d_j >= 1, sum = n
  std::vector<std::uint32_t> halves;     // a_j
  std::vector<std::uint32_t> parities;   // b_j
  Rational gamma;                        // smallest player payoff

  std::size_t distinct() const { return facilities.size(); }
  std::size_t players() const;
};

// Throws InputError unless 1 <= k < n, n >= 3 and every position < n.
CycleProfile canonicalize(std::size_t n, std::span<const Vertex> positions);

// Payoff of each player sitting on u_j, indexed by j:
//   b_{j-1}/(c_{j-1}+c_j) + (a_{j-1}+1+a_j)/c_j + b_j/(c_j+c_{j+1}).
PayoffVector cycle_payoffs(const CycleProfile& profile);

// The four local conditions of the cycle equilibrium characterization:
//   (i)   c_j <= 2
//   (ii)  d_j <= 2 gamma
//   (iii) c_j = 1 and d_{j-1} = d_j = 2 gamma imply c_{j-1} = c_{j+1} = 2
//   (iv)  (c_{j-1}, c_j, c_{j+1}) = (2, 1, 1) implies d_{j-1} odd, and its
//         reflection (1, 1, 2) implies d_j odd
enum class CycleCondition { stack_size, gap_length, tight_single, odd_gap };

struct ConditionViolation {
  CycleCondition condition;
  std::size_t index;  // j

  friend bool operator==(const ConditionViolation&,
                         const ConditionViolation&) = default;
};

// "(ii)@2".
std::string to_string(const ConditionViolation& violation);

struct ConditionReport {
  bool holds = true;  // no violations
  std::vector<ConditionViolation> violations;
};

// Evaluates the conditions exactly as stated. They are not equivalent to
// the Nash property: brute force finds profiles on small cycles where
// they accept non-equilibria (a lone player gains by joining an occupied
// neighbor) and reject equilibria (condition (iii) with d = 2 gamma odd).
ConditionReport check_cycle_conditions(const CycleProfile& profile);

// One player leaves u_from and settles on the vertex `offset` steps past
// u_gap, inside gap `gap` (so 1 <= offset < d_gap).
struct CycleMove {
  std::size_t from = 0;
  std::size_t gap = 0;
  std::uint32_t offset = 1;
};

// Payoff of the mover after the move, from the closed form applied to the
// mutated profile. Throws InputError when the target vertex is occupied.
Rational move_payoff(const CycleProfile& profile, const CycleMove& move);

// One player of the stack on u_j (c_j >= 2) steps to the next vertex:
//   a_j + b_j + (1 - b_j) / (1 + c_next)
// with c_next = c_{j+1}, or c_j - 1 when the stack is the only facility.
// Throws InputError when c_j < 2 or d_j < 2.
Rational stack_step_payoff(const CycleProfile& profile, std::size_t j);

// Best payoff a player from outside gap j can reach inside it:
// max over vacant offsets of move_payoff. Throws InputError if the gap has
// no vacant vertex or no player lives outside its endpoints.
Rational best_gap_entry(const CycleProfile& profile, std::size_t j);

// a + b + (1 - b) / (1 + min(c_j, c_{j+1})) for d_j = 2a + b + 1; a lower
// bound on best_gap_entry. Exceeds gamma whenever d_j > 2 gamma.
Rational gap_entry_floor(const CycleProfile& profile, std::size_t j);

}  // namespace vgame

#endif  // VGAME_CYCLE_HPP_
