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

#include "vgame/cycle.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <fmt/format.h>

namespace vgame {

namespace {

std::size_t prev_index(std::size_t j, std::size_t l) { return (j + l - 1) % l; }
std::size_t next_index(std::size_t j, std::size_t l) { return (j + 1) % l; }

Rational facility_payoff(const CycleProfile& p, std::size_t j) {
  const std::size_t l = p.distinct();
  const std::size_t jp = prev_index(j, l);
  const std::size_t jn = next_index(j, l);
  auto c = [&](std::size_t i) { return static_cast<std::int64_t>(p.counts[i]); };
  return Rational(p.parities[jp], c(jp) + c(j)) +
         Rational(p.halves[jp] + 1 + p.halves[j], c(j)) +
         Rational(p.parities[j], c(j) + c(jn));
}

// Positions of all players, facility by facility.
std::vector<Vertex> expand_positions(const CycleProfile& p) {
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < p.distinct(); ++j) {
    out.insert(out.end(), p.counts[j], p.facilities[j]);
  }
  return out;
}

}  // namespace

std::size_t CycleProfile::players() const {
  std::size_t k = 0;
  for (auto c : counts) k += c;
  return k;
}

CycleProfile canonicalize(std::size_t n, std::span<const Vertex> positions) {
  if (n < 3) throw InputError(fmt::format("cycle: n = {} must be >= 3", n));
  if (positions.empty() || positions.size() >= n) {
    throw InputError(fmt::format("cycle: need 1 <= k < n, got k = {}, n = {}",
                                 positions.size(), n));
  }
  std::map<Vertex, std::uint32_t> occupancy;
  for (Vertex v : positions) {
    if (v >= n) throw InputError(fmt::format("cycle: vertex {} >= n = {}", v, n));
    ++occupancy[v];
  }

  CycleProfile p;
  p.n = n;
  for (auto [v, c] : occupancy) {
    p.facilities.push_back(v);
    p.counts.push_back(c);
  }
  const std::size_t l = p.distinct();
  for (std::size_t j = 0; j < l; ++j) {
    const std::size_t from = p.facilities[j];
    const std::size_t to = p.facilities[next_index(j, l)];
    const auto gap = static_cast<std::uint32_t>(l == 1 ? n : (to + n - from) % n);
    p.gaps.push_back(gap);
    p.halves.push_back((gap - 1) / 2);
    p.parities.push_back((gap - 1) % 2);
  }
  auto pays = cycle_payoffs(p);
  p.gamma = *std::min_element(pays.begin(), pays.end());
  return p;
}

PayoffVector cycle_payoffs(const CycleProfile& profile) {
  PayoffVector out;
  out.reserve(profile.distinct());
  for (std::size_t j = 0; j < profile.distinct(); ++j) {
    out.push_back(facility_payoff(profile, j));
  }
  return out;
}

std::string to_string(const ConditionViolation& violation) {
  static constexpr const char* kNames[] = {"(i)", "(ii)", "(iii)", "(iv)"};
  return fmt::format("{}@{}", kNames[static_cast<int>(violation.condition)],
                     violation.index);
}

ConditionReport check_cycle_conditions(const CycleProfile& p) {
  ConditionReport report;
  const std::size_t l = p.distinct();
  const Rational twice_gamma = p.gamma * 2;
  auto flag = [&](CycleCondition c, std::size_t j) {
    report.violations.push_back({c, j});
  };
  for (std::size_t j = 0; j < l; ++j) {
    const std::size_t jp = prev_index(j, l);
    const std::size_t jn = next_index(j, l);
    const auto cp = p.counts[jp], c = p.counts[j], cn = p.counts[jn];

    if (c > 2) flag(CycleCondition::stack_size, j);
    if (Rational(p.gaps[j]) > twice_gamma) flag(CycleCondition::gap_length, j);
    if (c == 1 && Rational(p.gaps[jp]) == twice_gamma &&
        Rational(p.gaps[j]) == twice_gamma && !(cp == 2 && cn == 2)) {
      flag(CycleCondition::tight_single, j);
    }
    const bool left_pattern = cp == 2 && c == 1 && cn == 1;
    const bool right_pattern = cp == 1 && c == 1 && cn == 2;
    if ((left_pattern && p.gaps[jp] % 2 == 0) ||
        (right_pattern && p.gaps[j] % 2 == 0)) {
      flag(CycleCondition::odd_gap, j);
    }
  }
  report.holds = report.violations.empty();
  return report;
}

Rational move_payoff(const CycleProfile& profile, const CycleMove& move) {
  const std::size_t l = profile.distinct();
  if (move.from >= l || move.gap >= l) {
    throw InputError("cycle move: facility index out of range");
  }
  if (move.offset == 0 || move.offset >= profile.gaps[move.gap]) {
    throw InputError(fmt::format(
        "cycle move: offset {} hits an occupied vertex of gap {} (length {})",
        move.offset, move.gap, profile.gaps[move.gap]));
  }
  const auto target = static_cast<Vertex>(
      (profile.facilities[move.gap] + move.offset) % profile.n);

  auto positions = expand_positions(profile);
  auto it = std::find(positions.begin(), positions.end(),
                      profile.facilities[move.from]);
  *it = target;
  CycleProfile after = canonicalize(profile.n, positions);
  auto slot = std::find(after.facilities.begin(), after.facilities.end(), target);
  return facility_payoff(after,
                         static_cast<std::size_t>(slot - after.facilities.begin()));
}

Rational stack_step_payoff(const CycleProfile& profile, std::size_t j) {
  if (j >= profile.distinct()) throw InputError("cycle: facility index out of range");
  if (profile.counts[j] < 2) throw InputError("stack step: needs c_j >= 2");
  if (profile.gaps[j] < 2) throw InputError("stack step: next vertex is occupied");
  const std::int64_t next =
      profile.distinct() == 1 ? profile.counts[j] - 1
                              : profile.counts[next_index(j, profile.distinct())];
  const std::int64_t a = profile.halves[j];
  const std::int64_t b = profile.parities[j];
  return Rational(a + b) + Rational(1 - b, 1 + next);
}

Rational best_gap_entry(const CycleProfile& profile, std::size_t j) {
  const std::size_t l = profile.distinct();
  if (j >= l) throw InputError("cycle: facility index out of range");
  if (profile.gaps[j] < 2) throw InputError("gap entry: gap has no vacant vertex");
  std::optional<std::size_t> from;
  for (std::size_t i = 0; i < l && !from; ++i) {
    if (i != j && i != next_index(j, l)) from = i;
  }
  if (!from) throw InputError("gap entry: no player outside the gap endpoints");
  Rational best(0);
  for (std::uint32_t t = 1; t < profile.gaps[j]; ++t) {
    best = std::max(best, move_payoff(profile, {*from, j, t}));
  }
  return best;
}

Rational gap_entry_floor(const CycleProfile& profile, std::size_t j) {
  if (j >= profile.distinct()) throw InputError("cycle: facility index out of range");
  const std::int64_t a = profile.halves[j];
  const std::int64_t b = profile.parities[j];
  const std::int64_t c = std::min(
      profile.counts[j], profile.counts[next_index(j, profile.distinct())]);
  return Rational(a + b) + Rational(1 - b, 1 + c);
}

}  // namespace vgame
