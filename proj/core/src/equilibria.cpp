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


#include "vgame/equilibria.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include <fmt/format.h>

namespace vgame {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Runs body(begin, end) over contiguous chunks of [0, count).
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t threads, Body body) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin < end) pool.emplace_back(body, begin, end);
  }
}

}  // namespace

std::uint64_t count_multisets(std::size_t m, std::size_t k) {
  if (m == 0) return k == 0 ? 1 : 0;
  // C(m+k-1, k) as a running product; each prefix is itself a binomial.
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(value, i);
    const std::uint64_t factor = (m - 1 + i) / (i / g);
    value = saturating_mul(value / g, factor);
    if (value == kSaturated) return kSaturated;
  }
  return value;
}

MultisetEnumerator::MultisetEnumerator(std::vector<Vertex> items, std::size_t k)
    : items_(std::move(items)), index_(k, 0) {
  if (items_.empty() && k > 0) {
    done_ = true;
    return;
  }
  current_.assign(k, items_.empty() ? 0 : items_.front());
}

void MultisetEnumerator::advance() {
  if (done_) return;
  const std::size_t k = index_.size();
  std::size_t pos = k;
  while (pos > 0 && index_[pos - 1] + 1 == items_.size()) --pos;
  if (pos == 0) {
    done_ = true;
    return;
  }
  const std::size_t next = index_[pos - 1] + 1;
  for (std::size_t i = pos - 1; i < k; ++i) {
    index_[i] = next;
    current_[i] = items_[next];
  }
}

std::uint64_t enumeration_cost(const GameInstance& instance) {
  const std::size_t m = instance.facilities().size();
  const std::size_t k = instance.player_count();
  return saturating_mul(saturating_mul(count_multisets(m, k), m), k);
}

std::vector<StrategyProfile> enumerate_profiles(const GameInstance& instance,
                                                std::uint64_t budget) {
  const std::uint64_t cost = enumeration_cost(instance);
  if (cost > budget) {
    throw BudgetExceeded(
        fmt::format("enumeration needs {} checks ({} multisets), budget {}",
                    cost,
                    count_multisets(instance.facilities().size(),
                                    instance.player_count()),
                    budget),
        cost, budget);
  }
  std::vector<StrategyProfile> out;
  for (MultisetEnumerator it(instance.facilities(), instance.player_count());
       !it.done(); it.advance()) {
    out.push_back(it.current());
  }
  return out;
}

EquilibriumReport enumerate_equilibria(const Game& game, GameMode mode,
                                       const EnumerationOptions& options) {
  const auto profiles = enumerate_profiles(game.instance(), options.budget);
  const PayoffKernel kernel(game, mode);

  std::vector<std::optional<EquilibriumEntry>> found(profiles.size());
  parallel_chunks(profiles.size(), options.threads,
                  [&](std::size_t begin, std::size_t end) {
                    std::vector<std::int64_t> scaled(game.player_count());
                    for (std::size_t idx = begin; idx < end; ++idx) {
                      const auto& p = profiles[idx];
                      if (!kernel.is_nash(p)) continue;
                      kernel.payoffs(p, scaled);
                      EquilibriumEntry entry;
                      entry.profile = p;
                      for (auto s : scaled) {
                        entry.payoffs.push_back(kernel.to_rational(s));
                      }
                      entry.cost = social_cost(game, p);
                      found[idx] = std::move(entry);
                    }
                  });

  EquilibriumReport report;
  report.mode = mode;
  report.examined = profiles.size();
  for (auto& entry : found) {
    if (!entry) continue;
    if (!report.min_cost || entry->cost < *report.min_cost) {
      report.min_cost = entry->cost;
    }
    if (!report.max_cost || entry->cost > *report.max_cost) {
      report.max_cost = entry->cost;
    }
    report.equilibria.push_back(std::move(*entry));
  }
  if (report.max_cost) {
    if (!report.max_cost->is_finite()) {
      report.discrepancy = ExtendedRational::infinite();
    } else {
      report.discrepancy = ExtendedRational(
          Rational(report.max_cost->value(), report.min_cost->value()));
    }
  }
  return report;
}

bool nash_exists(const Game& game, GameMode mode,
                 const EnumerationOptions& options) {
  const auto profiles = enumerate_profiles(game.instance(), options.budget);
  const PayoffKernel kernel(game, mode);
  std::atomic<bool> found = false;
  parallel_chunks(profiles.size(), options.threads,
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t idx = begin; idx < end && !found; ++idx) {
                      if (kernel.is_nash(profiles[idx])) found = true;
                    }
                  });
  return found;
}

PayoffBoundReport verify_payoff_bounds(const EquilibriumReport& report,
                                       const GameInstance& instance) {
  if (!instance.is_standard() || !is_connected(instance)) {
    throw InputError("payoff bounds: needs a connected standard game");
  }
  const auto n = static_cast<std::int64_t>(instance.vertex_count());
  const auto k = static_cast<std::int64_t>(instance.player_count());
  PayoffBoundReport out;
  out.lower = Rational(n, 2 * k);
  out.upper = Rational(2 * n, k);
  for (const auto& entry : report.equilibria) {
    for (std::size_t i = 0; i < entry.payoffs.size(); ++i) {
      const Rational& p = entry.payoffs[i];
      if (p <= out.lower) out.violations.push_back({entry.profile, i, p, "lower"});
      if (p >= out.upper) out.violations.push_back({entry.profile, i, p, "upper"});
    }
  }
  return out;
}

}  // namespace vgame
