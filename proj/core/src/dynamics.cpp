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

#include "vgame/dynamics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include <fmt/format.h>

namespace vgame {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t count) {
  return static_cast<std::size_t>(rng() % count);
}

struct PlayerOptions {
  std::int64_t best = 0;
  std::vector<Vertex> responses;
};

PlayerOptions options_for(const PayoffKernel& kernel,
                          std::span<const Vertex> profile, std::size_t player,
                          std::vector<std::int64_t>& scratch) {
  const auto& facilities = kernel.game().instance().facilities();
  kernel.deviations(profile, player, scratch);
  PlayerOptions out;
  out.best = *std::max_element(scratch.begin(), scratch.end());
  for (std::size_t idx = 0; idx < facilities.size(); ++idx) {
    if (scratch[idx] == out.best) out.responses.push_back(facilities[idx]);
  }
  return out;
}

}  // namespace

DynamicRun run_dynamic(const Game& game, std::span<const Vertex> start,
                       GameMode mode, const Policy& policy) {
  validate_profile(game, start);
  const PayoffKernel kernel(game, mode);
  const std::size_t k = start.size();
  std::mt19937_64 rng(policy.seed);

  StrategyProfile profile(start.begin(), start.end());
  std::vector<std::int64_t> current(k);
  std::vector<std::int64_t> scratch(game.instance().facilities().size());
  std::map<StrategyProfile, std::size_t> seen;
  std::vector<StrategyProfile> history;
  if (policy.deterministic()) {
    seen.emplace(profile, 0);
    history.push_back(profile);
  }

  DynamicRun run;
  for (std::size_t steps = 0;; ++steps) {
    kernel.payoffs(profile, current);

    std::vector<std::size_t> unhappy;
    std::optional<PlayerOptions> chosen_options;
    for (std::size_t i = 0; i < k; ++i) {
      auto opts = options_for(kernel, profile, i, scratch);
      if (opts.best > current[i]) {
        unhappy.push_back(i);
        if (policy.selection == Policy::Selection::lowest_index) {
          chosen_options = std::move(opts);
          break;
        }
      }
    }
    if (unhappy.empty()) {
      run.outcome = Converged{profile, steps};
      return run;
    }
    if (steps == policy.max_steps) {
      run.outcome = Exhausted{policy.max_steps, profile};
      return run;
    }

    std::size_t player = unhappy.front();
    if (policy.selection == Policy::Selection::seeded_random) {
      player = unhappy[pick(rng, unhappy.size())];
      chosen_options = options_for(kernel, profile, player, scratch);
    }
    const auto& responses = chosen_options->responses;
    Vertex target = responses.front();
    if (policy.tie_break == Policy::TieBreak::seeded_random) {
      target = responses[pick(rng, responses.size())];
    }

    MoveRecord record;
    record.step = steps + 1;
    record.player = player;
    record.from = profile[player];
    record.to = target;
    record.payoff_before = kernel.to_rational(current[player]);
    record.payoff_after = kernel.to_rational(chosen_options->best);
    run.trace.push_back(record);
    profile[player] = target;

    if (policy.deterministic()) {
      auto [it, inserted] = seen.emplace(profile, history.size());
      history.push_back(profile);
      if (!inserted) {
        Cycled cycled;
        cycled.states.assign(history.begin() + static_cast<std::ptrdiff_t>(it->second),
                             history.end());
        run.outcome = std::move(cycled);
        return run;
      }
    }
  }
}

StrategyProfile MoveGraph::profile(std::size_t node) const {
  const std::size_t m = facilities_.size();
  StrategyProfile out(players_);
  for (std::size_t i = players_; i-- > 0;) {
    out[i] = facilities_[node % m];
    node /= m;
  }
  return out;
}

std::size_t MoveGraph::node(std::span<const Vertex> profile) const {
  std::size_t out = 0;
  for (Vertex v : profile) out = out * facilities_.size() + index_of_.at(v);
  return out;
}

std::optional<std::vector<std::size_t>> MoveGraph::find_cycle() const {
  enum : std::uint8_t { kWhite, kGray, kBlack };
  const std::size_t count = node_count();
  std::vector<std::uint8_t> color(count, kWhite);

  struct Frame {
    std::size_t node;
    std::size_t next_arc;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < count; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({root, 0});
    color[root] = kGray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& out = arcs_[top.node];
      if (top.next_arc == out.size()) {
        color[top.node] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t next = out[top.next_arc++].target;
      if (color[next] == kGray) {
        std::vector<std::size_t> loop{next};
        for (auto it = stack.rbegin(); it != stack.rend() && it->node != next; ++it) {
          loop.push_back(it->node);
        }
        loop.push_back(next);
        std::reverse(loop.begin(), loop.end());
        return loop;
      }
      if (color[next] == kWhite) {
        color[next] = kGray;
        stack.push_back({next, 0});
      }
    }
  }
  return std::nullopt;
}

MoveGraph build_move_graph(const Game& game, GameMode mode,
                           std::uint64_t node_budget, std::size_t threads) {
  const auto& facilities = game.instance().facilities();
  const std::size_t k = game.player_count();
  const std::size_t m = facilities.size();

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > node_budget / m) {
      throw BudgetExceeded(
          fmt::format("move graph: {}^{} profiles exceed budget {}", m, k,
                      node_budget),
          node_budget + 1, node_budget);
    }
    count *= m;
  }

  MoveGraph graph;
  graph.facilities_ = facilities;
  graph.players_ = k;
  graph.index_of_.assign(game.vertex_count(), 0);
  for (std::size_t idx = 0; idx < m; ++idx) graph.index_of_[facilities[idx]] = idx;
  graph.arcs_.resize(count);

  const PayoffKernel kernel(game, mode);
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> current(k);
    std::vector<std::int64_t> scratch(m);
    for (std::size_t node = begin; node < end; ++node) {
      StrategyProfile p = graph.profile(node);
      kernel.payoffs(p, current);
      for (std::size_t i = 0; i < k; ++i) {
        auto opts = options_for(kernel, p, i, scratch);
        if (opts.best <= current[i]) continue;
        const Vertex from = p[i];
        for (Vertex to : opts.responses) {
          p[i] = to;
          graph.arcs_[node].push_back({graph.node(p), i, to});
        }
        p[i] = from;
      }
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, count));
  if (threads == 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return graph;
}

std::optional<BestResponseCycle> find_best_response_cycle(
    std::size_t n_min, std::size_t n_max, std::size_t k_min, std::size_t k_max,
    GameMode mode, std::size_t threads) {
  for (std::size_t n = std::max<std::size_t>(n_min, 3); n <= n_max; ++n) {
    for (std::size_t k = std::max<std::size_t>(k_min, 1); k <= k_max && k < n; ++k) {
      Game game(cycle_instance(n, k));
      MoveGraph graph = build_move_graph(game, mode, 1'000'000, threads);
      auto loop = graph.find_cycle();
      if (!loop) continue;

      BestResponseCycle witness{game.instance(), {}, {}};
      const PayoffKernel kernel(game, mode);
      std::vector<std::int64_t> before(k), after(k);
      for (std::size_t s = 0; s < loop->size(); ++s) {
        witness.states.push_back(graph.profile((*loop)[s]));
        if (s == 0) continue;
        const auto& prev = witness.states[s - 1];
        const auto& next = witness.states[s];
        std::size_t player = 0;
        while (prev[player] == next[player]) ++player;
        kernel.payoffs(prev, before);
        kernel.payoffs(next, after);
        witness.moves.push_back({s, player, prev[player], next[player],
                                 kernel.to_rational(before[player]),
                                 kernel.to_rational(after[player])});
      }
      return witness;
    }
  }
  return std::nullopt;
}

GapMultiset::GapMultiset(std::vector<std::uint32_t> gaps) : values_(std::move(gaps)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::strong_ordering dominance_compare(const GapMultiset& a,
                                       const GapMultiset& b) {
  if (a.size() != b.size()) return b.size() <=> a.size();
  // Equal sizes: compare maxima, then the remainders.
  return a.values() <=> b.values();
}

GapMultiset cycle_potential(std::size_t n, std::span<const Vertex> profile) {
  std::vector<Vertex> sorted(profile.begin(), profile.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("potential: players must occupy distinct vertices");
  }
  if (sorted.empty() || sorted.back() >= n) {
    throw InputError("potential: profile must be non-empty and inside C_n");
  }
  std::vector<std::uint32_t> gaps;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    const std::size_t next = sorted[(j + 1) % sorted.size()];
    gaps.push_back(static_cast<std::uint32_t>(
        sorted.size() == 1 ? n : (next + n - sorted[j]) % n));
  }
  return GapMultiset(std::move(gaps));
}

}  // namespace vgame
