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


// Acceptance suite: one PASS/FAIL line per criterion. All checks use exact
// rational arithmetic; every tolerance below is zero violations.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <unistd.h>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "oracle/generators.hpp"
#include "vgame/cycle.hpp"
#include "vgame/dynamics.hpp"
#include "vgame/equilibria.hpp"
#include "vgame/instance_io.hpp"
#include "vgame/reductions.hpp"
#include "vgame/structure.hpp"

namespace {

using namespace vgame;

struct Verdict {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kViolationTolerance = 0;
constexpr std::size_t kLemmaInstances = 500;
constexpr std::size_t kExpansionInstances = 50;
constexpr std::uint64_t kGadgetSeed = 1;
constexpr std::uint64_t kGadgetBudget = 100000;

std::size_t worker_count() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Random connected standard instances shared by criteria 2 and 3.
GameInstance lemma_instance(std::size_t index) {
  const std::size_t n = 4 + index % 5;
  const std::size_t k = 2 + (index / 5) % 2;
  return random_connected_instance(n, k, 1000 + index);
}

Verdict criterion1() {
  std::uint64_t profiles = 0, nash_mismatch = 0, payoff_mismatch = 0;
  std::vector<std::string> examples;
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t k = 2; k <= 4 && k < n; ++k) {
      Game game(cycle_instance(n, k));
      for (const auto& f : enumerate_profiles(game.instance())) {
        ++profiles;
        const CycleProfile p = canonicalize(n, f);
        const bool closed = check_cycle_conditions(p).holds;
        const bool engine = is_nash(game, f, GameMode::shared);
        if (closed != engine) {
          ++nash_mismatch;
          if (examples.size() < 3) {
            examples.push_back(fmt::format("C{} {{{}}} conditions={} engine={}", n,
                                           fmt::join(f, ","), closed, engine));
          }
        }
        const PayoffVector engine_pay = payoffs(game, f, GameMode::shared);
        const PayoffVector closed_pay = cycle_payoffs(p);
        for (std::size_t i = 0; i < k; ++i) {
          auto slot = std::find(p.facilities.begin(), p.facilities.end(), f[i]);
          if (closed_pay[static_cast<std::size_t>(slot - p.facilities.begin())] !=
              engine_pay[i]) {
            ++payoff_mismatch;
            break;
          }
        }
      }
    }
  }
  Verdict v;
  v.pass = nash_mismatch <= kViolationTolerance && payoff_mismatch <= kViolationTolerance;
  v.detail = fmt::format(
      "{} profiles; payoff mismatches {}; condition/engine Nash disagreements {}",
      profiles, payoff_mismatch, nash_mismatch);
  if (!examples.empty()) v.detail += fmt::format(" (e.g. {})", fmt::join(examples, "; "));
  return v;
}

Verdict criterion2() {
  std::uint64_t equilibria = 0, violations = 0;
  std::string first;
  for (std::size_t i = 0; i < kLemmaInstances; ++i) {
    const GameInstance inst = lemma_instance(i);
    const auto report = enumerate_equilibria(Game(inst), GameMode::shared,
                                             {kDefaultBudget, 1});
    equilibria += report.equilibria.size();
    const auto bounds = verify_payoff_bounds(report, inst);
    violations += bounds.violations.size();
    if (!bounds.ok() && first.empty()) {
      const auto& bad = bounds.violations.front();
      first = fmt::format(" first: instance {} player {} payoff {} ({})", i, bad.player,
                          to_string(bad.payoff), bad.condition);
    }
  }
  return {violations <= kViolationTolerance,
          fmt::format("{} instances, {} equilibria, {} bound violations{}",
                      kLemmaInstances, equilibria, violations, first)};
}

Verdict criterion3() {
  std::uint64_t pairs = 0, stars = 0, proximity = 0, cost = 0, audit = 0;
  for (std::size_t i = 0; i < kLemmaInstances; ++i) {
    const GameInstance inst = lemma_instance(i);
    const Game game(inst);
    const auto report = enumerate_equilibria(game, GameMode::shared, {kDefaultBudget, 1});
    for (const auto& eq : report.equilibria) {
      const Graph h = delaunay_graph(game, eq.profile);
      const auto partition = star_partition(h);
      if (!audit_star_partition(h, partition).empty()) ++audit;
      for (const auto& other : report.equilibria) {
        ++pairs;
        const auto close = verify_close_lemma(game, eq.profile, other.profile);
        for (const auto& s : close.stars) {
          ++stars;
          if (!s.proximity_ok) ++proximity;
          if (!s.cost_bound_ok) ++cost;
        }
      }
    }
  }
  const std::uint64_t total = proximity + cost + audit;
  return {total <= kViolationTolerance,
          fmt::format("{} equilibrium pairs, {} stars; proximity violations {}, "
                      "cost bound violations {}, partition audit failures {}",
                      pairs, stars, proximity, cost, audit)};
}

Verdict criterion4() {
  std::uint64_t mismatched = 0, outside = 0;
  std::string first;
  for (std::size_t i = 0; i < kExpansionInstances; ++i) {
    const std::size_t n = 3 + i % 4;
    const GameInstance inst = oracle::random_generalized(5000 + i, n, 3, 2);
    const GameInstance expanded = expand_generalized(inst);
    std::set<StrategyProfile> original, lifted;
    for (const auto& e : enumerate_equilibria(Game(inst), GameMode::shared).equilibria) {
      original.insert(e.profile);
    }
    bool uses_outside = false;
    for (const auto& e :
         enumerate_equilibria(Game(expanded), GameMode::shared,
                              {kDefaultBudget * 10, worker_count()})
             .equilibria) {
      lifted.insert(e.profile);
      for (Vertex v : e.profile) {
        if (v >= inst.vertex_count() || !inst.is_facility(v)) uses_outside = true;
      }
    }
    if (uses_outside) ++outside;
    if (original != lifted) {
      ++mismatched;
      if (first.empty()) {
        first = fmt::format(" first: instance {} has {} vs {} equilibria", i,
                            original.size(), lifted.size());
      }
    }
  }
  return {mismatched + outside <= kViolationTolerance,
          fmt::format("{} instances; equilibrium sets differ on {}, expansion "
                      "equilibria outside U on {}{}",
                      kExpansionInstances, mismatched, outside, first)};
}

Verdict criterion5() {
  const auto found = gadget_search(kGadgetSeed, kGadgetBudget, worker_count());
  if (!found) return {false, "gadget search found no gadget"};
  const Gadget& gadget = found->gadget;
  bool certified = verify_gadget(gadget.graph).has_value();
  std::vector<Edge> edges(gadget.graph.edges().begin(), gadget.graph.edges().end());
  const auto gadget_report = enumerate_equilibria(
      Game(build_instance(9, edges, std::nullopt, std::nullopt, 2)), GameMode::shared);
  certified = certified && gadget_report.examined == 45 &&
              gadget_report.equilibria.empty();

  struct Case {
    const char* name;
    ThreePartitionInstance instance;
    bool expected;
  };
  const std::array<Case, 2> cases{{
      {"B=9", {2, {3, 3, 3, 3, 3, 3}, 9}, true},
      {"B=16", {2, {5, 5, 5, 5, 5, 7}, 16}, false},
  }};
  bool pass = certified;
  std::string detail = fmt::format("gadget candidate {} certified={}", found->candidate,
                                   certified);
  for (const auto& c : cases) {
    const auto constants = ReductionConstants::compute(c.instance);
    std::size_t holding = 0;
    for (const auto& check : check_constant_inequalities(c.instance, constants)) {
      holding += check.holds ? 1 : 0;
    }
    const auto round = reduction_roundtrip(c.instance, gadget, {kDefaultBudget, worker_count()});
    const bool ok = holding == 5 && round.partition_exists == c.expected &&
                    round.agrees();
    pass = pass && ok;
    detail += fmt::format("; {}: c={} d={} inequalities {}/5, partition={} nash={}{}",
                          c.name, constants.c, constants.d, holding,
                          round.partition_exists, round.nash_exists,
                          round.agrees() ? "" : " (disagree)");
  }
  return {pass, detail};
}

Verdict criterion6() {
  const auto witness = find_best_response_cycle(3, 12, 1, 3, GameMode::shared, worker_count());
  std::uint64_t starts = 0, steps = 0, increases = 0, unconverged = 0;
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t k = 1; k <= 3 && k < n; ++k) {
      const Game game(cycle_instance(n, k));
      for (const auto& start : enumerate_profiles(game.instance())) {
        if (std::adjacent_find(start.begin(), start.end()) != start.end()) continue;
        ++starts;
        const auto run = run_dynamic(game, start, GameMode::disjoint, {});
        if (!std::holds_alternative<Converged>(run.outcome)) ++unconverged;
        StrategyProfile state = start;
        for (const auto& move : run.trace) {
          ++steps;
          const GapMultiset before = cycle_potential(n, state);
          state[move.player] = move.to;
          if (dominance_compare(before, cycle_potential(n, state)) !=
              std::strong_ordering::greater) {
            ++increases;
          }
        }
      }
    }
  }
  std::string where = "none";
  if (witness) {
    where = fmt::format("C{} k={} loop of {} moves", witness->instance.vertex_count(),
                        witness->instance.player_count(), witness->moves.size());
  }
  return {witness.has_value() && increases <= kViolationTolerance && unconverged == 0,
          fmt::format("shared witness: {}; disjoint: {} starts, {} moves, {} potential "
                      "violations, {} unconverged",
                      where, starts, steps, increases, unconverged)};
}

Verdict criterion7() {
  bool pass = true;
  Rational last(0);
  std::vector<std::string> parts;
  for (std::size_t a = 1; a <= 3; ++a) {
    const std::size_t k = 2, b = a * a;
    const auto fam = discrepancy_family(k, a, b);
    const Game game(fam.instance);
    const bool nash = is_nash(game, fam.good, GameMode::shared) &&
                      is_nash(game, fam.bad, GameMode::shared);
    const bool size = fam.instance.vertex_count() == k * (2 * a + b + 2);
    const Rational ratio(social_cost(game, fam.bad).value(),
                         social_cost(game, fam.good).value());
    pass = pass && nash && size && ratio > last;
    last = ratio;
    parts.push_back(fmt::format("a={} n={} ratio={}{}", a, fam.instance.vertex_count(),
                                to_string(ratio), nash ? "" : " (not Nash)"));
  }
  return {pass, fmt::format("{}", fmt::join(parts, ", "))};
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  pclose(pipe);
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict criterion8(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given (--cli)"};
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt::format("vgame-acceptance-{}", getpid());
  fs::create_directories(dir);
  const std::string inst = (dir / "instance.json").string();
  std::ofstream(inst) << serialize_instance(random_connected_instance(9, 3, 42));
  const std::string config = (dir / "config.json").string();
  std::ofstream(config) << R"({"rows":[{"family":{"k":2,"a":1}},{"cycle":{"n":8,"k":3}},)"
                        << R"({"random":{"n":7,"k":2,"seed":3,"count":2}}]})";

  struct Command {
    std::string args;
    bool threads;
    std::vector<std::string> files;
  };
  const std::vector<Command> commands{
      {"analyze --instance " + inst + " --profile 0,1,2", true, {}},
      {"equilibria --instance " + inst, true, {}},
      {"equilibria --instance " + inst + " --mode disjoint", true, {}},
      {"dynamics --instance " + inst + " --start 0,0,0 --trace {dir}/trace.jsonl", true,
       {"trace.jsonl"}},
      {"dynamics --instance " + inst +
           " --start 0,1,2 --selection random --tie-break random --seed 11",
       true, {}},
      {"dynamics --find-cycle --n-max 8", true, {}},
      {"cycle-check --n 9 --positions 0,1,2", false, {}},
      {"reduce --a 3,3,3,3,3,3 --B 9", true, {}},
      {"gadget-search --seed 3 --budget 20000 --out {dir}/gadget.json", true, {"gadget.json"}},
      {"family --k 2 --a 2", false, {}},
      {"export-dot --instance " + inst + " --profile 0,1,2 --out {dir}/g.dot", false,
       {"g.dot"}},
      {"experiments --config " + config + " --table {dir}/table.txt", true, {"table.txt"}},
  };
  std::size_t differing = 0;
  std::vector<std::string> bad;
  for (const auto& cmd : commands) {
    std::string args = cmd.args;
    for (auto pos = args.find("{dir}"); pos != std::string::npos; pos = args.find("{dir}")) {
      args.replace(pos, 5, dir.string());
    }
    std::vector<std::string> variants{"", ""};
    if (cmd.threads) variants = {" --threads 1", " --threads 4"};
    std::string reference;
    std::vector<std::string> reference_files;
    bool same = true;
    for (std::size_t round = 0; round < 2 * variants.size(); ++round) {
      const std::string out =
          run_capture(fmt::format("\"{}\" {}{}", cli, args, variants[round % variants.size()]));
      std::vector<std::string> files;
      for (const auto& f : cmd.files) files.push_back(slurp(dir / f));
      if (round == 0) {
        reference = out;
        reference_files = files;
        same = same && !out.empty();
      } else {
        same = same && out == reference && files == reference_files;
      }
    }
    if (!same) {
      ++differing;
      bad.push_back(args.substr(0, args.find(' ')));
    }
  }
  fs::remove_all(dir);
  std::string detail = fmt::format("{} command lines x 4 runs, {} not byte-identical",
                                   commands.size(), differing);
  if (!bad.empty()) detail += fmt::format(" ({})", fmt::join(bad, ", "));
  return {differing == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::stoi(argv[++i]));
    } else if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else {
      std::cerr << "usage: vgame_acceptance [--criterion N]... [--cli PATH]\n";
      return 2;
    }
  }
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::vector<std::function<Verdict()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, [&] { return criterion8(cli); }};
  bool all = true;
  for (int c : selected) {
    if (c < 1 || c > 8) {
      std::cerr << "unknown criterion " << c << '\n';
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[static_cast<std::size_t>(c - 1)]();
    } catch (const std::exception& e) {
      v = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << fmt::format("criterion {}: {}  {} [{:.2f}s]\n", c,
                             v.pass ? "PASS" : "FAIL", v.detail, secs)
              << std::flush;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
