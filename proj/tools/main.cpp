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


// vgame: command-line front end. Every command prints one JSON object on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 negative decision, 2 input error, 3 budget
// exceeded.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "report.hpp"
#include "vgame/instance_io.hpp"
#include "vgame/structure.hpp"

#ifndef VGAME_DEFAULT_GADGET
#define VGAME_DEFAULT_GADGET ""
#endif

namespace vgame::tools {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBudgetError = 3;

struct Common {
  std::string instance_path = "-";
  std::string mode = "shared";
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::uint64_t> budget;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path));
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path));
  out << text;
}

std::uint64_t effective_budget(const Common& common) {
  if (common.budget) return *common.budget;
  if (const char* env = std::getenv("VGG_BUDGET")) {
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InputError(fmt::format("VGG_BUDGET='{}' is not a count", env));
  }
  return kDefaultBudget;
}

EnumerationOptions enumeration_options(const Common& common) {
  return {effective_budget(common), common.threads};
}

Gadget default_gadget() {
  const std::string path = VGAME_DEFAULT_GADGET;
  if (!path.empty()) {
    std::ifstream in(path);
    if (in) return load_gadget(std::string(std::istreambuf_iterator<char>(in), {}));
  }
  std::cerr << "vgame: bundled gadget not found, searching with seed 1\n";
  auto found = gadget_search(1, 1'000'000);
  if (!found) throw std::runtime_error("gadget search failed");
  return found->gadget;
}

Json profile_analysis(const Game& game, const StrategyProfile& profile,
                      GameMode mode) {
  Json out;
  out["profile"] = to_json(profile);
  out["payoffs"] = to_json(payoffs(game, profile, mode));
  out["social_cost"] = to_json(social_cost(game, profile));
  Json players = Json::array();
  for (std::size_t i = 0; i < profile.size(); ++i) {
    auto br = best_responses(game, profile, i, mode);
    players.push_back(Json{{"player", i},
                           {"happy", is_happy(game, profile, i, mode)},
                           {"best_response", to_json(br.vertices)},
                           {"best_value", to_json(br.value)}});
  }
  out["players"] = players;
  out["nash"] = is_nash(game, profile, mode);
  Json delaunay = Json::array();
  const Graph h = delaunay_graph(game, profile);
  for (auto [u, v] : h.edges()) {
    delaunay.push_back({u, v});
  }
  out["delaunay_edges"] = delaunay;
  return out;
}

int run_analyze(const Common& common, const std::vector<Vertex>& profile) {
  Game game(parse_instance(read_text(common.instance_path)));
  const auto& inst = game.instance();
  const GameMode mode = parse_game_mode(common.mode);
  Json out;
  out["command"] = "analyze";
  out["n"] = inst.vertex_count();
  out["edges"] = inst.graph().edge_count();
  out["k"] = inst.player_count();
  out["facilities"] = inst.facilities().size();
  out["total_weight"] = inst.total_weight();
  out["connected"] = is_connected(inst);
  out["standard"] = inst.is_standard();
  out["mode"] = std::string(to_string(mode));
  if (!profile.empty()) out["analysis"] = profile_analysis(game, profile, mode);
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_equilibria(const Common& common) {
  Game game(parse_instance(read_text(common.instance_path)));
  const GameMode mode = parse_game_mode(common.mode);
  auto report = enumerate_equilibria(game, mode, enumeration_options(common));
  Json out;
  out["command"] = "equilibria";
  out["n"] = game.vertex_count();
  out["k"] = game.player_count();
  out.update(to_json(report));
  const auto& inst = game.instance();
  if (mode == GameMode::shared && inst.is_standard() && is_connected(inst)) {
    out["payoff_bounds"] = to_json(verify_payoff_bounds(report, inst));
  }
  std::cout << out.dump(2) << '\n';
  return report.equilibria.empty() ? kNegative : kOk;
}

struct DynamicsArgs {
  std::vector<Vertex> start;
  std::string selection = "lowest";
  std::string tie_break = "lowest";
  std::uint64_t seed = 0;
  std::size_t max_steps = 10000;
  std::string trace_path;
  bool find_cycle = false;
  std::size_t n_min = 3, n_max = 12, k_min = 2, k_max = 3;
};

Policy::Selection parse_selection(const std::string& text) {
  if (text == "lowest") return Policy::Selection::lowest_index;
  if (text == "random") return Policy::Selection::seeded_random;
  throw InputError(fmt::format("unknown selection '{}'", text));
}

Policy::TieBreak parse_tie_break(const std::string& text) {
  if (text == "lowest") return Policy::TieBreak::lowest_vertex;
  if (text == "random") return Policy::TieBreak::seeded_random;
  throw InputError(fmt::format("unknown tie-break '{}'", text));
}

int run_dynamics(const Common& common, const DynamicsArgs& args) {
  const GameMode mode = parse_game_mode(common.mode);
  Json out;
  out["command"] = "dynamics";
  out["mode"] = std::string(to_string(mode));
  if (args.find_cycle) {
    auto witness = find_best_response_cycle(args.n_min, args.n_max, args.k_min,
                                            args.k_max, mode, common.threads);
    out["found"] = witness.has_value();
    if (witness) {
      out["n"] = witness->instance.vertex_count();
      out["k"] = witness->instance.player_count();
      Json states = Json::array();
      for (const auto& s : witness->states) states.push_back(to_json(s));
      out["cycle"] = states;
      Json moves = Json::array();
      for (const auto& m : witness->moves) moves.push_back(to_json(m));
      out["moves"] = moves;
    }
    std::cout << out.dump(2) << '\n';
    return witness ? kOk : kNegative;
  }

  Game game(parse_instance(read_text(common.instance_path)));
  if (args.start.empty()) throw InputError("dynamics: --start is required");
  Policy policy;
  policy.selection = parse_selection(args.selection);
  policy.tie_break = parse_tie_break(args.tie_break);
  policy.seed = args.seed;
  policy.max_steps = args.max_steps;
  auto run = run_dynamic(game, args.start, mode, policy);
  out["start"] = to_json(args.start);
  out["seed"] = args.seed;
  out.update(to_json(run));
  if (!args.trace_path.empty()) {
    std::string lines;
    for (const auto& move : run.trace) lines += to_json(move).dump() + '\n';
    write_text(args.trace_path, lines);
  }
  std::cout << out.dump(2) << '\n';
  return std::holds_alternative<Converged>(run.outcome) ? kOk : kNegative;
}

int run_cycle_check(std::size_t n, std::optional<std::size_t> k,
                    const std::vector<Vertex>& positions) {
  if (k && *k != positions.size()) {
    throw InputError(fmt::format("cycle-check: --k {} but {} positions", *k,
                                 positions.size()));
  }
  CycleProfile profile = canonicalize(n, positions);
  auto conditions = check_cycle_conditions(profile);
  Game game(cycle_instance(n, positions.size()));
  Json violated = Json::array();
  for (const auto& v : conditions.violations) violated.push_back(to_string(v));
  Json out;
  out["command"] = "cycle-check";
  out["n"] = n;
  out["k"] = positions.size();
  out["positions"] = to_json(positions);
  out["canonical"] = to_json(profile);
  out["payoffs"] = to_json(cycle_payoffs(profile));
  out["nash"] = conditions.holds;
  out["violated"] = violated;
  out["engine_nash"] = is_nash(game, positions, GameMode::shared);
  std::cout << out.dump(2) << '\n';
  return conditions.holds ? kOk : kNegative;
}

int run_reduce(const Common& common, const std::vector<std::int64_t>& values,
               std::int64_t bound, const std::string& gadget_path,
               const std::string& emit_path) {
  ThreePartitionInstance tp;
  tp.m = values.size() / 3;
  tp.a = values;
  tp.bound = bound;
  tp.validate();
  const Gadget gadget = gadget_path.empty()
                            ? default_gadget()
                            : load_gadget(read_text(gadget_path));
  auto game = build_3partition_game(tp, gadget);
  const auto partition = three_partition_oracle(tp);

  Json out;
  out["command"] = "reduce";
  out["m"] = tp.m;
  out["B"] = tp.bound;
  out["a"] = tp.a;
  out["c"] = game.constants.c;
  out["d"] = game.constants.d;
  Json inequalities = Json::array();
  for (const auto& check : check_constant_inequalities(tp, game.constants)) {
    inequalities.push_back(to_json(check));
  }
  out["inequalities"] = inequalities;
  out["n"] = game.instance.vertex_count();
  out["facilities"] = game.instance.facilities().size();
  out["k"] = game.instance.player_count();
  out["gadget_anchor"] = game.gadget_base + gadget.anchor;
  if (partition) {
    Json groups = Json::array();
    for (const auto& t : *partition) groups.push_back(t);
    out["partition"] = groups;
    Game g(game.instance);
    const auto profile = partition_profile(game, gadget, *partition);
    out["partition_profile"] = to_json(profile);
    out["partition_payoffs"] = to_json(payoffs(g, profile, GameMode::shared));
    out["partition_profile_nash"] = is_nash(g, profile, GameMode::shared);
  } else {
    out["partition"] = nullptr;
  }
  Game g(game.instance);
  const bool exists = nash_exists(g, GameMode::shared, enumeration_options(common));
  out["nash_exists"] = exists;
  out["agrees"] = exists == partition.has_value();
  if (!emit_path.empty()) write_text(emit_path, serialize_instance(game.instance) + '\n');
  std::cout << out.dump(2) << '\n';
  return exists ? kOk : kNegative;
}

int run_gadget_search(const Common& common, std::uint64_t seed,
                      std::uint64_t budget, const std::string& out_path) {
  auto found = gadget_search(seed, budget, common.threads);
  if (!found) {
    Json out{{"command", "gadget-search"},
             {"error", "budget"},
             {"message", fmt::format("no gadget among {} candidates", budget)},
             {"seed", seed},
             {"budget", budget}};
    std::cout << out.dump(2) << '\n';
    return kBudgetError;
  }
  const std::string text = gadget_to_json(*found);
  if (!out_path.empty()) write_text(out_path, text + '\n');
  std::cout << Json::parse(text).dump(2) << '\n';
  return kOk;
}

int run_family(std::size_t k, std::size_t a, std::size_t b,
               const std::string& out_path) {
  auto family = discrepancy_family(k, a, b);
  Json out;
  out["command"] = "family";
  out["k"] = k;
  out["a"] = a;
  out["b"] = b;
  out["n"] = family.instance.vertex_count();
  out["good"] = to_json(family.good);
  out["bad"] = to_json(family.bad);
  out["good_cost"] = to_json(family.good_cost);
  out["bad_cost"] = to_json(family.bad_cost);
  out["ratio"] = to_string(Rational(family.bad_cost.value(),
                                    family.good_cost.value()));
  out["instance"] = to_json(family.instance);
  if (!out_path.empty()) {
    write_text(out_path, serialize_instance(family.instance) + '\n');
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_export_dot(const Common& common, const std::vector<Vertex>& profile,
                   const std::string& out_path) {
  GameInstance inst = parse_instance(read_text(common.instance_path));
  std::optional<std::span<const Vertex>> shown;
  if (!profile.empty()) {
    validate_profile(Game(inst), profile);
    shown = profile;
  }
  write_text(out_path, export_dot(inst, shown));
  Json out{{"command", "export-dot"},
           {"path", out_path},
           {"vertices", inst.vertex_count()},
           {"edges", inst.graph().edge_count()}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

// One experiment row: instance label, enumeration summary, and the
// discrepancy normalized by sqrt(kn).
Json experiment_row(const std::string& label, const GameInstance& inst,
                    const EnumerationOptions& options) {
  Json row;
  row["label"] = label;
  row["n"] = inst.vertex_count();
  row["k"] = inst.player_count();
  try {
    Game game(inst);
    auto report = enumerate_equilibria(game, GameMode::shared, options);
    row["equilibria"] = report.equilibria.size();
    row["min_cost"] = report.min_cost ? to_json(*report.min_cost) : Json();
    row["max_cost"] = report.max_cost ? to_json(*report.max_cost) : Json();
    if (!report.discrepancy) {
      row["discrepancy"] = "undefined";
      row["ratio"] = nullptr;
    } else if (!report.discrepancy->is_finite()) {
      row["discrepancy"] = "inf";
      row["ratio"] = "inf";
    } else {
      const Rational& disc = report.discrepancy->value();
      row["discrepancy"] = to_string(disc);
      const double scale = std::sqrt(static_cast<double>(
          inst.vertex_count() * inst.player_count()));
      row["ratio"] = fmt::format(
          "{:.6f}", boost::rational_cast<double>(disc) / scale);
    }
  } catch (const BudgetExceeded& e) {
    row["error"] = "budget";
    row["message"] = e.what();
  }
  return row;
}

std::string cell(const Json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string aligned_table(const Json& rows) {
  const std::vector<std::string> columns = {
      "label", "n", "k", "equilibria", "min_cost", "max_cost", "discrepancy",
      "ratio", "error"};
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? cell(row[columns[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += fmt::format("{:<{}}", line[c], width[c]);
      if (c + 1 < line.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
  return out;
}

int run_experiments(const Common& common, const std::string& config_path,
                    const std::string& table_path) {
  Json config;
  try {
    config = Json::parse(read_text(config_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(fmt::format("experiments config: {}", e.what()));
  }
  EnumerationOptions options = enumeration_options(common);
  if (config.contains("budget")) options.budget = config["budget"].get<std::uint64_t>();
  Json rows = Json::array();
  const Json entries = config.value("rows", Json::array());
  for (const auto& entry : entries) {
    if (entry.contains("family")) {
      const auto& f = entry["family"];
      const auto k = f.at("k").get<std::size_t>();
      const auto a = f.at("a").get<std::size_t>();
      const auto b = f.contains("b") ? f["b"].get<std::size_t>() : a * a;
      auto family = discrepancy_family(k, a, b);
      Json row = experiment_row(fmt::format("family k={} a={} b={}", k, a, b),
                                family.instance, options);
      row["pair_ratio"] = to_string(
          Rational(family.bad_cost.value(), family.good_cost.value()));
      rows.push_back(row);
    } else if (entry.contains("cycle")) {
      const auto n = entry["cycle"].at("n").get<std::size_t>();
      const auto k = entry["cycle"].at("k").get<std::size_t>();
      rows.push_back(experiment_row(fmt::format("cycle n={} k={}", n, k),
                                    cycle_instance(n, k), options));
    } else if (entry.contains("random")) {
      const auto& r = entry["random"];
      const auto n = r.at("n").get<std::size_t>();
      const auto k = r.at("k").get<std::size_t>();
      const auto seed = r.value("seed", std::uint64_t{0});
      const auto count = r.value("count", std::size_t{1});
      for (std::size_t i = 0; i < count; ++i) {
        rows.push_back(experiment_row(
            fmt::format("random n={} k={} seed={}", n, k, seed + i),
            random_connected_instance(n, k, seed + i), options));
      }
    } else if (entry.contains("instance")) {
      const auto& spec = entry["instance"];
      const std::string text =
          spec.is_string() ? read_text(spec.get<std::string>()) : spec.dump();
      GameInstance inst = parse_instance(text);
      rows.push_back(experiment_row(
          entry.value("label", std::string("instance")), inst, options));
    } else {
      throw InputError(fmt::format("experiments: unknown row {}", entry.dump()));
    }
  }
  if (!table_path.empty()) write_text(table_path, aligned_table(rows));
  Json out{{"command", "experiments"}, {"rows", rows}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

void add_common(CLI::App* cmd, Common& common, bool instance, bool mode) {
  if (instance) {
    cmd->add_option("--instance", common.instance_path,
                    "Instance JSON path, '-' for stdin");
  }
  if (mode) {
    cmd->add_option("--mode", common.mode, "shared or disjoint")
        ->check(CLI::IsMember({"shared", "disjoint"}));
  }
  cmd->add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", common.budget,
                  "Enumeration budget in (multiset, deviation) checks");
}

int error_report(const char* kind, const std::string& message, int code) {
  Json out{{"error", kind}, {"message", message}};
  std::cout << out.dump(2) << '\n';
  std::cerr << "vgame: " << message << '\n';
  return code;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Voronoi games on graphs: equilibria, dynamics, reductions"};
  app.require_subcommand(1);
  Common common;

  std::vector<Vertex> profile;
  auto* analyze = app.add_subcommand("analyze", "Payoffs and best responses");
  add_common(analyze, common, true, true);
  analyze->add_option("--profile", profile, "Comma-separated facilities")
      ->delimiter(',');

  auto* equilibria = app.add_subcommand("equilibria", "Enumerate equilibria");
  add_common(equilibria, common, true, true);

  DynamicsArgs dyn;
  auto* dynamics = app.add_subcommand("dynamics", "Best-response dynamics");
  add_common(dynamics, common, true, true);
  dynamics->add_option("--start", dyn.start, "Start profile")->delimiter(',');
  dynamics->add_option("--selection", dyn.selection, "lowest or random");
  dynamics->add_option("--tie-break", dyn.tie_break, "lowest or random");
  dynamics->add_option("--seed", dyn.seed, "Seed for random policies");
  dynamics->add_option("--max-steps", dyn.max_steps, "Step limit");
  dynamics->add_option("--trace", dyn.trace_path, "Write moves as JSON lines");
  dynamics->add_flag("--find-cycle", dyn.find_cycle,
                     "Search cycles C_n for a best-response cycle");
  dynamics->add_option("--n-min", dyn.n_min);
  dynamics->add_option("--n-max", dyn.n_max);
  dynamics->add_option("--k-min", dyn.k_min);
  dynamics->add_option("--k-max", dyn.k_max);

  std::size_t cycle_n = 0;
  std::optional<std::size_t> cycle_k;
  std::vector<Vertex> positions;
  auto* cycle = app.add_subcommand("cycle-check", "Cycle conditions and payoffs");
  cycle->add_option("--n", cycle_n, "Cycle length")->required();
  cycle->add_option("--k", cycle_k, "Player count");
  cycle->add_option("--positions", positions, "Player positions")
      ->delimiter(',')
      ->required();

  std::vector<std::int64_t> values;
  std::int64_t bound = 0;
  std::string gadget_path, emit_path;
  auto* reduce = app.add_subcommand("reduce", "3-Partition reduction");
  add_common(reduce, common, false, false);
  reduce->add_option("--a", values, "3m integers")->delimiter(',')->required();
  reduce->add_option("--B", bound, "Target sum")->required();
  reduce->add_option("--gadget", gadget_path, "Gadget JSON");
  reduce->add_option("--emit-instance", emit_path, "Write the game instance");

  std::uint64_t seed = 1;
  std::uint64_t search_budget = 100000;
  std::string out_path;
  auto* search = app.add_subcommand("gadget-search", "Search a 9-vertex gadget");
  search->add_option("--seed", seed);
  search->add_option("--budget", search_budget, "Candidate graphs to try");
  search->add_option("--threads", common.threads)->check(CLI::PositiveNumber);
  search->add_option("--out", out_path, "Also write the gadget here");

  std::size_t fk = 2, fa = 1;
  std::optional<std::size_t> fb;
  auto* family = app.add_subcommand("family", "Discrepancy lower-bound family");
  family->add_option("--k", fk);
  family->add_option("--a", fa);
  family->add_option("--b", fb, "Leaves per hub (default a^2)");
  family->add_option("--out", out_path, "Write the instance JSON");

  auto* dot = app.add_subcommand("export-dot", "Write a DOT description");
  dot->add_option("--instance", common.instance_path);
  dot->add_option("--profile", profile)->delimiter(',');
  dot->add_option("--out", out_path, "Output path")->required();

  std::string config_path, table_path;
  auto* experiments = app.add_subcommand("experiments", "Run an experiment suite");
  add_common(experiments, common, false, false);
  experiments->add_option("--config", config_path, "Config JSON")->required();
  experiments->add_option("--table", table_path, "Aligned text table output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return error_report("input", e.what(), kInputError);
  }

  try {
    if (*analyze) return run_analyze(common, profile);
    if (*equilibria) return run_equilibria(common);
    if (*dynamics) return run_dynamics(common, dyn);
    if (*cycle) return run_cycle_check(cycle_n, cycle_k, positions);
    if (*reduce) return run_reduce(common, values, bound, gadget_path, emit_path);
    if (*search) return run_gadget_search(common, seed, search_budget, out_path);
    if (*family) return run_family(fk, fa, fb.value_or(fa * fa), out_path);
    if (*dot) return run_export_dot(common, profile, out_path);
    if (*experiments) return run_experiments(common, config_path, table_path);
  } catch (const InputError& e) {
    return error_report("input", e.what(), kInputError);
  } catch (const BudgetExceeded& e) {
    Json out{{"error", "budget"},
             {"message", e.what()},
             {"required", e.required()},
             {"budget", e.budget()}};
    std::cout << out.dump(2) << '\n';
    std::cerr << "vgame: " << e.what() << '\n';
    return kBudgetError;
  } catch (const nlohmann::json::exception& e) {
    return error_report("input", e.what(), kInputError);
  }
  return kInputError;
}

}  // namespace
}  // namespace vgame::tools

int main(int argc, char** argv) { return vgame::tools::dispatch(argc, argv); }
