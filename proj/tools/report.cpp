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


#include "report.hpp"

#include <variant>

#include "vgame/instance_io.hpp"

namespace vgame::tools {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Cost& cost) {
  if (!cost.is_finite()) return "inf";
  return cost.value();
}

Json to_json(const ExtendedRational& value) { return to_string(value); }

Json to_json(std::span<const Vertex> profile) {
  Json out = Json::array();
  for (Vertex v : profile) out.push_back(v);
  return out;
}

Json to_json(const PayoffVector& payoffs) {
  Json out = Json::array();
  for (const auto& p : payoffs) out.push_back(to_json(p));
  return out;
}

Json to_json(const GameInstance& instance) {
  return Json::parse(serialize_instance(instance));
}

Json to_json(const MoveRecord& move) {
  return Json{{"step", move.step},
              {"player", move.player},
              {"from", move.from},
              {"to", move.to},
              {"payoff_before", to_json(move.payoff_before)},
              {"payoff_after", to_json(move.payoff_after)}};
}

Json to_json(const DynamicRun& run) {
  Json out;
  std::visit(
      [&](const auto& outcome) {
        using T = std::decay_t<decltype(outcome)>;
        if constexpr (std::is_same_v<T, Converged>) {
          out["outcome"] = "converged";
          out["steps"] = outcome.steps;
          out["profile"] = to_json(outcome.profile);
        } else if constexpr (std::is_same_v<T, Cycled>) {
          out["outcome"] = "cycled";
          Json states = Json::array();
          for (const auto& s : outcome.states) states.push_back(to_json(s));
          out["cycle"] = states;
        } else {
          out["outcome"] = "exhausted";
          out["max_steps"] = outcome.max_steps;
          out["profile"] = to_json(outcome.last);
        }
      },
      run.outcome);
  Json trace = Json::array();
  for (const auto& move : run.trace) trace.push_back(to_json(move));
  out["trace"] = trace;
  return out;
}

Json to_json(const CycleProfile& profile) {
  return Json{{"facilities", profile.facilities}, {"counts", profile.counts},
              {"gaps", profile.gaps},             {"a", profile.halves},
              {"b", profile.parities},            {"gamma", to_json(profile.gamma)}};
}

Json to_json(const EquilibriumReport& report) {
  Json out;
  out["mode"] = std::string(to_string(report.mode));
  out["examined"] = report.examined;
  out["count"] = report.equilibria.size();
  Json list = Json::array();
  for (const auto& entry : report.equilibria) {
    list.push_back(Json{{"profile", to_json(entry.profile)},
                        {"payoffs", to_json(entry.payoffs)},
                        {"cost", to_json(entry.cost)}});
  }
  out["equilibria"] = list;
  out["min_cost"] = report.min_cost ? to_json(*report.min_cost) : Json();
  out["max_cost"] = report.max_cost ? to_json(*report.max_cost) : Json();
  out["discrepancy"] =
      report.discrepancy ? to_json(*report.discrepancy) : Json("undefined");
  return out;
}

Json to_json(const PayoffBoundReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"condition", v.condition},
                              {"profile", to_json(v.profile)},
                              {"player", v.player},
                              {"payoff", to_json(v.payoff)}});
  }
  return Json{{"lower", to_json(report.lower)},
              {"upper", to_json(report.upper)},
              {"ok", report.ok()},
              {"violations", violations}};
}

Json to_json(const InequalityCheck& check) {
  return Json{{"statement", check.statement},
              {"lhs", to_json(check.lhs)},
              {"rhs", to_json(check.rhs)},
              {"holds", check.holds}};
}

}  // namespace vgame::tools
