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


#ifndef VGAME_TOOLS_REPORT_HPP_
#define VGAME_TOOLS_REPORT_HPP_

// JSON views of library results for the command-line tool.

#include <span>

#include "json.hpp"
#include "vgame/cycle.hpp"
#include "vgame/dynamics.hpp"
#include "vgame/equilibria.hpp"
#include "vgame/reductions.hpp"

namespace vgame::tools {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const Cost& cost);
Json to_json(const ExtendedRational& value);
Json to_json(std::span<const Vertex> profile);
Json to_json(const PayoffVector& payoffs);
Json to_json(const GameInstance& instance);
Json to_json(const MoveRecord& move);
Json to_json(const DynamicRun& run);
Json to_json(const CycleProfile& profile);
Json to_json(const EquilibriumReport& report);
Json to_json(const PayoffBoundReport& report);
Json to_json(const InequalityCheck& check);

}  // namespace vgame::tools

#endif  // VGAME_TOOLS_REPORT_HPP_
