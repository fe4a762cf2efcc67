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

#ifndef VGAME_INSTANCE_IO_HPP_
#define VGAME_INSTANCE_IO_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "vgame/graph.hpp"

namespace vgame {

// Instance files are JSON objects:
//
//   {"n": 3, "edges": [[0,1],[1,2]], "weights": [1,1,1],
//    "facilities": [0,1,2], "k": 2}
//
// "weights" and "facilities" are optional. Artifact files may also carry
// "name", "certificate" and "profiles" blocks, which parse_instance skips.
// Any other key is rejected.
//
// Throws InputError with the offending line/column or field name.
GameInstance parse_instance(std::string_view text);

// Deterministic: edges sorted, arrays in id order, fixed key order.
// "weights"/"facilities" are emitted only when they differ from the
// defaults. No trailing newline.
std::string serialize_instance(const GameInstance& instance);

// Graphviz text. Facility vertices are circles, others boxes; weights other
// than 1 are labeled "w=<weight>"; with a profile, occupied vertices are
// filled and labeled with their players ("x2" when two players share).
// Throws InputError if the profile uses a non-facility vertex or has the
// wrong length.
std::string export_dot(const GameInstance& instance,
                       std::optional<std::span<const Vertex>> profile =
                           std::nullopt);

}  // namespace vgame

#endif  // VGAME_INSTANCE_IO_HPP_
