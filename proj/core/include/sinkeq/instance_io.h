// Copyright 2026 The sinkeq Authors
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

#ifndef SINKEQ_INSTANCE_IO_H_
#define SINKEQ_INSTANCE_IO_H_

#include <filesystem>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "sinkeq/covering.h"
#include "sinkeq/game.h"
#include "sinkeq/radio.h"

namespace sinkeq {

using Instance = std::variant<CoveringInstance, RadioInstance>;

// Instance spec files. Covering:
//   {"kind": "covering", "values": [..],
//    "options": [[[r, ..], ..], ..]            // per agent, or instead
//    "agents": n, "max_cover": k,              // all 1..k subsets per agent
//    "bias": c, "scale": d, "seed": s}
// Radio:
//   {"kind": "radio", "weights": [[..], ..],   // or "agents": n (sampled)
//    "alpha": a, "estimates": [[[..]]]?, "seed": s}
// Errors throw Error(kSchema) naming the field.
Instance InstanceFromJson(const nlohmann::json& doc);
Instance LoadInstance(const std::filesystem::path& path);

nlohmann::ordered_json InstanceToJson(const Instance& instance);

NormalFormGame MakeGame(const Instance& instance);

}  // namespace sinkeq

#endif  // SINKEQ_INSTANCE_IO_H_
