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

#ifndef SINKEQ_GAME_IO_H_
#define SINKEQ_GAME_IO_H_

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sinkeq/game.h"

namespace sinkeq {

// Game file schema:
//   {"action_counts": [..], "welfare": [..], "utilities": [[..], ..],
//    "labels": [[..], ..]}            // labels optional
// Flat arrays use the JointToIndex order. Violations throw Error(kSchema)
// naming the offending field (and line/column for malformed JSON).
NormalFormGame GameFromJson(const nlohmann::json& doc);
NormalFormGame ParseGame(std::string_view text);
NormalFormGame LoadGame(const std::filesystem::path& path);

nlohmann::ordered_json GameToJson(const NormalFormGame& game);
void SaveGame(const NormalFormGame& game, const std::filesystem::path& path);

}  // namespace sinkeq

#endif  // SINKEQ_GAME_IO_H_
