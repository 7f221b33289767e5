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

#include "sinkeq/game_io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sinkeq/error.h"

namespace sinkeq {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kSchema, "field '" + field + "': " + what);
}

const json& Require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) SchemaError(key, "missing");
  return *it;
}

std::vector<double> NumberArray(const json& node, const std::string& field) {
  if (!node.is_array()) SchemaError(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) {
    if (!node[k].is_number()) {
      SchemaError(field + "[" + std::to_string(k) + "]", "expected a number");
    }
    out.push_back(node[k].get<double>());
  }
  return out;
}

}  // namespace

NormalFormGame GameFromJson(const json& doc) {
  if (!doc.is_object()) SchemaError("<root>", "expected an object");

  const json& counts_node = Require(doc, "action_counts");
  if (!counts_node.is_array() || counts_node.empty()) {
    SchemaError("action_counts", "expected a nonempty array of integers");
  }
  std::vector<int> counts;
  for (std::size_t k = 0; k < counts_node.size(); ++k) {
    const json& c = counts_node[k];
    if (!c.is_number_integer() || c.get<long long>() < 1 ||
        c.get<long long>() > (1LL << 30)) {
      SchemaError("action_counts[" + std::to_string(k) + "]",
                  "expected a positive integer");
    }
    counts.push_back(c.get<int>());
  }

  std::vector<double> welfare = NumberArray(Require(doc, "welfare"), "welfare");

  const json& util_node = Require(doc, "utilities");
  if (!util_node.is_array()) SchemaError("utilities", "expected an array");
  std::vector<std::vector<double>> utilities;
  for (std::size_t i = 0; i < util_node.size(); ++i) {
    utilities.push_back(
        NumberArray(util_node[i], "utilities[" + std::to_string(i) + "]"));
  }

  std::vector<std::vector<std::string>> labels;
  if (auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) SchemaError("labels", "expected an array of arrays");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& row = (*it)[i];
      const std::string field = "labels[" + std::to_string(i) + "]";
      if (!row.is_array()) SchemaError(field, "expected an array of strings");
      std::vector<std::string> names;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (!row[k].is_string()) {
          SchemaError(field + "[" + std::to_string(k) + "]",
                      "expected a string");
        }
        names.push_back(row[k].get<std::string>());
      }
      labels.push_back(std::move(names));
    }
  }

  try {
    return NormalFormGame(std::move(counts), std::move(welfare),
                          std::move(utilities), std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchema, e.what());
  }
}

NormalFormGame ParseGame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("malformed JSON: ") + e.what());
  }
  return GameFromJson(doc);
}

NormalFormGame LoadGame(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kSchema, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGame(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json GameToJson(const NormalFormGame& game) {
  nlohmann::ordered_json doc;
  doc["action_counts"] = std::vector<int>(game.action_counts().begin(),
                                          game.action_counts().end());
  doc["welfare"] = std::vector<double>(game.welfare_table().begin(),
                                       game.welfare_table().end());
  auto& utilities = doc["utilities"] = nlohmann::ordered_json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    utilities.push_back(std::vector<double>(game.utility_table(i).begin(),
                                            game.utility_table(i).end()));
  }
  if (game.has_labels()) doc["labels"] = game.action_labels();
  return doc;
}

void SaveGame(const NormalFormGame& game, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kSchema, "cannot write " + path.string());
  out << GameToJson(game).dump(2) << '\n';
}

}  // namespace sinkeq
