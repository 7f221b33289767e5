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

#include "sinkeq/instance_io.h"

#include <fstream>
#include <sstream>
#include <string>

#include "sinkeq/error.h"

namespace sinkeq {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kSchema, "field '" + field + "': " + what);
}

template <typename T>
T Get(const json& doc, const char* key, T fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    SchemaError(key, "has the wrong type");
  }
}

template <typename T>
T GetRequired(const json& doc, const char* key) {
  if (!doc.contains(key)) SchemaError(key, "missing");
  return Get<T>(doc, key, T{});
}

CoveringInstance CoveringFromJson(const json& doc) {
  CoveringInstance instance;
  instance.values = GetRequired<std::vector<double>>(doc, "values");
  instance.noise_bias = Get<double>(doc, "bias", 0.0);
  instance.noise_scale = Get<double>(doc, "scale", 0.0);
  instance.seed = Get<std::uint64_t>(doc, "seed", 0);
  if (doc.contains("options")) {
    instance.coverage_options =
        Get<std::vector<std::vector<std::vector<int>>>>(doc, "options", {});
  } else {
    const int agents = GetRequired<int>(doc, "agents");
    const int max_cover = Get<int>(doc, "max_cover", 1);
    if (agents < 1) SchemaError("agents", "must be >= 1");
    instance.coverage_options.assign(
        agents,
        RegionSubsets(static_cast<int>(instance.values.size()), 1, max_cover));
  }
  ValidateCoveringInstance(instance);
  return instance;
}

RadioInstance RadioFromJson(const json& doc) {
  const double alpha = Get<double>(doc, "alpha", 1.0);
  const std::uint64_t seed = Get<std::uint64_t>(doc, "seed", 0);
  RadioInstance instance;
  if (doc.contains("weights")) {
    instance.weights =
        GetRequired<std::vector<std::vector<double>>>(doc, "weights");
    instance.alpha = alpha;
    instance.seed = seed;
    instance.estimates =
        Get<std::vector<std::vector<std::vector<double>>>>(doc, "estimates", {});
  } else {
    instance = SampleRadioInstance(GetRequired<int>(doc, "agents"), alpha, seed);
  }
  ValidateRadioInstance(instance);
  return instance;
}

}  // namespace

Instance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) SchemaError("<root>", "expected an object");
  const std::string kind = GetRequired<std::string>(doc, "kind");
  try {
    if (kind == "covering") return CoveringFromJson(doc);
    if (kind == "radio") return RadioFromJson(doc);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchema) throw;
    throw Error(ErrorCode::kSchema, e.what());
  }
  SchemaError("kind", "expected \"covering\" or \"radio\"");
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kSchema, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema,
                path.string() + ": malformed JSON: " + e.what());
  }
  try {
    return InstanceFromJson(doc);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json InstanceToJson(const Instance& instance) {
  nlohmann::ordered_json doc;
  if (const auto* covering = std::get_if<CoveringInstance>(&instance)) {
    doc["kind"] = "covering";
    doc["values"] = covering->values;
    doc["options"] = covering->coverage_options;
    doc["bias"] = covering->noise_bias;
    doc["scale"] = covering->noise_scale;
    doc["seed"] = covering->seed;
  } else {
    const auto& radio = std::get<RadioInstance>(instance);
    doc["kind"] = "radio";
    doc["weights"] = radio.weights;
    doc["alpha"] = radio.alpha;
    if (!radio.estimates.empty()) doc["estimates"] = radio.estimates;
    doc["seed"] = radio.seed;
  }
  return doc;
}

NormalFormGame MakeGame(const Instance& instance) {
  return std::visit(
      [](const auto& spec) -> NormalFormGame {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, CoveringInstance>) {
          return MakeCoveringGame(spec);
        } else {
          return MakeRadioGame(spec);
        }
      },
      instance);
}

}  // namespace sinkeq
