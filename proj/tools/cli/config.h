// Copyright 2026 The idcoherence Authors
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

#ifndef IDC_CLI_CONFIG_H
#define IDC_CLI_CONFIG_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idc/experiments.h"
#include "json.hpp"

namespace idc::cli {

/// Malformed or schema-violating scenario configuration (exit code 2).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SweepSection {
    Figure figure = Figure::Custom;
    std::vector<Axis> axes;  // empty means the figure's preset axes

    bool operator==(const SweepSection &) const = default;
};

struct OutputSection {
    std::string path;    // empty means stdout
    std::string format;  // "csv", "json" or empty for the command default

    bool operator==(const OutputSection &) const = default;
};

struct ScenarioConfig {
    GameParameters game;
    std::optional<SweepSection> sweep;
    std::optional<OutputSection> output;

    bool operator==(const ScenarioConfig &) const = default;
};

/// Strict schema: unknown keys are rejected, all documented keys of a present
/// section are required. Throws ConfigError.
ScenarioConfig config_from_json(const nlohmann::json &doc);
nlohmann::json config_to_json(const ScenarioConfig &config);

ScenarioConfig load_config(const std::string &path);

/// The scenario a preset name stands for, sweep section included.
ScenarioConfig preset_config(Figure figure);

SweepSpec sweep_spec_from(const ScenarioConfig &config);

nlohmann::json complex_to_json(Complex z);

}  // namespace idc::cli

#endif
