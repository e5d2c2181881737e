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

#include "cli/config.h"

#include <fstream>
#include <set>
#include <sstream>

namespace idc::cli {

using nlohmann::json;

namespace {

void require_keys(const json &obj, const std::string &where, std::initializer_list<const char *> required,
                  std::initializer_list<const char *> optional = {}) {
    if (!obj.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    std::set<std::string> allowed;
    for (const char *key : required) {
        allowed.insert(key);
        if (!obj.contains(key)) {
            throw ConfigError(where + ": missing key '" + key + "'");
        }
    }
    for (const char *key : optional) {
        allowed.insert(key);
    }
    for (const auto &item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError(where + ": unknown key '" + item.key() + "'");
        }
    }
}

double number(const json &value, const std::string &where) {
    if (!value.is_number()) {
        throw ConfigError(where + ": expected a number");
    }
    return value.get<double>();
}

std::string text(const json &value, const std::string &where) {
    if (!value.is_string()) {
        throw ConfigError(where + ": expected a string");
    }
    return value.get<std::string>();
}

Complex complex_from(const json &value, const std::string &where) {
    if (!value.is_array() || value.size() != 2) {
        throw ConfigError(where + ": expected a [re, im] pair");
    }
    return {number(value[0], where + "[0]"), number(value[1], where + "[1]")};
}

std::array<double, kBasisDim> basis_map_from(const json &obj, const std::string &where) {
    require_keys(obj, where, {"dd", "du", "ud", "uu"});
    std::array<double, kBasisDim> out{};
    for (size_t i = 0; i < kBasisDim; i++) {
        std::string key(kBasisLabels[i]);
        out[i] = number(obj[key], where + "." + key);
    }
    return out;
}

json basis_map_to(const std::array<double, kBasisDim> &values) {
    json obj = json::object();
    for (size_t i = 0; i < kBasisDim; i++) {
        obj[std::string(kBasisLabels[i])] = values[i];
    }
    return obj;
}

std::array<double, 2> pair_from(const json &value, const std::string &where) {
    if (!value.is_array() || value.size() != 2) {
        throw ConfigError(where + ": expected a two-element array");
    }
    return {number(value[0], where + "[0]"), number(value[1], where + "[1]")};
}

Spin spin_from(const json &value, const std::string &where) {
    std::string s = text(value, where);
    if (s == "down") {
        return Spin::Down;
    }
    if (s == "up") {
        return Spin::Up;
    }
    throw ConfigError(where + ": spin must be \"down\" or \"up\"");
}

Statistics statistics_from(const json &value) {
    std::string s = text(value, "statistics");
    for (Statistics stats : {Statistics::Boson, Statistics::Fermion, Statistics::Distinguishable}) {
        if (to_string(stats) == s) {
            return stats;
        }
    }
    throw ConfigError("statistics: expected boson, fermion or distinguishable, got '" + s + "'");
}

PreparationSpec preparation_from(const json &obj) {
    if (!obj.is_object() || !obj.contains("kind")) {
        throw ConfigError("preparation: expected an object with a 'kind'");
    }
    std::string kind = text(obj["kind"], "preparation.kind");
    if (kind == "mixed_diagonal") {
        require_keys(obj, "preparation", {"kind", "weights"});
        return MixedDiagonal{basis_map_from(obj["weights"], "preparation.weights")};
    }
    if (kind == "pure_product") {
        require_keys(obj, "preparation", {"kind", "spins"});
        const json &spins = obj["spins"];
        if (!spins.is_array() || spins.size() != 2) {
            throw ConfigError("preparation.spins: expected [first, second]");
        }
        return PureProduct{spin_from(spins[0], "preparation.spins[0]"), spin_from(spins[1], "preparation.spins[1]")};
    }
    if (kind == "pure_spin_superposition") {
        require_keys(obj, "preparation", {"kind", "a", "b"});
        return PureSpinSuperposition{complex_from(obj["a"], "preparation.a"), complex_from(obj["b"], "preparation.b")};
    }
    throw ConfigError("preparation.kind: unknown kind '" + kind + "'");
}

json preparation_to(const PreparationSpec &prep) {
    if (const auto *mixed = std::get_if<MixedDiagonal>(&prep)) {
        return {{"kind", "mixed_diagonal"}, {"weights", basis_map_to(mixed->weights)}};
    }
    if (const auto *product = std::get_if<PureProduct>(&prep)) {
        return {{"kind", "pure_product"},
                {"spins", json::array({to_string(product->first), to_string(product->second)})}};
    }
    const auto &sup = std::get<PureSpinSuperposition>(prep);
    return {{"kind", "pure_spin_superposition"}, {"a", complex_to_json(sup.a)}, {"b", complex_to_json(sup.b)}};
}

SweepSection sweep_from(const json &obj) {
    require_keys(obj, "sweep", {"figure"}, {"axes"});
    SweepSection sweep;
    std::string name = text(obj["figure"], "sweep.figure");
    auto figure = parse_figure(name);
    if (!figure) {
        throw ConfigError("sweep.figure: unknown figure '" + name + "'");
    }
    sweep.figure = *figure;
    if (obj.contains("axes")) {
        const json &axes = obj["axes"];
        if (!axes.is_array()) {
            throw ConfigError("sweep.axes: expected an array");
        }
        for (size_t i = 0; i < axes.size(); i++) {
            std::string where = "sweep.axes[" + std::to_string(i) + "]";
            require_keys(axes[i], where, {"name", "min", "max", "points"});
            Axis axis;
            axis.name = text(axes[i]["name"], where + ".name");
            axis.min = number(axes[i]["min"], where + ".min");
            axis.max = number(axes[i]["max"], where + ".max");
            const json &points = axes[i]["points"];
            if (!points.is_number_unsigned()) {
                throw ConfigError(where + ".points: expected a nonnegative integer");
            }
            axis.points = points.get<size_t>();
            sweep.axes.push_back(axis);
        }
    }
    if (sweep.figure == Figure::Custom && sweep.axes.empty()) {
        throw ConfigError("sweep: a custom sweep needs explicit axes");
    }
    return sweep;
}

}  // namespace

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

ScenarioConfig config_from_json(const json &doc) {
    require_keys(doc, "config", {"preparation", "overlaps", "statistics", "channel"}, {"sweep", "output"});
    ScenarioConfig config;
    config.game.preparation = preparation_from(doc["preparation"]);

    const json &overlaps = doc["overlaps"];
    require_keys(overlaps, "overlaps", {"l", "r", "l_prime", "r_prime"});
    config.game.overlaps = {complex_from(overlaps["l"], "overlaps.l"), complex_from(overlaps["r"], "overlaps.r"),
                            complex_from(overlaps["l_prime"], "overlaps.l_prime"),
                            complex_from(overlaps["r_prime"], "overlaps.r_prime")};

    config.game.statistics = statistics_from(doc["statistics"]);

    const json &channel = doc["channel"];
    require_keys(channel, "channel", {"omega", "phases", "priors"});
    config.game.channel.omega = basis_map_from(channel["omega"], "channel.omega");
    config.game.channel.phi = pair_from(channel["phases"], "channel.phases");
    config.game.channel.priors = pair_from(channel["priors"], "channel.priors");

    if (doc.contains("sweep")) {
        config.sweep = sweep_from(doc["sweep"]);
    }
    if (doc.contains("output")) {
        const json &output = doc["output"];
        require_keys(output, "output", {}, {"path", "format"});
        OutputSection out;
        if (output.contains("path")) {
            out.path = text(output["path"], "output.path");
        }
        if (output.contains("format")) {
            out.format = text(output["format"], "output.format");
            if (out.format != "csv" && out.format != "json") {
                throw ConfigError("output.format: expected csv or json");
            }
        }
        config.output = out;
    }

    try {
        validate(config.game.preparation);
        config.game.overlaps.validate();
        config.game.channel.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return config;
}

json config_to_json(const ScenarioConfig &config) {
    const auto &game = config.game;
    json doc = {
        {"preparation", preparation_to(game.preparation)},
        {"overlaps",
         {{"l", complex_to_json(game.overlaps.l)},
          {"r", complex_to_json(game.overlaps.r)},
          {"l_prime", complex_to_json(game.overlaps.l_prime)},
          {"r_prime", complex_to_json(game.overlaps.r_prime)}}},
        {"statistics", to_string(game.statistics)},
        {"channel",
         {{"omega", basis_map_to(game.channel.omega)},
          {"phases", json::array({game.channel.phi[0], game.channel.phi[1]})},
          {"priors", json::array({game.channel.priors[0], game.channel.priors[1]})}}},
    };
    if (config.sweep) {
        json sweep = {{"figure", to_string(config.sweep->figure)}};
        if (!config.sweep->axes.empty()) {
            json axes = json::array();
            for (const auto &axis : config.sweep->axes) {
                axes.push_back({{"name", axis.name}, {"min", axis.min}, {"max", axis.max}, {"points", axis.points}});
            }
            sweep["axes"] = axes;
        }
        doc["sweep"] = sweep;
    }
    if (config.output) {
        json output = json::object();
        if (!config.output->path.empty()) {
            output["path"] = config.output->path;
        }
        if (!config.output->format.empty()) {
            output["format"] = config.output->format;
        }
        doc["output"] = output;
    }
    return doc;
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return config_from_json(doc);
}

ScenarioConfig preset_config(Figure figure) {
    ScenarioConfig config;
    config.game = preset_parameters(figure);
    config.sweep = SweepSection{figure, {}};
    return config;
}

SweepSpec sweep_spec_from(const ScenarioConfig &config) {
    if (!config.sweep) {
        throw ConfigError("sweep: the configuration has no 'sweep' section");
    }
    SweepSpec spec = preset_sweep(config.sweep->figure);
    spec.fixed = config.game;
    if (!config.sweep->axes.empty()) {
        spec.axes = config.sweep->axes;
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return spec;
}

}  // namespace idc::cli
