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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/format.h"
#include "idc/discrimination.h"
#include "idc/states.h"

namespace idc::cli {

using nlohmann::json;

namespace {

json rounded_complex(Complex z) {
    return json::array({rounded(z.real()), rounded(z.imag())});
}

json matrix_json(const CMat &m) {
    json rows = json::array();
    for (size_t i = 0; i < m.dim(); i++) {
        json row = json::array();
        for (size_t j = 0; j < m.dim(); j++) {
            row.push_back(rounded_complex(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

void append_complex(std::vector<std::string> &header, std::vector<std::string> &row, const std::string &name,
                    Complex z) {
    header.push_back(name + "_re");
    header.push_back(name + "_im");
    row.push_back(format_number(z.real()));
    row.push_back(format_number(z.imag()));
}

void append_matrix(std::vector<std::string> &header, std::vector<std::string> &row, const std::string &prefix,
                   const CMat &m) {
    for (size_t i = 0; i < m.dim(); i++) {
        for (size_t j = 0; j < m.dim(); j++) {
            append_complex(header, row, prefix + "_" + std::string(kBasisLabels[i]) + "_" + std::string(kBasisLabels[j]),
                           m(i, j));
        }
    }
}

void emit_json(const json &doc, std::ostream &out) {
    out << doc.dump(2) << '\n';
}

void emit_single_row(const std::vector<std::string> &header, const std::vector<std::string> &row, std::ostream &out) {
    out << csv_row(header) << csv_row(row);
}

bool is_down_up_product(const PreparationSpec &prep) {
    const auto *product = std::get_if<PureProduct>(&prep);
    return product != nullptr && product->first == Spin::Down && product->second == Spin::Up;
}

bool is_balanced(const OverlapAmplitudes &amps) {
    for (Complex z : {amps.l, amps.r, amps.l_prime, amps.r_prime}) {
        if (std::abs(std::norm(z) - 0.5) > 1e-12) {
            return false;
        }
    }
    return true;
}

struct ClosedForm {
    std::string name;
    double p_err;
};

ClosedForm closed_form_for(const GameParameters &game) {
    bool baseline = game.statistics == Statistics::Distinguishable;
    OverlapAmplitudes amps = baseline ? game.overlaps.without_overlap() : game.overlaps;
    if (const auto *sup = std::get_if<PureSpinSuperposition>(&game.preparation)) {
        return {"general", closed_form_error_general(*sup, amps, baseline ? Statistics::Boson : game.statistics,
                                                     game.channel)};
    }
    if (is_down_up_product(game.preparation)) {
        return {"product", closed_form_error_product(amps, game.channel)};
    }
    StateVector4 state = project_preparation(game.preparation, game.overlaps, game.statistics);
    return {"helstrom", helstrom_error(game.channel.priors[0], game.channel.priors[1],
                                       apply_phase(game.channel, 1, state), apply_phase(game.channel, 2, state))};
}

Format parse_format(const std::string &name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw ConfigError("--format: expected csv or json, got '" + name + "'");
}

ScenarioConfig resolve_config(const std::string &config_path, const std::string &preset) {
    if (!config_path.empty() && !preset.empty()) {
        throw ConfigError("--config and --preset are mutually exclusive");
    }
    if (!preset.empty()) {
        auto figure = parse_figure(preset);
        if (!figure || *figure == Figure::Custom) {
            throw ConfigError("--preset: expected fig3a, fig3b, fig4 or fig5, got '" + preset + "'");
        }
        return preset_config(*figure);
    }
    if (config_path.empty()) {
        throw ConfigError("one of --config or --preset is required");
    }
    return load_config(config_path);
}

struct ScenarioFlags {
    std::string config;
    std::string preset;
    std::string out;
    std::string format;
};

void add_scenario_flags(CLI::App *cmd, ScenarioFlags &flags) {
    cmd->add_option("--config", flags.config, "Scenario configuration (JSON)");
    cmd->add_option("--preset", flags.preset, "Built-in figure scenario: fig3a, fig3b, fig4, fig5");
    cmd->add_option("--out", flags.out, "Output path (default: config output.path or stdout)");
    cmd->add_option("--format", flags.format, "Output format: csv or json");
}

int run_scenario(int (*command)(const ScenarioConfig &, Format, std::ostream &), const ScenarioFlags &flags,
                 Format default_format, std::ostream &out) {
    ScenarioConfig config = resolve_config(flags.config, flags.preset);
    std::string format_name = flags.format;
    std::string path = flags.out;
    if (config.output) {
        if (format_name.empty()) {
            format_name = config.output->format;
        }
        if (path.empty()) {
            path = config.output->path;
        }
    }
    Format format = format_name.empty() ? default_format : parse_format(format_name);

    std::ostringstream buffer;
    int code = command(config, format, buffer);
    if (path.empty() || path == "-") {
        out << buffer.str();
    } else {
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw ConfigError("cannot open output file '" + path + "'");
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace

int cmd_project(const ScenarioConfig &config, Format format, std::ostream &out) {
    const auto &game = config.game;
    if (const auto *mixed = std::get_if<MixedDiagonal>(&game.preparation)) {
        DensityMatrix4 rho = game.statistics == Statistics::Distinguishable
                                 ? project_distinguishable(*mixed, game.overlaps)
                                 : project_mixed(*mixed, game.overlaps, game.statistics);
        bool coherent = !is_incoherent(rho);
        double l1 = coherence_l1(rho);
        if (format == Format::Json) {
            emit_json({{"kind", "density_matrix"},
                       {"statistics", to_string(game.statistics)},
                       {"basis", kBasisLabels},
                       {"matrix", matrix_json(rho.mat)},
                       {"trace_raw", rounded(rho.trace_raw)},
                       {"coherent", coherent},
                       {"coherence_l1", rounded(l1)}},
                      out);
        } else {
            std::vector<std::string> header{"kind", "statistics", "trace_raw", "coherent", "coherence_l1"};
            std::vector<std::string> row{"density_matrix", std::string(to_string(game.statistics)),
                                         format_number(rho.trace_raw), coherent ? "true" : "false",
                                         format_number(l1)};
            append_matrix(header, row, "rho", rho.mat);
            emit_single_row(header, row, out);
        }
        return kExitSuccess;
    }

    StateVector4 state = project_preparation(game.preparation, game.overlaps, game.statistics);
    DensityMatrix4 rho = to_density(state);
    bool coherent = !is_incoherent(rho);
    double l1 = coherence_l1(rho);
    if (format == Format::Json) {
        json amplitudes = json::array();
        for (size_t i = 0; i < kBasisDim; i++) {
            amplitudes.push_back(rounded_complex(state.entries[i]));
        }
        emit_json({{"kind", "pure_state"},
                   {"statistics", to_string(game.statistics)},
                   {"basis", kBasisLabels},
                   {"amplitudes", amplitudes},
                   {"norm_sq_raw", rounded(state.norm_sq_raw)},
                   {"coherent", coherent},
                   {"coherence_l1", rounded(l1)}},
                  out);
    } else {
        std::vector<std::string> header{"kind", "statistics", "norm_sq_raw", "coherent", "coherence_l1"};
        std::vector<std::string> row{"pure_state", std::string(to_string(game.statistics)),
                                     format_number(state.norm_sq_raw), coherent ? "true" : "false",
                                     format_number(l1)};
        for (size_t i = 0; i < kBasisDim; i++) {
            append_complex(header, row, "amp_" + std::string(kBasisLabels[i]), state.entries[i]);
        }
        emit_single_row(header, row, out);
    }
    return kExitSuccess;
}

int cmd_discriminate(const ScenarioConfig &config, Format format, std::ostream &out) {
    const auto &game = config.game;
    if (std::holds_alternative<MixedDiagonal>(game.preparation)) {
        throw ConfigError("discriminate: the game needs a pure_product or pure_spin_superposition preparation");
    }
    StateVector4 state = project_preparation(game.preparation, game.overlaps, game.statistics);
    DiscriminationOutcome outcome = optimal_povm(game.channel, state);
    ClosedForm closed = closed_form_for(game);
    double difference = std::abs(closed.p_err - outcome.p_err);
    double lambda_closed = helstrom_lambda_plus(game.channel.priors[0], game.channel.priors[1], outcome.overlap);
    std::optional<double> balanced;
    if (is_down_up_product(game.preparation) && game.statistics != Statistics::Distinguishable &&
        is_balanced(game.overlaps)) {
        balanced = closed_form_error_balanced(game.channel);
    }

    if (format == Format::Json) {
        json doc = {
            {"statistics", to_string(game.statistics)},
            {"closed_form", closed.name},
            {"p_err_closed_form", rounded(closed.p_err)},
            {"p_err_povm", rounded(outcome.p_err)},
            {"difference", rounded(difference)},
        };
        if (balanced) {
            doc["p_err_balanced"] = rounded(*balanced);
        }
        json spectrum = json::array();
        for (double v : outcome.delta_spectrum) {
            spectrum.push_back(rounded(v));
        }
        doc["lambda_plus"] = rounded(outcome.lambda_plus);
        doc["lambda_plus_closed_form"] = rounded(lambda_closed);
        doc["overlap"] = rounded_complex(outcome.overlap);
        doc["delta_spectrum"] = spectrum;
        doc["povm"] = json::array({matrix_json(outcome.povm.elements[0]), matrix_json(outcome.povm.elements[1])});
        emit_json(doc, out);
    } else {
        std::vector<std::string> header{"statistics", "closed_form", "p_err_closed_form", "p_err_povm",
                                        "difference", "p_err_balanced", "lambda_plus", "lambda_plus_closed_form"};
        std::vector<std::string> row{std::string(to_string(game.statistics)),
                                     closed.name,
                                     format_number(closed.p_err),
                                     format_number(outcome.p_err),
                                     format_number(difference),
                                     csv_cell(balanced),
                                     format_number(outcome.lambda_plus),
                                     format_number(lambda_closed)};
        append_complex(header, row, "overlap", outcome.overlap);
        for (size_t i = 0; i < outcome.delta_spectrum.size(); i++) {
            header.push_back("delta_eigenvalue_" + std::to_string(i));
            row.push_back(format_number(outcome.delta_spectrum[i]));
        }
        append_matrix(header, row, "pi1", outcome.povm.elements[0]);
        append_matrix(header, row, "pi2", outcome.povm.elements[1]);
        emit_single_row(header, row, out);
    }
    return kExitSuccess;
}

int cmd_sweep(const ScenarioConfig &config, Format format, std::ostream &out) {
    SweepSpec spec = sweep_spec_from(config);
    std::vector<SweepRecord> records = run_sweep(spec);
    std::vector<Column> columns = figure_columns(spec.figure);

    if (format == Format::Json) {
        json axes = json::array();
        for (const auto &axis : spec.axes) {
            axes.push_back({{"name", axis.name}, {"min", axis.min}, {"max", axis.max}, {"points", axis.points}});
        }
        json rows = json::array();
        for (const auto &record : records) {
            json row = json::object();
            for (size_t k = 0; k < spec.axes.size(); k++) {
                row[spec.axes[k].name] = rounded(record.coordinates[k]);
            }
            for (Column column : columns) {
                auto value = record.get(column);
                row[std::string(column_name(column))] = value ? json(rounded(*value)) : json(nullptr);
            }
            row["flag"] = record.flag;
            rows.push_back(row);
        }
        emit_json({{"figure", to_string(spec.figure)}, {"axes", axes}, {"records", rows}}, out);
        return kExitSuccess;
    }

    std::vector<std::string> header;
    for (const auto &axis : spec.axes) {
        header.push_back(axis.name);
    }
    for (Column column : columns) {
        header.emplace_back(column_name(column));
    }
    header.emplace_back("flag");
    out << csv_row(header);
    for (const auto &record : records) {
        std::vector<std::string> row;
        for (double c : record.coordinates) {
            row.push_back(format_number(c));
        }
        for (Column column : columns) {
            row.push_back(csv_cell(record.get(column)));
        }
        row.push_back(record.flag);
        out << csv_row(row);
    }
    return kExitSuccess;
}

int cmd_check(const SelfCheckOptions &options, std::ostream &out) {
    auto results = run_self_checks(options);
    size_t failed = 0;
    for (const auto &result : results) {
        failed += result.passed ? 0 : 1;
        out << (result.passed ? "PASS " : "FAIL ") << result.name << " cases=" << result.cases
            << " worst=" << format_number(result.worst) << " tol=" << format_number(result.tolerance) << '\n';
    }
    out << "seed=" << options.seed << " n=" << options.n << ": ";
    if (failed == 0) {
        out << "all " << results.size() << " suites passed\n";
        return kExitSuccess;
    }
    out << failed << " of " << results.size() << " suites failed\n";
    return kExitCheckFailure;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Identical-particle coherence and phase-discrimination toolkit", "idcoh"};
    app.require_subcommand(1);

    ScenarioFlags project_flags;
    ScenarioFlags discriminate_flags;
    ScenarioFlags sweep_flags;
    SelfCheckOptions check_options;

    auto *project = app.add_subcommand("project", "Project a preparation onto the localized basis");
    add_scenario_flags(project, project_flags);
    auto *discriminate = app.add_subcommand("discriminate", "Solve one phase-discrimination game");
    add_scenario_flags(discriminate, discriminate_flags);
    auto *sweep = app.add_subcommand("sweep", "Run a parameter sweep and emit CSV");
    add_scenario_flags(sweep, sweep_flags);
    auto *check = app.add_subcommand("check", "Run the invariant and oracle suites");
    check->add_option("--seed", check_options.seed, "Random seed");
    check->add_option("--n", check_options.n, "Random cases per suite")->check(CLI::PositiveNumber);
    check->add_option("--tolerance-scale", check_options.tolerance_scale)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitSuccess;
        }
        err << "idcoh: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        if (*project) {
            return run_scenario(cmd_project, project_flags, Format::Json, out);
        }
        if (*discriminate) {
            return run_scenario(cmd_discriminate, discriminate_flags, Format::Json, out);
        }
        if (*sweep) {
            return run_scenario(cmd_sweep, sweep_flags, Format::Csv, out);
        }
        return cmd_check(check_options, out);
    } catch (const VanishingProjection &e) {
        err << "idcoh: degenerate input: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const ConfigError &e) {
        err << "idcoh: config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument &e) {
        err << "idcoh: invalid input: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "idcoh: " << e.what() << '\n';
        return kExitCheckFailure;
    }
}

}  // namespace idc::cli
