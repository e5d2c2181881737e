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

#include "idc/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace idc {

namespace {

constexpr double kPi = std::numbers::pi;

void set_modulus(Complex &z, double modulus) {
    z = std::polar(modulus, std::arg(z));
}

void apply_axis(GameParameters &params, std::string_view name, double v) {
    auto &ch = params.channel;
    auto &amps = params.overlaps;
    if (name == "phi12") {
        ch.phi[0] = ch.phi[1] + v;
    } else if (name == "p1") {
        ch.priors = {v, 1 - v};
    } else if (name == "l") {
        set_modulus(amps.l, v);
    } else if (name == "r") {
        set_modulus(amps.r, v);
    } else if (name == "l_prime") {
        set_modulus(amps.l_prime, v);
    } else if (name == "r_prime") {
        set_modulus(amps.r_prime, v);
    } else if (name == "omega_dd") {
        ch.omega[basis_index(Spin::Down, Spin::Down)] = v;
    } else if (name == "omega_du") {
        ch.omega[basis_index(Spin::Down, Spin::Up)] = v;
    } else if (name == "omega_ud") {
        ch.omega[basis_index(Spin::Up, Spin::Down)] = v;
    } else if (name == "omega_uu") {
        ch.omega[basis_index(Spin::Up, Spin::Up)] = v;
    } else if (name == "a") {
        auto *sup = std::get_if<PureSpinSuperposition>(&params.preparation);
        if (sup == nullptr) {
            throw std::invalid_argument("sweep axis 'a' needs a pure_spin_superposition preparation");
        }
        sup->a = v;
        sup->b = std::sqrt(std::max(0.0, 1 - v * v));
    } else {
        throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "'");
    }
}

Statistics column_statistics(Column column, Statistics configured) {
    switch (column) {
        case Column::Overlap:
            return configured;
        case Column::Baseline:
            return Statistics::Distinguishable;
        case Column::Boson:
            return Statistics::Boson;
        case Column::Fermion:
            return Statistics::Fermion;
    }
    return configured;
}

template <typename Record>
auto &column_slot(Record &record, Column column) {
    switch (column) {
        case Column::Overlap:
            return record.p_err_overlap;
        case Column::Baseline:
            return record.p_err_baseline;
        case Column::Boson:
            return record.p_err_boson;
        case Column::Fermion:
            break;
    }
    return record.p_err_fermion;
}

std::vector<double> coordinates_at(const SweepSpec &spec, size_t flat) {
    std::vector<double> coords(spec.axes.size());
    for (size_t k = spec.axes.size(); k-- > 0;) {
        const auto &axis = spec.axes[k];
        coords[k] = axis.value(flat % axis.points);
        flat /= axis.points;
    }
    return coords;
}

SweepRecord evaluate_point(const SweepSpec &spec, const std::vector<Column> &columns, size_t flat) {
    SweepRecord record;
    record.coordinates = coordinates_at(spec, flat);
    GameParameters params = apply_coordinates(spec, record.coordinates);
    for (Column column : columns) {
        try {
            column_slot(record, column) =
                game_error(params.preparation, params.overlaps, column_statistics(column, params.statistics),
                           params.channel);
        } catch (const VanishingProjection &) {
            if (!record.flag.empty()) {
                record.flag += ';';
            }
            record.flag += std::string(column_name(column)) + ":vanishing_projection";
        }
    }
    return record;
}

}  // namespace

std::string_view to_string(Figure figure) {
    switch (figure) {
        case Figure::Fig3a:
            return "fig3a";
        case Figure::Fig3b:
            return "fig3b";
        case Figure::Fig4:
            return "fig4";
        case Figure::Fig5:
            return "fig5";
        case Figure::Custom:
            return "custom";
    }
    return "?";
}

std::optional<Figure> parse_figure(std::string_view name) {
    for (Figure f : {Figure::Fig3a, Figure::Fig3b, Figure::Fig4, Figure::Fig5, Figure::Custom}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

double Axis::value(size_t i) const {
    if (i + 1 >= points) {
        return max;
    }
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
}

bool is_known_axis(std::string_view name) {
    static constexpr std::string_view kNames[] = {"phi12",    "p1",       "l",        "r",        "l_prime", "r_prime",
                                                  "omega_dd", "omega_du", "omega_ud", "omega_uu", "a"};
    return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

size_t SweepSpec::point_count() const {
    size_t count = 1;
    for (const auto &axis : axes) {
        count *= axis.points;
    }
    return count;
}

void SweepSpec::validate() const {
    if (axes.empty()) {
        throw std::invalid_argument("sweep: at least one axis is required");
    }
    for (size_t i = 0; i < axes.size(); i++) {
        const auto &axis = axes[i];
        if (!is_known_axis(axis.name)) {
            throw std::invalid_argument("sweep: unknown axis '" + axis.name + "'");
        }
        for (size_t j = 0; j < i; j++) {
            if (axes[j].name == axis.name) {
                throw std::invalid_argument("sweep: axis '" + axis.name + "' declared twice");
            }
        }
        if (axis.points < 2) {
            throw std::invalid_argument("sweep: axis '" + axis.name + "' needs at least 2 points");
        }
        if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max)) {
            throw std::invalid_argument("sweep: axis '" + axis.name + "' needs finite min < max");
        }
        bool modulus = axis.name == "l" || axis.name == "r" || axis.name == "l_prime" || axis.name == "r_prime";
        bool unit = axis.name == "a" || axis.name == "p1";
        if ((modulus || unit) && axis.min < 0) {
            throw std::invalid_argument("sweep: axis '" + axis.name + "' must be nonnegative");
        }
        if (unit && axis.max > 1) {
            throw std::invalid_argument("sweep: axis '" + axis.name + "' must not exceed 1");
        }
    }
    if (std::holds_alternative<MixedDiagonal>(fixed.preparation)) {
        throw std::invalid_argument("sweep: the discrimination game needs a pure preparation");
    }

    // Every constraint on the swept parameters is monotone along each axis, so
    // checking the corners of the grid covers the interior.
    for (size_t corner = 0; corner < (size_t{1} << axes.size()); corner++) {
        std::vector<double> coords(axes.size());
        for (size_t k = 0; k < axes.size(); k++) {
            coords[k] = (corner >> k) & 1 ? axes[k].max : axes[k].min;
        }
        GameParameters params = apply_coordinates(*this, coords);
        idc::validate(params.preparation);
        params.overlaps.validate();
        params.channel.validate();
    }
}

GameParameters preset_parameters(Figure figure) {
    GameParameters params;
    params.overlaps = OverlapAmplitudes::balanced();
    params.statistics = Statistics::Boson;
    params.channel.priors = {1.0 / 3.0, 2.0 / 3.0};
    params.channel.phi = {kPi, 0};
    switch (figure) {
        case Figure::Fig3a:
        case Figure::Fig3b:
        case Figure::Custom:
            params.preparation = PureProduct{Spin::Down, Spin::Up};
            params.channel.omega[basis_index(Spin::Down, Spin::Up)] = 1;
            break;
        case Figure::Fig4:
        case Figure::Fig5: {
            double h = std::sqrt(0.5);
            params.preparation = PureSpinSuperposition{h, h};
            params.channel.omega[basis_index(Spin::Down, Spin::Up)] = 3;
            params.channel.omega[basis_index(Spin::Up, Spin::Down)] = 2;
            params.channel.omega[basis_index(Spin::Down, Spin::Down)] = 1;
            break;
        }
    }
    return params;
}

SweepSpec preset_sweep(Figure figure) {
    SweepSpec spec;
    spec.figure = figure;
    spec.fixed = preset_parameters(figure);
    double cap = std::sqrt(0.5);
    switch (figure) {
        case Figure::Fig3a:
        case Figure::Fig4:
        case Figure::Custom:
            spec.axes = {{"phi12", 0, 2 * kPi, 361}};
            break;
        case Figure::Fig3b:
            spec.axes = {{"l_prime", 0, cap, 101}, {"r", 0, cap, 101}};
            break;
        case Figure::Fig5:
            spec.axes = {{"phi12", 0, 2 * kPi, 181}, {"omega_dd", 0, 5, 51}};
            break;
    }
    return spec;
}

GameParameters apply_coordinates(const SweepSpec &spec, std::span<const double> coordinates) {
    if (coordinates.size() != spec.axes.size()) {
        throw std::invalid_argument("apply_coordinates: coordinate count does not match axis count");
    }
    GameParameters params = spec.fixed;
    for (size_t k = 0; k < coordinates.size(); k++) {
        apply_axis(params, spec.axes[k].name, coordinates[k]);
    }
    return params;
}

std::string_view column_name(Column column) {
    switch (column) {
        case Column::Overlap:
            return "p_err_overlap";
        case Column::Baseline:
            return "p_err_baseline";
        case Column::Boson:
            return "p_err_boson";
        case Column::Fermion:
            return "p_err_fermion";
    }
    return "?";
}

std::vector<Column> figure_columns(Figure figure) {
    switch (figure) {
        case Figure::Fig3a:
        case Figure::Fig3b:
            return {Column::Overlap, Column::Baseline};
        case Figure::Fig4:
        case Figure::Fig5:
            return {Column::Baseline, Column::Boson, Column::Fermion};
        case Figure::Custom:
            break;
    }
    return {Column::Overlap, Column::Baseline, Column::Boson, Column::Fermion};
}

std::optional<double> SweepRecord::get(Column column) const {
    return column_slot(*this, column);
}

std::vector<SweepRecord> run_sweep(const SweepSpec &spec, unsigned threads) {
    spec.validate();
    size_t total = spec.point_count();
    auto columns = figure_columns(spec.figure);
    std::vector<SweepRecord> records(total);

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<size_t>(threads, total));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            records[i] = evaluate_point(spec, columns, i);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
    }
    return records;
}

double UniformSource::uniform(double lo, double hi) {
    double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

bool UniformSource::coin() {
    return (engine_() >> 63) != 0;
}

OverlapAmplitudes random_overlaps(UniformSource &rng) {
    auto draw_pair = [&](Complex &in_left, Complex &in_right) {
        double weight = rng.uniform(0.05, 1.0);
        double angle = rng.uniform(0, kPi / 2);
        in_left = std::polar(std::sqrt(weight) * std::cos(angle), rng.uniform(-kPi, kPi));
        in_right = std::polar(std::sqrt(weight) * std::sin(angle), rng.uniform(-kPi, kPi));
    };
    OverlapAmplitudes amps;
    draw_pair(amps.l, amps.r);
    draw_pair(amps.l_prime, amps.r_prime);
    return amps;
}

GameParameters random_product_game(UniformSource &rng) {
    GameParameters params;
    params.preparation = PureProduct{Spin::Down, Spin::Up};
    params.overlaps = random_overlaps(rng);
    params.statistics = rng.coin() ? Statistics::Fermion : Statistics::Boson;
    double p1 = rng.uniform(0, 1);
    params.channel.priors = {p1, 1 - p1};
    for (auto &w : params.channel.omega) {
        w = rng.uniform(-5, 5);
    }
    params.channel.phi = {rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)};
    return params;
}

OracleCampaignSummary run_oracle_campaign(size_t n, uint64_t seed, double tolerance) {
    if (n == 0) {
        throw std::invalid_argument("run_oracle_campaign: n must be at least 1");
    }
    UniformSource rng(seed);
    OracleCampaignSummary summary;
    while (summary.n < n) {
        GameParameters game = random_product_game(rng);
        StateVector4 state;
        try {
            state = project_pure(std::get<PureProduct>(game.preparation), game.overlaps, game.statistics);
        } catch (const VanishingProjection &) {
            continue;
        }
        const auto &ch = game.channel;
        auto [p1, p2] = ch.priors;
        double helstrom = helstrom_error(p1, p2, apply_phase(ch, 1, state), apply_phase(ch, 2, state));
        double closed = closed_form_error_product(game.overlaps, ch);
        DiscriminationOutcome oracle = optimal_povm(ch, state);

        double disagreement = std::max({std::abs(helstrom - closed), std::abs(helstrom - oracle.p_err),
                                        std::abs(closed - oracle.p_err)});
        double lambda_gap = std::abs(oracle.lambda_plus - helstrom_lambda_plus(p1, p2, oracle.overlap));
        summary.max_abs_disagreement = std::max(summary.max_abs_disagreement, disagreement);
        summary.max_lambda_disagreement = std::max(summary.max_lambda_disagreement, lambda_gap);
        if (!(disagreement <= tolerance) || !(lambda_gap <= tolerance) ||
            !(oracle.povm.validity_defect() <= tolerance)) {
            summary.n_failures++;
        }
        summary.n++;
    }
    return summary;
}

}  // namespace idc
