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

#ifndef IDC_EXPERIMENTS_H
#define IDC_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idc/discrimination.h"
#include "idc/states.h"

namespace idc {

enum class Figure : uint8_t { Fig3a, Fig3b, Fig4, Fig5, Custom };

std::string_view to_string(Figure figure);
std::optional<Figure> parse_figure(std::string_view name);

/// Everything needed to play one game.
struct GameParameters {
    PreparationSpec preparation = PureProduct{};
    OverlapAmplitudes overlaps = OverlapAmplitudes::balanced();
    Statistics statistics = Statistics::Boson;
    PhaseChannel channel;

    bool operator==(const GameParameters &) const = default;
};

/// A linearly spaced sweep axis. Recognized names:
///   phi12                       phi_1 - phi_2 (phi_2 held fixed)
///   p1                          prior of hypothesis 1 (p2 = 1 - p1)
///   l, r, l_prime, r_prime      modulus of an overlap amplitude (phase kept)
///   omega_dd, omega_du, omega_ud, omega_uu
///   a                           superposition coefficient, b = sqrt(1 - a^2)
struct Axis {
    std::string name;
    double min = 0;
    double max = 1;
    size_t points = 2;

    double value(size_t i) const;
    bool operator==(const Axis &) const = default;
};

bool is_known_axis(std::string_view name);

struct SweepSpec {
    Figure figure = Figure::Custom;
    std::vector<Axis> axes;
    GameParameters fixed;

    size_t point_count() const;
    /// Throws std::invalid_argument on malformed axes or parameters.
    void validate() const;
};

/// Presets reproducing the published figure configurations.
GameParameters preset_parameters(Figure figure);
SweepSpec preset_sweep(Figure figure);

/// Applies axis coordinates to a copy of the fixed parameters.
GameParameters apply_coordinates(const SweepSpec &spec, std::span<const double> coordinates);

enum class Column : uint8_t { Overlap, Baseline, Boson, Fermion };
std::string_view column_name(Column column);

/// Output columns emitted for a figure, in order.
std::vector<Column> figure_columns(Figure figure);

struct SweepRecord {
    std::vector<double> coordinates;  // aligned with SweepSpec::axes
    std::optional<double> p_err_overlap;
    std::optional<double> p_err_baseline;
    std::optional<double> p_err_boson;
    std::optional<double> p_err_fermion;
    std::string flag;  // empty unless some column could not be evaluated

    std::optional<double> get(Column column) const;
};

/// Evaluates every grid point, row-major over axes in declaration order.
/// Grid points run on up to `threads` workers (0 picks hardware concurrency);
/// the result order does not depend on the thread count.
std::vector<SweepRecord> run_sweep(const SweepSpec &spec, unsigned threads = 0);

/// Uniform doubles from a 64-bit Mersenne twister using the top 53 bits, so
/// sequences are identical across standard library implementations.
class UniformSource {
   public:
    explicit UniformSource(uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi);
    bool coin();

   private:
    std::mt19937_64 engine_;
};

/// Random overlap amplitudes with arbitrary complex phases satisfying
/// |l|^2 + |r|^2 <= 1 and |l'|^2 + |r'|^2 <= 1.
OverlapAmplitudes random_overlaps(UniformSource &rng);

/// Random product-preparation game instance for the oracle campaign.
GameParameters random_product_game(UniformSource &rng);

struct OracleCampaignSummary {
    size_t n = 0;
    double max_abs_disagreement = 0;
    double max_lambda_disagreement = 0;
    size_t n_failures = 0;

    bool operator==(const OracleCampaignSummary &) const = default;
};

constexpr double kOracleTolerance = 1e-10;

/// Compares closed_form_error_product, helstrom_error and optimal_povm on n
/// seeded random instances; an instance fails if any pair disagrees by more
/// than `tolerance`.
OracleCampaignSummary run_oracle_campaign(size_t n, uint64_t seed, double tolerance = kOracleTolerance);

}  // namespace idc

#endif
