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

#include "idc/selfcheck.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "idc/discrimination.h"
#include "idc/experiments.h"
#include "idc/linalg.h"
#include "idc/states.h"

namespace idc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex random_complex(UniformSource &rng) {
    return {rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

CMat random_hermitian(UniformSource &rng, size_t dim) {
    CMat m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = rng.uniform(-1, 1);
        for (size_t j = i + 1; j < dim; j++) {
            m(i, j) = random_complex(rng);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

CVec random_unit(UniformSource &rng, size_t dim) {
    CVec v(dim);
    for (size_t i = 0; i < dim; i++) {
        v[i] = random_complex(rng);
    }
    return Complex(1 / v.norm()) * v;
}

DensityMatrix4 random_density(UniformSource &rng) {
    CMat a(kBasisDim);
    for (size_t i = 0; i < kBasisDim; i++) {
        for (size_t j = 0; j < kBasisDim; j++) {
            a(i, j) = random_complex(rng);
        }
    }
    CMat rho = a * a.adjoint();
    rho *= Complex(1 / rho.trace().real());
    return {rho, 1};
}

Spin random_spin(UniformSource &rng) {
    return rng.coin() ? Spin::Up : Spin::Down;
}

Statistics random_identical(UniformSource &rng) {
    return rng.coin() ? Statistics::Fermion : Statistics::Boson;
}

// Runs `body` n times; body returns the residual for one case, or a negative
// value to skip a degenerate draw.
SuiteResult suite(const std::string &name, size_t n, double tolerance, const SelfCheckOptions &options,
                  const std::function<double()> &body) {
    SuiteResult result;
    result.name = name;
    result.tolerance = tolerance * options.tolerance_scale;
    for (size_t i = 0; i < n; i++) {
        double residual = body();
        if (residual < 0) {
            continue;
        }
        result.cases++;
        result.worst = std::isnan(residual) ? INFINITY : std::max(result.worst, residual);
    }
    result.passed = result.worst <= result.tolerance;
    return result;
}

double eigen_residual(const CMat &a) {
    auto pairs = eigh(a);
    double worst = max_abs_diff(a, reconstruct(pairs));
    double sum = 0;
    for (size_t i = 0; i < pairs.size(); i++) {
        sum += pairs[i].value;
        for (size_t j = 0; j < pairs.size(); j++) {
            Complex g = inner(pairs[i].vector, pairs[j].vector);
            worst = std::max(worst, std::abs(g - Complex(i == j ? 1 : 0)));
        }
    }
    return std::max(worst, std::abs(sum - a.trace().real()));
}

}  // namespace

std::vector<SuiteResult> run_self_checks(const SelfCheckOptions &options) {
    UniformSource rng(options.seed);
    size_t n = options.n;
    std::vector<SuiteResult> results;

    results.push_back(suite("eigh_random_hermitian", n, 1e-10, options,
                            [&] { return eigen_residual(random_hermitian(rng, kBasisDim)); }));

    results.push_back(suite("delta_spectrum_rank", n, 1e-10, options, [&] {
        double p1 = rng.uniform(0, 1);
        CVec u = random_unit(rng, kBasisDim);
        CVec v = random_unit(rng, kBasisDim);
        auto pairs = eigh(outer(u, u) * Complex(p1) - outer(v, v) * Complex(1 - p1));
        double worst = 0;
        for (size_t i = 1; i + 1 < pairs.size(); i++) {
            worst = std::max(worst, std::abs(pairs[i].value));
        }
        return worst;
    }));

    results.push_back(suite("pure_mixed_agreement", n, 1e-12, options, [&] {
        PureProduct prep{random_spin(rng), random_spin(rng)};
        OverlapAmplitudes amps = random_overlaps(rng);
        Statistics stats = random_identical(rng);
        MixedDiagonal mixed;
        mixed.weights[basis_index(prep.first, prep.second)] = 1;
        try {
            StateVector4 v = project_pure(prep, amps, stats);
            return max_abs_diff(outer(v.entries, v.entries), project_mixed(mixed, amps, stats).mat);
        } catch (const VanishingProjection &) {
            return -1.0;
        }
    }));

    results.push_back(suite("no_overlap_statistics_irrelevance", n, 1e-12, options, [&] {
        OverlapAmplitudes amps = random_overlaps(rng).without_overlap();
        PureProduct prep{random_spin(rng), random_spin(rng)};
        MixedDiagonal mixed;
        double total = 0;
        for (auto &w : mixed.weights) {
            w = rng.uniform(0, 1);
            total += w;
        }
        for (auto &w : mixed.weights) {
            w /= total;
        }
        double worst = max_abs_diff(project_pure(prep, amps, Statistics::Boson).entries,
                                    project_pure(prep, amps, Statistics::Fermion).entries);
        DensityMatrix4 boson = project_mixed(mixed, amps, Statistics::Boson);
        DensityMatrix4 fermion = project_mixed(mixed, amps, Statistics::Fermion);
        worst = std::max(worst, max_abs_diff(boson.mat, fermion.mat));
        return std::max(worst, max_off_diagonal(boson.mat));
    }));

    results.push_back(suite("superposition_collapse", n, 1e-12, options, [&] {
        OverlapAmplitudes amps = random_overlaps(rng);
        Statistics stats = random_identical(rng);
        Complex a = std::polar(1.0, rng.uniform(-kPi, kPi));
        try {
            StateVector4 sup = project_superposition({a, 0}, amps, stats);
            StateVector4 pure = project_pure({Spin::Down, Spin::Up}, amps, stats);
            return max_abs_diff(outer(sup.entries, sup.entries), outer(pure.entries, pure.entries));
        } catch (const VanishingProjection &) {
            return -1.0;
        }
    }));

    results.push_back(suite("exchange_consistency", n, 1e-12, options, [&] {
        OverlapAmplitudes amps = random_overlaps(rng);
        OverlapAmplitudes swapped{amps.l_prime, amps.r_prime, amps.l, amps.r};
        PureProduct prep{random_spin(rng), random_spin(rng)};
        Statistics stats = random_identical(rng);
        try {
            StateVector4 v = project_pure(prep, amps, stats);
            StateVector4 w = project_pure({prep.second, prep.first}, swapped, stats);
            return max_abs_diff(outer(v.entries, v.entries), outer(w.entries, w.entries));
        } catch (const VanishingProjection &) {
            return -1.0;
        }
    }));

    results.push_back(suite("cnot_incoherent_operation", n, 1e-10, options, [&] {
        DensityMatrix4 rho = random_density(rng);
        DensityMatrix4 once = cnot_slocc(rho);
        double worst = max_abs_diff(cnot_slocc(once).mat, rho.mat);
        auto before = eigh(rho.mat);
        auto after = eigh(once.mat);
        for (size_t i = 0; i < before.size(); i++) {
            worst = std::max(worst, std::abs(before[i].value - after[i].value));
        }
        DensityMatrix4 diag = dephase(rho);
        return std::max(worst, max_off_diagonal(cnot_slocc(diag).mat) == 0 ? 0.0 : INFINITY);
    }));

    results.push_back(suite("phase_channel_incoherent", n, 0.5, options, [&] {
        GameParameters game = random_product_game(rng);
        return dephase_channel_check(game.channel, dephase(random_density(rng))) ? 0.0 : 1.0;
    }));

    {
        OracleCampaignSummary summary = run_oracle_campaign(n, options.seed, kOracleTolerance);
        SuiteResult result;
        result.name = "oracle_equivalence";
        result.cases = summary.n;
        result.worst = std::max(summary.max_abs_disagreement, summary.max_lambda_disagreement);
        result.tolerance = kOracleTolerance * options.tolerance_scale;
        result.passed = summary.n_failures == 0 && result.worst <= result.tolerance;
        results.push_back(result);
    }

    results.push_back(suite("error_bound_and_symmetry", n, 1e-12, options, [&] {
        GameParameters game = random_product_game(rng);
        PhaseChannel ch = game.channel;
        double base;
        try {
            base = game_error(game.preparation, game.overlaps, game.statistics, ch);
        } catch (const VanishingProjection &) {
            return -1.0;
        }
        double worst = std::max(0.0, base - std::min(ch.priors[0], ch.priors[1]));

        PhaseChannel swapped = ch;
        std::swap(swapped.priors[0], swapped.priors[1]);
        std::swap(swapped.phi[0], swapped.phi[1]);
        worst = std::max(worst, std::abs(base - game_error(game.preparation, game.overlaps, game.statistics, swapped)));

        PhaseChannel shifted = ch;
        double shift = rng.uniform(-5, 5);
        for (auto &w : shifted.omega) {
            w += shift;
        }
        worst = std::max(worst, std::abs(base - game_error(game.preparation, game.overlaps, game.statistics, shifted)));

        OverlapAmplitudes real_amps{std::abs(game.overlaps.l), std::abs(game.overlaps.r),
                                    std::abs(game.overlaps.l_prime), std::abs(game.overlaps.r_prime)};
        PhaseChannel mirrored = ch;
        mirrored.phi = {-ch.phi[0], -ch.phi[1]};
        worst = std::max(worst, std::abs(game_error(game.preparation, real_amps, game.statistics, ch) -
                                         game_error(game.preparation, real_amps, game.statistics, mirrored)));
        return worst;
    }));

    results.push_back(suite("optimal_povm_validity", n, 1e-10, options, [&] {
        GameParameters game = random_product_game(rng);
        try {
            StateVector4 state = project_preparation(game.preparation, game.overlaps, game.statistics);
            return optimal_povm(game.channel, state).povm.validity_defect();
        } catch (const VanishingProjection &) {
            return -1.0;
        }
    }));

    results.push_back(suite("balanced_reduction", n, 1e-12, options, [&] {
        GameParameters game = random_product_game(rng);
        double h = std::sqrt(0.5);
        OverlapAmplitudes amps{std::polar(h, rng.uniform(-kPi, kPi)), std::polar(h, rng.uniform(-kPi, kPi)),
                               std::polar(h, rng.uniform(-kPi, kPi)), std::polar(h, rng.uniform(-kPi, kPi))};
        return std::abs(closed_form_error_product(amps, game.channel) - closed_form_error_balanced(game.channel));
    }));

    return results;
}

}  // namespace idc
