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

#include "idc/discrimination.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace idc {

namespace {

constexpr double kPriorTolerance = 1e-12;

void require_unit(const StateVector4 &state, const char *op) {
    if (state.entries.dim() != kBasisDim || std::abs(state.entries.norm_sq() - 1) > kNormalizationTolerance) {
        throw std::invalid_argument(std::string(op) + ": expected a unit 4-vector");
    }
}

void require_priors(double p1, double p2, const char *op) {
    if (!(p1 >= 0) || !(p2 >= 0) || std::abs(p1 + p2 - 1) > kPriorTolerance) {
        throw std::invalid_argument(std::string(op) + ": priors must be nonnegative and sum to 1");
    }
}

// 1/2 (1 - sqrt(1 - 4 p1 p2 |z|^2)), clamped against roundoff under the root.
double helstrom_from_overlap_sq(double p1, double p2, double overlap_sq) {
    double discriminant = std::max(0.0, 1 - 4 * p1 * p2 * overlap_sq);
    return 0.5 * (1 - std::sqrt(discriminant));
}

}  // namespace

void PhaseChannel::validate() const {
    for (double w : omega) {
        if (!std::isfinite(w)) {
            throw std::invalid_argument("PhaseChannel: non-finite generator weight");
        }
    }
    if (!std::isfinite(phi[0]) || !std::isfinite(phi[1])) {
        throw std::invalid_argument("PhaseChannel: non-finite phase");
    }
    require_priors(priors[0], priors[1], "PhaseChannel");
}

double Povm::validity_defect() const {
    if (elements.empty()) {
        return INFINITY;
    }
    size_t dim = elements.front().dim();
    CMat sum(dim);
    double worst = 0;
    for (const auto &element : elements) {
        if (element.dim() != dim) {
            return INFINITY;
        }
        double defect = hermiticity_defect(element);
        worst = std::max(worst, defect);
        if (defect <= kHermitianTolerance) {
            for (const auto &pair : eigh(element)) {
                worst = std::max(worst, -pair.value);
            }
        }
        sum += element;
    }
    return std::max(worst, max_abs_diff(sum, CMat::identity(dim)));
}

StateVector4 apply_phase(const PhaseChannel &channel, int k, const StateVector4 &state) {
    if (k != 1 && k != 2) {
        throw std::invalid_argument("apply_phase: hypothesis index must be 1 or 2, got " + std::to_string(k));
    }
    if (state.entries.dim() != kBasisDim) {
        throw std::invalid_argument("apply_phase: expected a 4-vector");
    }
    double phi = channel.phi[k - 1];
    StateVector4 out = state;
    for (size_t i = 0; i < kBasisDim; i++) {
        out.entries[i] *= std::polar(1.0, channel.omega[i] * phi);
    }
    return out;
}

bool dephase_channel_check(const PhaseChannel &channel, const DensityMatrix4 &rho) {
    if (!is_incoherent(rho)) {
        return true;
    }
    for (int k = 1; k <= 2; k++) {
        double phi = channel.phi[k - 1];
        CMat out(kBasisDim);
        for (size_t i = 0; i < kBasisDim; i++) {
            for (size_t j = 0; j < kBasisDim; j++) {
                out(i, j) = std::polar(1.0, channel.omega[i] * phi) * rho.mat(i, j) *
                            std::polar(1.0, -channel.omega[j] * phi);
            }
        }
        if (!is_incoherent({out, rho.trace_raw})) {
            return false;
        }
    }
    return true;
}

DensityMatrix4 output_mixture(const PhaseChannel &channel, const StateVector4 &state) {
    channel.validate();
    require_unit(state, "output_mixture");
    CVec psi1 = apply_phase(channel, 1, state).entries;
    CVec psi2 = apply_phase(channel, 2, state).entries;
    CMat rho = outer(psi1, psi1) * Complex(channel.priors[0]) + outer(psi2, psi2) * Complex(channel.priors[1]);
    double trace = rho.trace().real();
    return {std::move(rho), trace};
}

double error_from_povm(const Povm &povm, const PhaseChannel &channel, const StateVector4 &state) {
    if (povm.elements.size() != 2) {
        throw std::invalid_argument("error_from_povm: expected exactly two POVM elements, got " +
                                    std::to_string(povm.elements.size()));
    }
    channel.validate();
    require_unit(state, "error_from_povm");
    CVec psi1 = apply_phase(channel, 1, state).entries;
    CVec psi2 = apply_phase(channel, 2, state).entries;
    double miss1 = inner(psi1, povm.elements[1] * psi1).real();
    double miss2 = inner(psi2, povm.elements[0] * psi2).real();
    return channel.priors[0] * miss1 + channel.priors[1] * miss2;
}

DiscriminationOutcome optimal_povm(const PhaseChannel &channel, const StateVector4 &state) {
    channel.validate();
    require_unit(state, "optimal_povm");
    auto [p1, p2] = channel.priors;
    CVec psi1 = apply_phase(channel, 1, state).entries;
    CVec psi2 = apply_phase(channel, 2, state).entries;

    CMat delta = outer(psi1, psi1) * Complex(p1) - outer(psi2, psi2) * Complex(p2);
    auto spectrum = eigh(delta);

    DiscriminationOutcome outcome;
    outcome.overlap = inner(psi1, psi2);
    outcome.lambda_plus = std::max(0.0, spectrum.front().value);
    for (const auto &pair : spectrum) {
        outcome.delta_spectrum.push_back(pair.value);
    }

    CMat guess1;
    if (spectrum.front().value > kPositiveEigenvalueThreshold) {
        guess1 = outer(spectrum.front().vector, spectrum.front().vector);
    } else if (p1 > p2) {
        guess1 = CMat::identity(kBasisDim);
    } else {
        guess1 = CMat(kBasisDim);
    }
    CMat guess2 = CMat::identity(kBasisDim) - guess1;
    outcome.povm.elements = {std::move(guess1), std::move(guess2)};
    // Rounding can push an exactly-zero error slightly negative.
    outcome.p_err = std::max(0.0, error_from_povm(outcome.povm, channel, state));
    return outcome;
}

double helstrom_error(double p1, double p2, const StateVector4 &psi1, const StateVector4 &psi2) {
    require_priors(p1, p2, "helstrom_error");
    require_unit(psi1, "helstrom_error");
    require_unit(psi2, "helstrom_error");
    return helstrom_from_overlap_sq(p1, p2, std::norm(inner(psi1.entries, psi2.entries)));
}

double helstrom_lambda_plus(double p1, double p2, Complex overlap) {
    double discriminant = std::max(0.0, 1 - 4 * p1 * p2 * std::norm(overlap));
    return 0.5 * (p1 - p2 + std::sqrt(discriminant));
}

double closed_form_error_product(const OverlapAmplitudes &amps, const PhaseChannel &channel) {
    amps.validate();
    channel.validate();
    double direct = std::norm(amps.l * amps.r_prime);
    double exchanged = std::norm(amps.l_prime * amps.r);
    double norm_sq = direct + exchanged;
    if (!(norm_sq >= kVanishingThreshold)) {
        throw VanishingProjection("closed_form_error_product: |l r'|^2 + |l' r|^2 vanishes");
    }
    double phi12 = channel.phi12();
    Complex z = (direct * std::polar(1.0, channel.omega_at(Spin::Down, Spin::Up) * phi12) +
                 exchanged * std::polar(1.0, channel.omega_at(Spin::Up, Spin::Down) * phi12)) /
                norm_sq;
    auto [p1, p2] = channel.priors;
    return 0.5 - std::sqrt(std::max(0.0, 0.25 - p1 * p2 * std::norm(z)));
}

double closed_form_error_balanced(const PhaseChannel &channel) {
    channel.validate();
    double half_angle =
        0.5 * (channel.omega_at(Spin::Down, Spin::Up) - channel.omega_at(Spin::Up, Spin::Down)) * channel.phi12();
    double c = std::cos(half_angle);
    auto [p1, p2] = channel.priors;
    return helstrom_from_overlap_sq(p1, p2, c * c);
}

double closed_form_error_general(const PureSpinSuperposition &prep, const OverlapAmplitudes &amps, Statistics stats,
                                 const PhaseChannel &channel) {
    if (stats == Statistics::Distinguishable) {
        throw std::invalid_argument("closed_form_error_general: needs boson or fermion statistics");
    }
    validate(PreparationSpec{prep});
    amps.validate();
    channel.validate();
    double eta = exchange_phase(stats);
    Complex direct_amp = amps.l * amps.r_prime;
    Complex exchanged_amp = amps.l_prime * amps.r;
    double direct = std::norm(direct_amp);
    double exchanged = std::norm(exchanged_amp);
    double same_spin = std::norm(direct_amp + eta * exchanged_amp);
    double a_sq = std::norm(prep.a);
    double b_sq = std::norm(prep.b);
    double norm_sq = a_sq * (direct + exchanged) + b_sq * same_spin;
    if (!(norm_sq >= kVanishingThreshold)) {
        throw VanishingProjection("closed_form_error_general: projected squared norm vanishes");
    }
    double phi12 = channel.phi12();
    Complex z = (a_sq * (direct * std::polar(1.0, channel.omega_at(Spin::Down, Spin::Up) * phi12) +
                         exchanged * std::polar(1.0, channel.omega_at(Spin::Up, Spin::Down) * phi12)) +
                 b_sq * same_spin * std::polar(1.0, channel.omega_at(Spin::Down, Spin::Down) * phi12)) /
                norm_sq;
    auto [p1, p2] = channel.priors;
    return helstrom_from_overlap_sq(p1, p2, std::norm(z));
}

StateVector4 project_preparation(const PreparationSpec &prep, const OverlapAmplitudes &amps, Statistics stats) {
    OverlapAmplitudes effective = amps;
    if (stats == Statistics::Distinguishable) {
        effective = amps.without_overlap();
        stats = Statistics::Boson;
    }
    if (const auto *product = std::get_if<PureProduct>(&prep)) {
        return project_pure(*product, effective, stats);
    }
    if (const auto *sup = std::get_if<PureSpinSuperposition>(&prep)) {
        return project_superposition(*sup, effective, stats);
    }
    throw std::invalid_argument("the discrimination game needs a pure preparation");
}

double game_error(const PreparationSpec &prep, const OverlapAmplitudes &amps, Statistics stats,
                  const PhaseChannel &channel) {
    channel.validate();
    StateVector4 state = project_preparation(prep, amps, stats);
    return helstrom_error(channel.priors[0], channel.priors[1], apply_phase(channel, 1, state),
                          apply_phase(channel, 2, state));
}

StatisticsSensitivity statistics_sensitivity(const PreparationSpec &prep, const OverlapAmplitudes &amps,
                                             const PhaseChannel &channel) {
    return {
        game_error(prep, amps, Statistics::Boson, channel),
        game_error(prep, amps, Statistics::Fermion, channel),
        game_error(prep, amps, Statistics::Distinguishable, channel),
    };
}

}  // namespace idc
