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

#include "idc/states.h"

#include <cmath>
#include <sstream>

namespace idc {

namespace {

constexpr double kPhaseAnchorThreshold = 1e-12;

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double require_exchange_phase(Statistics stats, const char *op) {
    if (stats == Statistics::Distinguishable) {
        throw std::invalid_argument(std::string(op) +
                                    ": identical-particle projection needs boson or fermion statistics");
    }
    return exchange_phase(stats);
}

std::string describe(const OverlapAmplitudes &amps) {
    std::ostringstream out;
    out << "l=" << amps.l << " r=" << amps.r << " l'=" << amps.l_prime << " r'=" << amps.r_prime;
    return out.str();
}

Spin other(Spin s) {
    return s == Spin::Down ? Spin::Up : Spin::Down;
}

}  // namespace

double exchange_phase(Statistics stats) {
    switch (stats) {
        case Statistics::Boson:
            return 1;
        case Statistics::Fermion:
            return -1;
        case Statistics::Distinguishable:
            break;
    }
    throw std::invalid_argument("exchange_phase: distinguishable particles have no exchange phase");
}

std::string_view to_string(Statistics stats) {
    switch (stats) {
        case Statistics::Boson:
            return "boson";
        case Statistics::Fermion:
            return "fermion";
        case Statistics::Distinguishable:
            return "distinguishable";
    }
    return "?";
}

std::string_view to_string(Spin spin) {
    return spin == Spin::Down ? "down" : "up";
}

OverlapAmplitudes OverlapAmplitudes::balanced() {
    double h = std::sqrt(0.5);
    return {h, h, h, h};
}

OverlapAmplitudes OverlapAmplitudes::separated() {
    return {1, 0, 0, 1};
}

void OverlapAmplitudes::validate() const {
    if (!finite(l) || !finite(r) || !finite(l_prime) || !finite(r_prime)) {
        throw std::invalid_argument("OverlapAmplitudes: non-finite amplitude");
    }
    if (std::norm(l) + std::norm(r) > 1 + kNormalizationTolerance) {
        throw std::invalid_argument("OverlapAmplitudes: |l|^2 + |r|^2 exceeds 1");
    }
    if (std::norm(l_prime) + std::norm(r_prime) > 1 + kNormalizationTolerance) {
        throw std::invalid_argument("OverlapAmplitudes: |l'|^2 + |r'|^2 exceeds 1");
    }
}

OverlapAmplitudes OverlapAmplitudes::without_overlap() const {
    return {l, 0, 0, r_prime};
}

void validate(const PreparationSpec &prep) {
    if (const auto *mixed = std::get_if<MixedDiagonal>(&prep)) {
        double sum = 0;
        for (double w : mixed->weights) {
            if (!std::isfinite(w) || w < 0) {
                throw std::invalid_argument("MixedDiagonal: weights must be finite and nonnegative");
            }
            sum += w;
        }
        if (std::abs(sum - 1) > kNormalizationTolerance) {
            throw std::invalid_argument("MixedDiagonal: weights must sum to 1");
        }
    } else if (const auto *sup = std::get_if<PureSpinSuperposition>(&prep)) {
        if (!finite(sup->a) || !finite(sup->b)) {
            throw std::invalid_argument("PureSpinSuperposition: non-finite coefficient");
        }
        if (std::abs(std::norm(sup->a) + std::norm(sup->b) - 1) > kNormalizationTolerance) {
            throw std::invalid_argument("PureSpinSuperposition: |a|^2 + |b|^2 must equal 1");
        }
    }
}

void DensityMatrix4::validate() const {
    if (mat.dim() != kBasisDim) {
        throw std::invalid_argument("DensityMatrix4: expected a 4x4 matrix");
    }
    if (hermiticity_defect(mat) > kHermitianTolerance) {
        throw std::invalid_argument("DensityMatrix4: not Hermitian");
    }
    if (std::abs(mat.trace() - Complex(1)) > kNormalizationTolerance) {
        throw std::invalid_argument("DensityMatrix4: trace is not 1");
    }
    for (const auto &pair : eigh(mat)) {
        if (pair.value < -1e-10) {
            throw std::invalid_argument("DensityMatrix4: negative eigenvalue");
        }
    }
}

StateVector4 normalize_state(CVec raw, std::string_view context) {
    double norm_sq = raw.norm_sq();
    if (!(norm_sq >= kVanishingThreshold)) {
        std::ostringstream msg;
        msg << context << ": vanishing projection (squared norm " << norm_sq << ")";
        throw VanishingProjection(msg.str());
    }
    double norm = std::sqrt(norm_sq);
    for (size_t i = 0; i < raw.dim(); i++) {
        raw[i] /= norm;
    }
    for (size_t i = 0; i < raw.dim(); i++) {
        double mag = std::abs(raw[i]);
        if (mag > kPhaseAnchorThreshold) {
            Complex unphase = std::conj(raw[i]) / mag;
            for (size_t j = 0; j < raw.dim(); j++) {
                raw[j] *= unphase;
            }
            raw[i] = std::abs(raw[i]);
            break;
        }
    }
    return {std::move(raw), norm_sq};
}

StateVector4 project_pure(const PureProduct &prep, const OverlapAmplitudes &amps, Statistics stats) {
    double eta = require_exchange_phase(stats, "project_pure");
    amps.validate();

    CVec raw(kBasisDim);
    Complex direct = amps.l * amps.r_prime;
    Complex exchanged = eta * amps.l_prime * amps.r;
    if (prep.first == prep.second) {
        raw[basis_index(prep.first, prep.first)] = direct + exchanged;
    } else {
        raw[basis_index(prep.first, prep.second)] = direct;
        raw[basis_index(prep.second, prep.first)] = exchanged;
    }

    std::string context = "project_pure(" + std::string(to_string(prep.first)) + "," +
                          std::string(to_string(prep.second)) + ", " + std::string(to_string(stats)) + ", " +
                          describe(amps) + ")";
    return normalize_state(std::move(raw), context);
}

DensityMatrix4 project_mixed(const MixedDiagonal &prep, const OverlapAmplitudes &amps, Statistics stats) {
    double eta = require_exchange_phase(stats, "project_mixed");
    amps.validate();
    validate(PreparationSpec{prep});

    const auto &[l, r, lp, rp] = amps;
    double direct = std::norm(l * rp);
    double exchanged = std::norm(lp * r);
    Complex cross = eta * l * rp * std::conj(lp) * std::conj(r);

    CMat rho(kBasisDim);
    for (Spin sigma : {Spin::Down, Spin::Up}) {
        for (Spin tau : {Spin::Down, Spin::Up}) {
            double p = prep.weights[basis_index(sigma, tau)];
            if (p == 0) {
                continue;
            }
            size_t st = basis_index(sigma, tau);
            size_t ts = basis_index(tau, sigma);
            rho(st, st) += p * direct;
            rho(st, ts) += p * cross;
            rho(ts, st) += p * std::conj(cross);
            rho(ts, ts) += p * exchanged;
        }
    }

    double trace = rho.trace().real();
    if (!(trace >= kVanishingThreshold)) {
        std::ostringstream msg;
        msg << "project_mixed(" << to_string(stats) << ", " << describe(amps) << "): vanishing projection (trace "
            << trace << ")";
        throw VanishingProjection(msg.str());
    }
    rho *= Complex(1 / trace);
    return {std::move(rho), trace};
}

StateVector4 project_superposition(const PureSpinSuperposition &prep, const OverlapAmplitudes &amps,
                                   Statistics stats) {
    double eta = require_exchange_phase(stats, "project_superposition");
    amps.validate();
    validate(PreparationSpec{prep});

    Complex direct = amps.l * amps.r_prime;
    Complex exchanged = eta * amps.l_prime * amps.r;

    CVec raw(kBasisDim);
    raw[basis_index(Spin::Down, Spin::Up)] = prep.a * direct;
    raw[basis_index(Spin::Up, Spin::Down)] = prep.a * exchanged;
    raw[basis_index(Spin::Down, Spin::Down)] = prep.b * (direct + exchanged);

    std::ostringstream context;
    context << "project_superposition(a=" << prep.a << " b=" << prep.b << ", " << to_string(stats) << ", "
            << describe(amps) << ")";
    return normalize_state(std::move(raw), context.str());
}

DensityMatrix4 project_distinguishable(const MixedDiagonal &prep, const OverlapAmplitudes &amps) {
    amps.validate();
    validate(PreparationSpec{prep});

    double weight = std::norm(amps.l) * std::norm(amps.r_prime);
    if (!(weight >= kVanishingThreshold)) {
        throw VanishingProjection("project_distinguishable(" + describe(amps) +
                                  "): particle A never found in L or B never found in R");
    }
    CMat rho(kBasisDim);
    for (size_t i = 0; i < kBasisDim; i++) {
        rho(i, i) = prep.weights[i];
    }
    return {std::move(rho), weight};
}

DensityMatrix4 to_density(const StateVector4 &state) {
    return {outer(state.entries, state.entries), state.norm_sq_raw};
}

bool is_incoherent(const DensityMatrix4 &rho, double tol) {
    return max_off_diagonal(rho.mat) <= tol;
}

double coherence_l1(const DensityMatrix4 &rho) {
    double sum = 0;
    for (size_t i = 0; i < rho.mat.dim(); i++) {
        for (size_t j = 0; j < rho.mat.dim(); j++) {
            if (i != j) {
                sum += std::abs(rho.mat(i, j));
            }
        }
    }
    return sum;
}

DensityMatrix4 dephase(const DensityMatrix4 &rho) {
    CMat out(rho.mat.dim());
    for (size_t i = 0; i < rho.mat.dim(); i++) {
        out(i, i) = rho.mat(i, i);
    }
    return {std::move(out), rho.trace_raw};
}

DensityMatrix4 cnot_slocc(const DensityMatrix4 &rho) {
    if (rho.mat.dim() != kBasisDim) {
        throw std::invalid_argument("cnot_slocc: expected a 4x4 density matrix");
    }
    std::array<size_t, kBasisDim> target{};
    for (Spin control : {Spin::Down, Spin::Up}) {
        for (Spin t : {Spin::Down, Spin::Up}) {
            Spin flipped = control == Spin::Up ? other(t) : t;
            target[basis_index(control, t)] = basis_index(control, flipped);
        }
    }
    CMat out(kBasisDim);
    for (size_t i = 0; i < kBasisDim; i++) {
        for (size_t j = 0; j < kBasisDim; j++) {
            out(target[i], target[j]) = rho.mat(i, j);
        }
    }
    return {std::move(out), rho.trace_raw};
}

}  // namespace idc
