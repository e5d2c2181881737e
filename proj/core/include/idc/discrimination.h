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

#ifndef IDC_DISCRIMINATION_H
#define IDC_DISCRIMINATION_H

#include <array>
#include <vector>

#include "idc/linalg.h"
#include "idc/states.h"

namespace idc {

/// Phase box: applies U_k = exp(i G phi_k) with prior p_k, where the generator
/// G = sum omega_{sigma tau} |L sigma, R tau><L sigma, R tau| is diagonal in
/// the localized basis.
struct PhaseChannel {
    std::array<double, kBasisDim> omega{};  // basis order (dd, du, ud, uu)
    std::array<double, 2> phi{};
    std::array<double, 2> priors{0.5, 0.5};

    double phi12() const { return phi[0] - phi[1]; }
    double omega_at(Spin left, Spin right) const { return omega[basis_index(left, right)]; }

    /// Throws std::invalid_argument on non-finite fields or invalid priors.
    void validate() const;

    bool operator==(const PhaseChannel &) const = default;
};

struct Povm {
    std::vector<CMat> elements;

    /// Largest violation of positivity, hermiticity and completeness.
    double validity_defect() const;
};

struct DiscriminationOutcome {
    double p_err = 0;
    Povm povm;  // elements[0] guesses k = 1
    double lambda_plus = 0;
    Complex overlap;  // <Psi^1|Psi^2>
    std::vector<double> delta_spectrum;  // descending
};

/// Degenerate-Delta cutoff: at or below this the prior-guessing measurement is used.
constexpr double kPositiveEigenvalueThreshold = 1e-14;

StateVector4 apply_phase(const PhaseChannel &channel, int k, const StateVector4 &state);

/// Conjugates rho by both channel unitaries and reports whether diagonal input
/// stays diagonal. Non-diagonal input is not checked and returns true.
bool dephase_channel_check(const PhaseChannel &channel, const DensityMatrix4 &rho);

/// p1 |Psi^1><Psi^1| + p2 |Psi^2><Psi^2|.
DensityMatrix4 output_mixture(const PhaseChannel &channel, const StateVector4 &state);

/// p1 <Psi^1|Pi_2|Psi^1> + p2 <Psi^2|Pi_1|Psi^2>.
double error_from_povm(const Povm &povm, const PhaseChannel &channel, const StateVector4 &state);

/// Minimum-error measurement: Pi_1 projects onto the positive eigenvector of
/// Delta = p1 P1 - p2 P2, Pi_2 = I - Pi_1.
DiscriminationOutcome optimal_povm(const PhaseChannel &channel, const StateVector4 &state);

/// 1/2 (1 - sqrt(1 - 4 p1 p2 |<psi1|psi2>|^2)).
double helstrom_error(double p1, double p2, const StateVector4 &psi1, const StateVector4 &psi2);

/// 1/2 (p1 - p2 + sqrt(1 - 4 p1 p2 |<psi1|psi2>|^2)).
double helstrom_lambda_plus(double p1, double p2, Complex overlap);

/// Error of the game played with |psi down, psi' up> written directly in
/// terms of the overlap amplitudes.
double closed_form_error_product(const OverlapAmplitudes &amps, const PhaseChannel &channel);

/// The product game with all four squared amplitude moduli equal to 1/2.
double closed_form_error_balanced(const PhaseChannel &channel);

/// Error of the game played with |psi down, psi' (a up + b down)>.
double closed_form_error_general(const PureSpinSuperposition &prep, const OverlapAmplitudes &amps, Statistics stats,
                                 const PhaseChannel &channel);

struct StatisticsSensitivity {
    double boson_err;
    double fermion_err;
    double distinguishable_err;  // l' and r forced to zero
};

/// Plays the game for both exchange phases and for the no-overlap baseline.
/// prep must be PureProduct or PureSpinSuperposition.
StatisticsSensitivity statistics_sensitivity(const PreparationSpec &prep, const OverlapAmplitudes &amps,
                                             const PhaseChannel &channel);

/// Projects a pure preparation (product or spin superposition). Distinguishable
/// statistics means the no-overlap baseline evaluated with bosonic phase.
StateVector4 project_preparation(const PreparationSpec &prep, const OverlapAmplitudes &amps, Statistics stats);

/// Helstrom error of the game for a pure preparation.
double game_error(const PreparationSpec &prep, const OverlapAmplitudes &amps, Statistics stats,
                  const PhaseChannel &channel);

}  // namespace idc

#endif
