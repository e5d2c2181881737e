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

#ifndef IDC_STATES_H
#define IDC_STATES_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "idc/linalg.h"

namespace idc {

enum class Spin : uint8_t { Down = 0, Up = 1 };

enum class Statistics : uint8_t { Boson, Fermion, Distinguishable };

/// +1 for bosons, -1 for fermions. Throws std::invalid_argument for
/// Distinguishable, which has no exchange phase.
double exchange_phase(Statistics stats);

std::string_view to_string(Statistics stats);
std::string_view to_string(Spin spin);

/// Index of |L sigma, R tau> in the localized basis: 2*sigma + tau, giving the
/// order (dd, du, ud, uu).
constexpr size_t basis_index(Spin left, Spin right) {
    return 2 * static_cast<size_t>(left) + static_cast<size_t>(right);
}

constexpr size_t kBasisDim = 4;
inline constexpr std::array<std::string_view, kBasisDim> kBasisLabels{"dd", "du", "ud", "uu"};

constexpr double kVanishingThreshold = 1e-14;
constexpr double kNormalizationTolerance = 1e-12;

/// The projection onto the localized subspace has (numerically) zero weight.
class VanishingProjection : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Amplitudes tying the two spatial wavefunctions psi, psi' to the regions:
/// l = <L|psi>, r = <R|psi>, l_prime = <L|psi'>, r_prime = <R|psi'>.
struct OverlapAmplitudes {
    Complex l;
    Complex r;
    Complex l_prime;
    Complex r_prime;

    /// Square-root-of-one-half in every slot.
    static OverlapAmplitudes balanced();
    /// l = r' = 1, l' = r = 0.
    static OverlapAmplitudes separated();

    /// Throws std::invalid_argument on non-finite or over-normalized amplitudes.
    void validate() const;

    /// Same amplitudes with l' and r forced to zero.
    OverlapAmplitudes without_overlap() const;

    bool operator==(const OverlapAmplitudes &) const = default;
};

/// Incoherent mixture sum_{sigma,tau} p_{sigma tau} |psi sigma, psi' tau><...|.
struct MixedDiagonal {
    std::array<double, kBasisDim> weights{};  // basis order
    bool operator==(const MixedDiagonal &) const = default;
};

/// Independently prepared product |psi sigma, psi' tau>.
struct PureProduct {
    Spin first = Spin::Down;
    Spin second = Spin::Up;
    bool operator==(const PureProduct &) const = default;
};

/// |psi down, psi' s> with s = a|up> + b|down>.
struct PureSpinSuperposition {
    Complex a = 1;
    Complex b = 0;
    bool operator==(const PureSpinSuperposition &) const = default;
};

using PreparationSpec = std::variant<MixedDiagonal, PureProduct, PureSpinSuperposition>;

void validate(const PreparationSpec &prep);

/// Normalized pure state on the localized subspace.
struct StateVector4 {
    CVec entries;
    double norm_sq_raw = 0;  // squared norm before normalization
};

/// Normalized density matrix on the localized subspace.
struct DensityMatrix4 {
    CMat mat;
    double trace_raw = 0;  // trace before normalization

    /// Throws std::invalid_argument unless Hermitian, unit trace and PSD.
    void validate() const;
};

/// Normalizes raw localized amplitudes, fixing the global phase so the first
/// nonzero entry is real and nonnegative.
StateVector4 normalize_state(CVec raw, std::string_view context);

StateVector4 project_pure(const PureProduct &prep, const OverlapAmplitudes &amps, Statistics stats);
DensityMatrix4 project_mixed(const MixedDiagonal &prep, const OverlapAmplitudes &amps, Statistics stats);
StateVector4 project_superposition(const PureSpinSuperposition &prep, const OverlapAmplitudes &amps,
                                   Statistics stats);

/// Local projection of the same mixture prepared on labeled, distinguishable
/// particles. Always diagonal.
DensityMatrix4 project_distinguishable(const MixedDiagonal &prep, const OverlapAmplitudes &amps);

DensityMatrix4 to_density(const StateVector4 &state);

bool is_incoherent(const DensityMatrix4 &rho, double tol = 1e-12);

/// l1-norm of coherence: sum of off-diagonal magnitudes.
double coherence_l1(const DensityMatrix4 &rho);

/// Drops every off-diagonal entry.
DensityMatrix4 dephase(const DensityMatrix4 &rho);

/// CNOT with region L as control and region R as target:
/// |L sigma, R tau> -> |L sigma, R (tau xor sigma)>.
DensityMatrix4 cnot_slocc(const DensityMatrix4 &rho);

}  // namespace idc

#endif
