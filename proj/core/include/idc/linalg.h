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

#ifndef IDC_LINALG_H
#define IDC_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace idc {

using Complex = std::complex<double>;

/// Dense complex column vector. Sized for the 2- and 4-dimensional spaces used
/// throughout the library, but nothing here assumes a particular dimension.
class CVec {
   public:
    CVec() = default;
    explicit CVec(size_t dim);
    CVec(std::initializer_list<Complex> entries);
    explicit CVec(std::vector<Complex> entries);

    size_t dim() const { return entries_.size(); }
    Complex &operator[](size_t i) { return entries_[i]; }
    const Complex &operator[](size_t i) const { return entries_[i]; }
    std::span<const Complex> entries() const { return entries_; }

    double norm_sq() const;
    double norm() const;

    bool operator==(const CVec &other) const = default;

   private:
    std::vector<Complex> entries_;
};

/// Dense square complex matrix, row-major.
class CMat {
   public:
    CMat() = default;
    explicit CMat(size_t dim);
    CMat(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMat identity(size_t dim);
    static CMat diagonal(std::span<const double> values);

    size_t dim() const { return dim_; }
    Complex &operator()(size_t row, size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(size_t row, size_t col) const { return data_[row * dim_ + col]; }

    CMat adjoint() const;
    Complex trace() const;

    CMat &operator+=(const CMat &other);
    CMat &operator-=(const CMat &other);
    CMat &operator*=(Complex scale);

    bool operator==(const CMat &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

CMat operator+(CMat a, const CMat &b);
CMat operator-(CMat a, const CMat &b);
CMat operator*(CMat a, Complex scale);
CMat operator*(Complex scale, CMat a);
CMat operator*(const CMat &a, const CMat &b);
CVec operator*(const CMat &a, const CVec &v);
CVec operator*(Complex scale, CVec v);

/// <u|v>, conjugate-linear in u.
Complex inner(const CVec &u, const CVec &v);

/// |u><v|.
CMat outer(const CVec &u, const CVec &v);

/// Largest entrywise magnitude of a - b.
double max_abs_diff(const CMat &a, const CMat &b);
double max_abs_diff(const CVec &a, const CVec &b);

/// max |A[i][j] - conj(A[j][i])|.
double hermiticity_defect(const CMat &a);

/// Largest magnitude among the off-diagonal entries.
double max_off_diagonal(const CMat &a);

constexpr double kHermitianTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kJacobiOffDiagonalTolerance = 1e-14;

struct EigenPair {
    double value;
    CVec vector;
};

/// The Jacobi iteration did not drive the off-diagonal mass below tolerance.
class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations, sorted by descending eigenvalue.
///
/// Inputs whose hermiticity defect exceeds kHermitianTolerance are rejected with
/// std::invalid_argument; anything within tolerance is symmetrized as
/// (A + A^dagger)/2 first. Vectors inside a degenerate cluster are orthonormal
/// but otherwise arbitrary.
std::vector<EigenPair> eigh(const CMat &a);

/// Rebuilds V diag(values) V^dagger from a decomposition.
CMat reconstruct(std::span<const EigenPair> pairs);

}  // namespace idc

#endif
