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

#include "idc/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace idc {

namespace {

void require_same_dim(size_t a, size_t b, const char *op) {
    if (a != b) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double off_diagonal_frobenius(const CMat &a) {
    double sum = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

double frobenius(const CMat &a) {
    double sum = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// J = D R with D = diag(1, e^{-i alpha}) making the pivot real and R the
// classical real symmetric rotation; a <- J^dagger a J and v <- v J.
void rotate(CMat &a, CMat &v, size_t p, size_t q) {
    Complex apq = a(p, q);
    double g = std::abs(apq);
    Complex phase = apq / g;  // e^{i alpha}
    double app = a(p, p).real();
    double aqq = a(q, q).real();

    double theta = (aqq - app) / (2 * g);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    Complex jpp = c;
    Complex jpq = s;
    Complex jqp = -s * std::conj(phase);
    Complex jqq = c * std::conj(phase);

    size_t n = a.dim();
    for (size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

}  // namespace

CVec::CVec(size_t dim) : entries_(dim) {
}

CVec::CVec(std::initializer_list<Complex> entries) : entries_(entries) {
}

CVec::CVec(std::vector<Complex> entries) : entries_(std::move(entries)) {
}

double CVec::norm_sq() const {
    double sum = 0;
    for (const auto &z : entries_) {
        sum += std::norm(z);
    }
    return sum;
}

double CVec::norm() const {
    return std::sqrt(norm_sq());
}

CMat::CMat(size_t dim) : dim_(dim), data_(dim * dim) {
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("CMat: rows must form a square matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMat CMat::identity(size_t dim) {
    CMat m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

CMat CMat::diagonal(std::span<const double> values) {
    CMat m(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

CMat CMat::adjoint() const {
    CMat m(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            m(i, j) = std::conj((*this)(j, i));
        }
    }
    return m;
}

Complex CMat::trace() const {
    Complex t = 0;
    for (size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

CMat &CMat::operator+=(const CMat &other) {
    require_same_dim(dim_, other.dim_, "CMat::operator+=");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

CMat &CMat::operator-=(const CMat &other) {
    require_same_dim(dim_, other.dim_, "CMat::operator-=");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

CMat &CMat::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

CMat operator+(CMat a, const CMat &b) {
    a += b;
    return a;
}

CMat operator-(CMat a, const CMat &b) {
    a -= b;
    return a;
}

CMat operator*(CMat a, Complex scale) {
    a *= scale;
    return a;
}

CMat operator*(Complex scale, CMat a) {
    a *= scale;
    return a;
}

CMat operator*(const CMat &a, const CMat &b) {
    require_same_dim(a.dim(), b.dim(), "CMat::operator*");
    size_t n = a.dim();
    CMat m(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            for (size_t j = 0; j < n; j++) {
                m(i, j) += aik * b(k, j);
            }
        }
    }
    return m;
}

CVec operator*(const CMat &a, const CVec &v) {
    require_same_dim(a.dim(), v.dim(), "CMat*CVec");
    CVec out(v.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

CVec operator*(Complex scale, CVec v) {
    for (size_t i = 0; i < v.dim(); i++) {
        v[i] *= scale;
    }
    return v;
}

Complex inner(const CVec &u, const CVec &v) {
    require_same_dim(u.dim(), v.dim(), "inner");
    Complex sum = 0;
    for (size_t i = 0; i < u.dim(); i++) {
        sum += std::conj(u[i]) * v[i];
    }
    return sum;
}

CMat outer(const CVec &u, const CVec &v) {
    require_same_dim(u.dim(), v.dim(), "outer");
    CMat m(u.dim());
    for (size_t i = 0; i < u.dim(); i++) {
        for (size_t j = 0; j < v.dim(); j++) {
            m(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return m;
}

double max_abs_diff(const CMat &a, const CMat &b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

double max_abs_diff(const CVec &a, const CVec &b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double hermiticity_defect(const CMat &a) {
    double worst = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = i; j < a.dim(); j++) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

double max_off_diagonal(const CMat &a) {
    double worst = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                worst = std::max(worst, std::abs(a(i, j)));
            }
        }
    }
    return worst;
}

std::vector<EigenPair> eigh(const CMat &input) {
    size_t n = input.dim();
    if (n == 0) {
        throw std::invalid_argument("eigh: empty matrix");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (!is_finite(input(i, j))) {
                throw std::invalid_argument("eigh: non-finite matrix entry");
            }
        }
    }
    double defect = hermiticity_defect(input);
    if (defect > kHermitianTolerance) {
        throw std::invalid_argument("eigh: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }

    CMat a = (input + input.adjoint()) * Complex(0.5);
    CMat v = CMat::identity(n);
    double tolerance = kJacobiOffDiagonalTolerance * std::max(1.0, frobenius(a));

    bool converged = off_diagonal_frobenius(a) <= tolerance;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                if (std::abs(a(p, q)) > 0) {
                    rotate(a, v, p, q);
                }
            }
        }
        converged = off_diagonal_frobenius(a) <= tolerance;
    }
    if (!converged) {
        throw ConvergenceError("eigh: off-diagonal norm " + std::to_string(off_diagonal_frobenius(a)) +
                               " above tolerance after " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    std::vector<EigenPair> pairs;
    pairs.reserve(n);
    for (size_t col : order) {
        CVec vec(n);
        for (size_t k = 0; k < n; k++) {
            vec[k] = v(k, col);
        }
        double norm = vec.norm();
        pairs.push_back({a(col, col).real(), Complex(1 / norm) * vec});
    }
    return pairs;
}

CMat reconstruct(std::span<const EigenPair> pairs) {
    if (pairs.empty()) {
        return {};
    }
    CMat m(pairs.front().vector.dim());
    for (const auto &pair : pairs) {
        m += outer(pair.vector, pair.vector) * Complex(pair.value);
    }
    return m;
}

}  // namespace idc
