// Copyright 2026 The qdesk Authors
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

#include "qdesk/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qdesk {

namespace {

void require_finite(std::span<const Amplitude> entries) {
    for (const auto &a : entries) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitude is not finite");
        }
    }
}

void require_nonempty(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("dimension must be at least 1");
    }
}

}  // namespace

CVector::CVector(std::size_t dim) : data_(dim) {
    require_nonempty(dim);
}

CVector::CVector(std::vector<Amplitude> entries) : data_(std::move(entries)) {
    require_nonempty(data_.size());
    require_finite(data_);
}

CVector::CVector(std::initializer_list<Amplitude> entries) : CVector(std::vector<Amplitude>(entries)) {
}

double CVector::norm2() const {
    double total = 0;
    for (const auto &a : data_) {
        total += std::norm(a);
    }
    return total;
}

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    require_nonempty(dim);
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows)
    : dim_(rows.size()), data_() {
    require_nonempty(dim_);
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionMismatch("matrix rows must all have length " + std::to_string(dim_));
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

UnitaryMatrix::UnitaryMatrix(SquareMatrix m, double tol) : m_(std::move(m)) {
    if (!is_unitary(m_, tol)) {
        throw std::invalid_argument("matrix is not unitary");
    }
}

UnitaryMatrix UnitaryMatrix::trusted(SquareMatrix m) {
    return UnitaryMatrix(std::move(m), TrustedTag{});
}

SquareMatrix kron(const SquareMatrix &a, const SquareMatrix &b) {
    std::size_t da = a.dim();
    std::size_t db = b.dim();
    if (da > (std::size_t{1} << kMaxDenseQubits) / db) {
        throw RegisterTooLarge(
            "kron result dimension exceeds the dense cap of 2^" + std::to_string(kMaxDenseQubits));
    }
    SquareMatrix out(da * db);
    for (std::size_t i = 0; i < da; i++) {
        for (std::size_t j = 0; j < da; j++) {
            Amplitude aij = a(i, j);
            for (std::size_t k = 0; k < db; k++) {
                for (std::size_t l = 0; l < db; l++) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

UnitaryMatrix kron(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    return UnitaryMatrix::trusted(kron(a.matrix(), b.matrix()));
}

CVector kron_vec(const CVector &u, const CVector &v) {
    if (u.dim() > (std::size_t{1} << kMaxQubits) / v.dim()) {
        throw RegisterTooLarge("kron_vec result exceeds 2^" + std::to_string(kMaxQubits) + " entries");
    }
    std::vector<Amplitude> out(u.dim() * v.dim());
    for (std::size_t i = 0; i < u.dim(); i++) {
        for (std::size_t k = 0; k < v.dim(); k++) {
            out[i * v.dim() + k] = u[i] * v[k];
        }
    }
    return CVector(std::move(out));
}

CVector matvec(const SquareMatrix &m, const CVector &v) {
    if (m.dim() != v.dim()) {
        throw DimensionMismatch(
            "matvec: matrix dim " + std::to_string(m.dim()) + " vs vector dim " + std::to_string(v.dim()));
    }
    CVector out(v.dim());
    for (std::size_t r = 0; r < m.dim(); r++) {
        Amplitude acc = 0;
        for (std::size_t c = 0; c < m.dim(); c++) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

SquareMatrix matmul(const SquareMatrix &a, const SquareMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matmul: dimensions differ");
    }
    std::size_t d = a.dim();
    SquareMatrix out(d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t k = 0; k < d; k++) {
            Amplitude aik = a(i, k);
            if (aik == Amplitude{}) {
                continue;
            }
            for (std::size_t j = 0; j < d; j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

UnitaryMatrix matmul(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    return UnitaryMatrix::trusted(matmul(a.matrix(), b.matrix()));
}

Amplitude inner(const CVector &u, const CVector &v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("inner: dimensions differ");
    }
    Amplitude acc = 0;
    for (std::size_t i = 0; i < u.dim(); i++) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

SquareMatrix dagger(const SquareMatrix &m) {
    SquareMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); r++) {
        for (std::size_t c = 0; c < m.dim(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

UnitaryMatrix dagger(const UnitaryMatrix &m) {
    return UnitaryMatrix::trusted(dagger(m.matrix()));
}

bool is_unitary(const SquareMatrix &m, double tol) {
    std::size_t d = m.dim();
    // (M M^dagger)_{ij} = sum_k M_ik conj(M_jk): row i dotted with row j.
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = i; j < d; j++) {
            Amplitude acc = 0;
            for (std::size_t k = 0; k < d; k++) {
                acc += m(i, k) * std::conj(m(j, k));
            }
            if (i == j) {
                acc -= 1.0;
            }
            if (std::abs(acc) > tol) {
                return false;
            }
        }
    }
    return true;
}

double max_abs_diff(const SquareMatrix &a, const SquareMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("max_abs_diff: dimensions differ");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.data().size(); i++) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

double max_abs_diff(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("max_abs_diff: dimensions differ");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace qdesk
