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

#ifndef QDESK_LINALG_H
#define QDESK_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#ifndef QDESK_MAX_QUBITS
#define QDESK_MAX_QUBITS 26
#endif
#ifndef QDESK_MAX_DENSE_QUBITS
#define QDESK_MAX_DENSE_QUBITS 12
#endif

namespace qdesk {

using Amplitude = std::complex<double>;

/// Largest register the simulator will allocate a state vector for.
inline constexpr unsigned kMaxQubits = QDESK_MAX_QUBITS;
/// Largest register for which dense 2^n x 2^n matrices are built.
inline constexpr unsigned kMaxDenseQubits = QDESK_MAX_DENSE_QUBITS;

/// Tolerance used for every unitarity and normalization check.
inline constexpr double kUnitaryTol = 1e-10;

/// Thrown when a requested vector or matrix exceeds the configured caps.
struct RegisterTooLarge : std::length_error {
    using std::length_error::length_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense complex column vector. Entries are always finite.
class CVector {
   public:
    explicit CVector(std::size_t dim);
    explicit CVector(std::vector<Amplitude> entries);
    CVector(std::initializer_list<Amplitude> entries);

    std::size_t dim() const {
        return data_.size();
    }
    const Amplitude &operator[](std::size_t i) const {
        return data_[i];
    }
    Amplitude &operator[](std::size_t i) {
        return data_[i];
    }
    std::span<const Amplitude> entries() const {
        return data_;
    }
    std::span<Amplitude> entries() {
        return data_;
    }
    auto begin() const {
        return data_.begin();
    }
    auto end() const {
        return data_.end();
    }

    /// Squared Euclidean norm.
    double norm2() const;

    bool operator==(const CVector &) const = default;

   private:
    std::vector<Amplitude> data_;
};

/// Dense row-major square complex matrix with no structural guarantees.
class SquareMatrix {
   public:
    explicit SquareMatrix(std::size_t dim);
    /// Rows are given outer-most; every row must have `rows.size()` entries.
    SquareMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows);

    static SquareMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }
    Amplitude &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    std::span<const Amplitude> data() const {
        return data_;
    }

    bool operator==(const SquareMatrix &) const = default;

   private:
    std::size_t dim_;
    std::vector<Amplitude> data_;
};

/// A square matrix known to satisfy U U^dagger = I within kUnitaryTol.
///
/// Construction from arbitrary input validates the property. Library code that
/// builds gates from exact entries uses `trusted`, which skips the O(d^3) check.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(SquareMatrix m, double tol = kUnitaryTol);

    static UnitaryMatrix trusted(SquareMatrix m);

    std::size_t dim() const {
        return m_.dim();
    }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return m_(row, col);
    }
    const SquareMatrix &matrix() const {
        return m_;
    }

    bool operator==(const UnitaryMatrix &) const = default;

   private:
    struct TrustedTag {};
    UnitaryMatrix(SquareMatrix m, TrustedTag) : m_(std::move(m)) {
    }

    SquareMatrix m_;
};

/// Kronecker product: out[(i*dB + k), (j*dB + l)] = A[i,j] * B[k,l].
/// Throws RegisterTooLarge when the result would exceed 2^kMaxDenseQubits.
SquareMatrix kron(const SquareMatrix &a, const SquareMatrix &b);
UnitaryMatrix kron(const UnitaryMatrix &a, const UnitaryMatrix &b);

/// out[i*dim(v) + k] = u[i] * v[k]. The left factor is the high-order part of
/// the index. Throws RegisterTooLarge past 2^kMaxQubits entries.
CVector kron_vec(const CVector &u, const CVector &v);

CVector matvec(const SquareMatrix &m, const CVector &v);
inline CVector matvec(const UnitaryMatrix &m, const CVector &v) {
    return matvec(m.matrix(), v);
}

SquareMatrix matmul(const SquareMatrix &a, const SquareMatrix &b);
UnitaryMatrix matmul(const UnitaryMatrix &a, const UnitaryMatrix &b);

/// <u, v>, conjugate-linear in `u`.
Amplitude inner(const CVector &u, const CVector &v);

SquareMatrix dagger(const SquareMatrix &m);
UnitaryMatrix dagger(const UnitaryMatrix &m);

/// True iff max |(M M^dagger - I)_{ij}| <= tol.
bool is_unitary(const SquareMatrix &m, double tol = kUnitaryTol);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const SquareMatrix &a, const SquareMatrix &b);
double max_abs_diff(const CVector &a, const CVector &b);

}  // namespace qdesk

#endif
