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

#include "qdesk/fourier.h"

#include <cmath>
#include <numbers>
#include <string>

namespace qdesk {

Amplitude zeta(std::uint64_t order, std::int64_t power) {
    if (order == 0) {
        throw std::invalid_argument("zeta: order must be positive");
    }
    auto signed_order = static_cast<std::int64_t>(order);
    std::int64_t p = power % signed_order;
    if (p < 0) {
        p += signed_order;
    }
    if ((4 * p) % signed_order == 0) {
        switch (4 * p / signed_order) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(order));
}

UnitaryMatrix qft_dense(unsigned n) {
    if (n == 0 || n > kMaxDenseQubits) {
        throw RegisterTooLarge("qft_dense: n=" + std::to_string(n) + " outside [1, " +
                               std::to_string(kMaxDenseQubits) + "]");
    }
    std::uint64_t dim = std::uint64_t{1} << n;
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    SquareMatrix m(dim);
    for (std::uint64_t j = 0; j < dim; j++) {
        for (std::uint64_t k = 0; k < dim; k++) {
            m(j, k) = zeta(dim, static_cast<std::int64_t>((j * k) % dim)) * scale;
        }
    }
    return UnitaryMatrix::trusted(std::move(m));
}

Circuit qft_circuit(unsigned count, unsigned first, unsigned n_total) {
    if (count == 0) {
        throw std::invalid_argument("qft_circuit: need at least one qubit");
    }
    if (n_total == 0) {
        n_total = first + count;
    }
    if (first + count > n_total) {
        throw std::out_of_range("qft_circuit: qubit range exceeds the register");
    }
    Circuit c(n_total);
    for (unsigned k = 0; k < count; k++) {
        c.append(GateOp::h(first + k));
        for (unsigned j = k + 1; j < count; j++) {
            c.append(GateOp::cphase(first + j, first + k, std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - k))));
        }
    }
    for (unsigned k = 0; k < count / 2; k++) {
        c.append(GateOp::swap(first + k, first + count - 1 - k));
    }
    return c;
}

void qft_apply_in_place(StateVector &s, unsigned first, unsigned count) {
    unsigned n = s.num_qubits();
    if (count == 0) {
        if (first >= n) {
            throw std::out_of_range("qft_apply: first qubit out of range");
        }
        count = n - first;
    }
    if (first + count > n) {
        throw std::out_of_range("qft_apply: qubit range exceeds the register");
    }
    auto amps = s.raw();
    const std::size_t dim = amps.size();
    const Amplitude h = 1.0 / std::sqrt(2.0);

    for (unsigned k = 0; k < count; k++) {
        const std::size_t mk = qubit_mask(n, first + k);
        for (std::size_t base = 0; base < dim; base += 2 * mk) {
            for (std::size_t i = base; i < base + mk; i++) {
                Amplitude a = amps[i];
                Amplitude b = amps[i | mk];
                amps[i] = h * (a + b);
                amps[i | mk] = h * (a - b);
            }
        }
        // Controlled phases are diagonal: multiply every amplitude with both
        // bits set by e^{i pi / 2^(j-k)}.
        for (unsigned j = k + 1; j < count; j++) {
            const std::size_t mj = qubit_mask(n, first + j);
            const std::size_t both = mk | mj;
            const Amplitude phase = zeta(std::uint64_t{2} << (j - k), 1);
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & both) == both) {
                    amps[i] *= phase;
                }
            }
        }
    }
    for (unsigned k = 0; k < count / 2; k++) {
        const std::size_t ma = qubit_mask(n, first + k);
        const std::size_t mb = qubit_mask(n, first + count - 1 - k);
        for (std::size_t i = 0; i < dim; i++) {
            if ((i & ma) && !(i & mb)) {
                std::swap(amps[i], amps[(i & ~ma) | mb]);
            }
        }
    }
}

StateVector qft_apply(StateVector s, unsigned first, unsigned count) {
    qft_apply_in_place(s, first, count);
    return s;
}

}  // namespace qdesk
