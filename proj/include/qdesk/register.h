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

#ifndef QDESK_REGISTER_H
#define QDESK_REGISTER_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qdesk/linalg.h"

namespace qdesk {

// Basis ordering used throughout the library: for an n-qubit register the
// basis index is sum_k bit_k * 2^(n-1-k). Qubit 0 is the leftmost tensor
// factor and the most significant bit, so qubit q lives at bit (n-1-q).

/// Bit mask selecting qubit `q` inside an `n`-qubit basis index.
inline std::size_t qubit_mask(unsigned n, unsigned q) {
    return std::size_t{1} << (n - 1 - q);
}

/// Normalized state of an n-qubit register.
class StateVector {
   public:
    /// Validates that the dimension is 2^n and the norm is 1 within kUnitaryTol.
    explicit StateVector(CVector amplitudes);

    unsigned num_qubits() const {
        return n_;
    }
    std::size_t dim() const {
        return amps_.dim();
    }
    const CVector &amplitudes() const {
        return amps_;
    }
    const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }

    /// In-place access for norm-preserving kernels. Callers must leave the
    /// state normalized.
    std::span<Amplitude> raw() {
        return amps_.entries();
    }

    bool operator==(const StateVector &) const = default;

   private:
    unsigned n_;
    CVector amps_;
};

/// Probability distribution over basis outcomes.
struct ProbDist {
    std::vector<double> probs;

    std::size_t size() const {
        return probs.size();
    }
    double operator[](std::size_t i) const {
        return probs[i];
    }
};

/// Seeded 64-bit Mersenne twister. Identical seeds produce identical draws on
/// every platform (the uniform conversion is done here, not by <random>).
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {
    }

    std::uint64_t seed() const {
        return seed_;
    }
    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [lo, hi], rejection sampled so there is no modulo bias.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

StateVector basis_state(unsigned n, std::size_t index);

ProbDist probabilities(const StateVector &s);

/// Inverse-CDF draw from `dist`. Outcomes with probability below 1e-15 are
/// never returned.
std::size_t sample(const ProbDist &dist, RandomSource &rng);

/// Draws a full-register outcome with probability |c_i|^2.
std::size_t measure_all(const StateVector &s, RandomSource &rng);

/// Marginal over `qubits`. Outcome o encodes qubits[k] at bit (|qubits|-1-k),
/// matching the register's own ordering, so marginal(s, {0..n-1}) equals
/// probabilities(s).
ProbDist marginal(const StateVector &s, std::span<const unsigned> qubits);

struct SubsetMeasurement {
    /// Encoded like the index of `marginal`.
    std::size_t outcome;
    StateVector collapsed;
};

/// Measures `qubits`, returning the outcome and the renormalized projection
/// of `s` onto it.
SubsetMeasurement measure_subset(const StateVector &s, std::span<const unsigned> qubits, RandomSource &rng);

inline constexpr double kSeparabilityTol = 1e-9;

/// Two-qubit product-state test: |c0 c3 - c1 c2| <= tol.
bool is_separable_2q(const StateVector &s, double tol = kSeparabilityTol);

/// Recovers single-qubit factors (u, v) with s = u (x) v up to rounding, or
/// nothing when `s` is entangled.
std::optional<std::pair<CVector, CVector>> factor_2q(const StateVector &s, double tol = kSeparabilityTol);

/// Equality up to a global unit phase. Phases are aligned at the
/// largest-magnitude amplitude of `a`.
bool equal_up_to_phase(const CVector &a, const CVector &b, double tol);

}  // namespace qdesk

#endif
