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

#include "qdesk/register.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qdesk {

namespace {

constexpr double kDeadBranch = 1e-15;

std::vector<std::size_t> subset_masks(unsigned n, std::span<const unsigned> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("qubit subset must not be empty");
    }
    std::vector<std::size_t> masks;
    masks.reserve(qubits.size());
    std::size_t seen = 0;
    for (unsigned q : qubits) {
        if (q >= n) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
        }
        std::size_t m = qubit_mask(n, q);
        if (seen & m) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        seen |= m;
        masks.push_back(m);
    }
    return masks;
}

std::size_t extract_outcome(std::size_t index, std::span<const std::size_t> masks) {
    std::size_t o = 0;
    for (std::size_t m : masks) {
        o = (o << 1) | ((index & m) ? 1 : 0);
    }
    return o;
}

}  // namespace

StateVector::StateVector(CVector amplitudes) : n_(0), amps_(std::move(amplitudes)) {
    std::size_t d = amps_.dim();
    if (d < 2 || !std::has_single_bit(d)) {
        throw std::invalid_argument("state dimension must be 2^n with n >= 1, got " + std::to_string(d));
    }
    n_ = static_cast<unsigned>(std::countr_zero(d));
    if (n_ > kMaxQubits) {
        throw RegisterTooLarge("register of " + std::to_string(n_) + " qubits exceeds the cap");
    }
    if (std::abs(amps_.norm2() - 1.0) > kUnitaryTol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

double RandomSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform_int: empty range");
    }
    std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) {
        return engine_();
    }
    std::uint64_t buckets = span + 1;
    std::uint64_t limit = UINT64_MAX - (UINT64_MAX % buckets + 1) % buckets;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw > limit);
    return lo + draw % buckets;
}

StateVector basis_state(unsigned n, std::size_t index) {
    if (n == 0 || n > kMaxQubits) {
        throw RegisterTooLarge("basis_state: qubit count " + std::to_string(n) + " outside [1, " +
                               std::to_string(kMaxQubits) + "]");
    }
    std::size_t d = std::size_t{1} << n;
    if (index >= d) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " + std::to_string(n) +
                                " qubits");
    }
    CVector v(d);
    v[index] = 1;
    return StateVector(std::move(v));
}

ProbDist probabilities(const StateVector &s) {
    ProbDist out;
    out.probs.reserve(s.dim());
    for (const auto &a : s.amplitudes()) {
        out.probs.push_back(std::norm(a));
    }
    return out;
}

std::size_t sample(const ProbDist &dist, RandomSource &rng) {
    std::vector<double> cdf(dist.size());
    double total = 0;
    for (std::size_t i = 0; i < dist.size(); i++) {
        if (dist[i] >= kDeadBranch) {
            total += dist[i];
        }
        cdf[i] = total;
    }
    if (total <= 0) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }
    double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // u < total always, so `it` lands on an entry whose own mass is live.
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), dist.size() - 1));
}

std::size_t measure_all(const StateVector &s, RandomSource &rng) {
    return sample(probabilities(s), rng);
}

ProbDist marginal(const StateVector &s, std::span<const unsigned> qubits) {
    auto masks = subset_masks(s.num_qubits(), qubits);
    ProbDist out;
    out.probs.assign(std::size_t{1} << masks.size(), 0.0);
    for (std::size_t i = 0; i < s.dim(); i++) {
        out.probs[extract_outcome(i, masks)] += std::norm(s[i]);
    }
    return out;
}

SubsetMeasurement measure_subset(const StateVector &s, std::span<const unsigned> qubits, RandomSource &rng) {
    auto masks = subset_masks(s.num_qubits(), qubits);
    ProbDist dist = marginal(s, qubits);
    std::size_t outcome = sample(dist, rng);
    double scale = 1.0 / std::sqrt(dist[outcome]);
    CVector collapsed(s.dim());
    for (std::size_t i = 0; i < s.dim(); i++) {
        if (extract_outcome(i, masks) == outcome) {
            collapsed[i] = s[i] * scale;
        }
    }
    return {outcome, StateVector(std::move(collapsed))};
}

bool is_separable_2q(const StateVector &s, double tol) {
    if (s.num_qubits() != 2) {
        throw std::invalid_argument("is_separable_2q requires a 2-qubit state");
    }
    return std::abs(s[0] * s[3] - s[1] * s[2]) <= tol;
}

std::optional<std::pair<CVector, CVector>> factor_2q(const StateVector &s, double tol) {
    if (!is_separable_2q(s, tol)) {
        return std::nullopt;
    }
    // Reshape to M[a][b] = c_{2a+b}; a rank-1 M equals u v^T. Take v from the
    // heavier row and project both rows onto it to get u.
    std::size_t row = std::norm(s[0]) + std::norm(s[1]) >= std::norm(s[2]) + std::norm(s[3]) ? 0 : 2;
    double row_norm = std::sqrt(std::norm(s[row]) + std::norm(s[row + 1]));
    CVector v{s[row] / row_norm, s[row + 1] / row_norm};
    CVector u{
        s[0] * std::conj(v[0]) + s[1] * std::conj(v[1]),
        s[2] * std::conj(v[0]) + s[3] * std::conj(v[1]),
    };
    return std::make_pair(std::move(u), std::move(v));
}

bool equal_up_to_phase(const CVector &a, const CVector &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < a.dim(); i++) {
        if (std::abs(a[i]) > std::abs(a[pivot])) {
            pivot = i;
        }
    }
    if (std::abs(a[pivot]) == 0) {
        return max_abs_diff(a, b) <= tol;
    }
    if (std::abs(b[pivot]) <= tol) {
        return false;
    }
    Amplitude rotate = (a[pivot] / std::abs(a[pivot])) / (b[pivot] / std::abs(b[pivot]));
    double worst = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        worst = std::max(worst, std::abs(a[i] - rotate * b[i]));
    }
    return worst <= tol;
}

}  // namespace qdesk
