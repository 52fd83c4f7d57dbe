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

#ifndef QDESK_ALGORITHMS_H
#define QDESK_ALGORITHMS_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdesk/gates.h"
#include "qdesk/number_theory.h"
#include "qdesk/register.h"

namespace qdesk {

// ---------------------------------------------------------------------------
// Deutsch
// ---------------------------------------------------------------------------

enum class DeutschVerdict { Constant, Balanced };

struct DeutschResult {
    DeutschVerdict verdict;
    /// Marginal of qubit 0 after the circuit: (P(b0), P(b1)).
    ProbDist first_qubit;
};

/// (H (x) I) U_f (H (x) H) (I (x) X) as a left-to-right op list on 2 qubits.
/// U_f appears exactly once.
Circuit deutsch_circuit(int f0, int f1);

/// Runs deutsch_circuit on |00> and reads qubit 0. Constant iff P(b0) > 1 - 1e-9.
DeutschResult deutsch(int f0, int f1);

// ---------------------------------------------------------------------------
// Shor
// ---------------------------------------------------------------------------

/// Largest n + m register the factoring pipeline will simulate.
inline constexpr unsigned kMaxShorQubits = 22;

struct RegisterSizes {
    /// n with N^2 <= 2^n < 2 N^2.
    unsigned first_qubits;
    /// m = ceil(log2 N).
    unsigned second_qubits;
};

RegisterSizes shor_sizing(std::uint64_t modulus);

struct ShorParams {
    std::uint64_t modulus;
    std::uint64_t base;
    unsigned first_qubits;
    unsigned second_qubits;

    /// Sizes the registers for `modulus` and checks gcd(base, modulus) == 1.
    static ShorParams make(std::uint64_t modulus, std::uint64_t base);

    std::size_t first_dim() const {
        return std::size_t{1} << first_qubits;
    }
};

/// (1/sqrt(2^n)) sum_j |j>|x^j mod N>, built by Hadamards on the first
/// register followed by U_x.
StateVector shor_state_prepare(const ShorParams &p);

/// Exact distribution of the first register after the QFT, obtained by
/// simulating the prepared state.
ProbDist shor_first_register_distribution(const ShorParams &p);

/// Closed-form probability of observing (c, x^j0):
///   2^{-2n} |sum_{k=0}^{K-1} e^{2 pi i r k c / 2^n}|^2
/// where K = floor(2^n / r) + 1 if j0 < 2^n mod r, else floor(2^n / r), so the
/// sum runs over exactly the j < 2^n with j = j0 (mod r).
double shor_peak_probability(std::size_t c, const ShorParams &p, std::uint64_t order, std::uint64_t j0);

/// shor_peak_probability summed over j0 = 0..r-1 for every c.
ProbDist shor_peak_distribution(const ShorParams &p, std::uint64_t order);

struct Convergent {
    std::uint64_t num;
    std::uint64_t den;
    bool operator==(const Convergent &) const = default;
};

/// Convergents p/q of num/den with q <= bound, in non-decreasing q order.
/// Requires den > 0 and num <= den.
std::vector<Convergent> continued_fraction_convergents(std::uint64_t num, std::uint64_t den,
                                                       std::uint64_t bound);

/// Turns a measured c into the order of x mod N, or nothing. Walks the
/// convergents of c / 2^n with denominator below N, tries each denominator
/// and its multiples up to N, and reduces the first hit to the least
/// exponent with x^r = 1. c == 0 carries no information and yields nothing.
std::optional<std::uint64_t> recover_order_from_sample(std::size_t c, unsigned n, std::uint64_t modulus,
                                                       std::uint64_t base);

struct OrderResult {
    std::uint64_t order;
    std::size_t measured_c;
    std::size_t trials_used;
};

struct OrderNotFound : std::runtime_error {
    std::size_t trials_used;
    explicit OrderNotFound(std::size_t trials);
};

inline constexpr std::size_t kDefaultOrderTrials = 16;

/// Samples the first register from its exact post-QFT distribution until a
/// sample yields the order. Throws OrderNotFound after `max_trials`.
OrderResult order_find_quantum(const ShorParams &p, RandomSource &rng, std::size_t max_trials = kDefaultOrderTrials);

enum class AttemptOutcome {
    /// gcd(x, N) > 1, no quantum step needed.
    SharedFactor,
    Factored,
    OddOrder,
    /// x^(r/2) = -1 mod N.
    TrivialRoot,
    OrderNotFound,
};

struct ShorAttempt {
    std::uint64_t base;
    AttemptOutcome outcome;
    std::optional<std::size_t> measured_c;
    std::optional<std::uint64_t> order;
    std::size_t trials = 0;
};

struct FactorResult {
    std::uint64_t p;
    std::uint64_t q;
    std::vector<ShorAttempt> attempts;
};

enum class ShorRejection { TooSmall, Even, Prime, PrimePower, TooLarge };

struct ShorPreconditionError : std::invalid_argument {
    ShorRejection reason;
    ShorPreconditionError(ShorRejection reason, const std::string &what);
};

struct ShorAttemptsExhausted : std::runtime_error {
    std::vector<ShorAttempt> attempts;
    explicit ShorAttemptsExhausted(std::vector<ShorAttempt> attempts);
};

inline constexpr std::size_t kDefaultShorAttempts = 32;

/// Throws ShorPreconditionError unless N is an odd composite, not a prime
/// power, whose registers fit in kMaxShorQubits.
void check_shor_modulus(std::uint64_t modulus);

/// Draws x uniformly from [2, N-1] until an attempt splits N. Returns (p, N/p)
/// with p = gcd(x^(r/2) - 1, N) (or gcd(x, N) for a lucky draw) plus the
/// per-attempt trace.
FactorResult shor_factor(std::uint64_t modulus, RandomSource &rng, std::size_t max_attempts = kDefaultShorAttempts,
                         std::size_t max_trials = kDefaultOrderTrials);

}  // namespace qdesk

#endif
