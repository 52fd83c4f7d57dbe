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

#include "qdesk/algorithms.h"

#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "qdesk/fourier.h"

namespace qdesk {

Circuit deutsch_circuit(int f0, int f1) {
    Circuit c(2);
    c.append(GateOp::x(1));
    c.append(GateOp::h(0));
    c.append(GateOp::h(1));
    c.append(GateOp::uf(f0, f1, 0, 1));
    c.append(GateOp::h(0));
    return c;
}

DeutschResult deutsch(int f0, int f1) {
    StateVector out = run_circuit(basis_state(2, 0), deutsch_circuit(f0, f1));
    const std::array<unsigned, 1> first{0};
    ProbDist dist = marginal(out, first);
    DeutschVerdict verdict = dist[0] > 1 - 1e-9 ? DeutschVerdict::Constant : DeutschVerdict::Balanced;
    return {verdict, std::move(dist)};
}

RegisterSizes shor_sizing(std::uint64_t modulus) {
    if (modulus < 3) {
        throw std::invalid_argument("shor_sizing: modulus must be at least 3");
    }
    if (modulus > (std::uint64_t{1} << 31)) {
        throw RegisterTooLarge("shor_sizing: modulus too large to square in 64 bits");
    }
    std::uint64_t square = modulus * modulus;
    unsigned n = 0;
    while ((std::uint64_t{1} << n) < square) {
        n++;
    }
    unsigned m = 0;
    while ((std::uint64_t{1} << m) < modulus) {
        m++;
    }
    return {n, m};
}

ShorParams ShorParams::make(std::uint64_t modulus, std::uint64_t base) {
    RegisterSizes sizes = shor_sizing(modulus);
    if (gcd(base, modulus) != 1) {
        throw std::invalid_argument("ShorParams: base " + std::to_string(base) + " shares a factor with " +
                                    std::to_string(modulus));
    }
    return {modulus, base % modulus, sizes.first_qubits, sizes.second_qubits};
}

StateVector shor_state_prepare(const ShorParams &p) {
    unsigned total = p.first_qubits + p.second_qubits;
    if (total > kMaxQubits) {
        throw RegisterTooLarge("Shor register of " + std::to_string(total) + " qubits exceeds the cap");
    }
    ModExpOracle ux = oracle_ux(p.base, p.modulus, p.first_qubits, p.second_qubits);
    StateVector s = basis_state(total, 0);
    for (unsigned q = 0; q < p.first_qubits; q++) {
        apply_gate_in_place(s, GateOp::h(q));
    }
    ux.apply(s);
    return s;
}

ProbDist shor_first_register_distribution(const ShorParams &p) {
    StateVector s = shor_state_prepare(p);
    qft_apply_in_place(s, 0, p.first_qubits);
    std::vector<unsigned> first(p.first_qubits);
    std::iota(first.begin(), first.end(), 0u);
    return marginal(s, first);
}

double shor_peak_probability(std::size_t c, const ShorParams &p, std::uint64_t order, std::uint64_t j0) {
    if (order == 0 || j0 >= order) {
        throw std::invalid_argument("shor_peak_probability: need 0 <= j0 < r");
    }
    const std::uint64_t dim = p.first_dim();
    const std::uint64_t terms = dim / order + (j0 < dim % order ? 1 : 0);
    const std::uint64_t step = (order % dim) * (c % dim) % dim;
    Amplitude sum = 0;
    std::uint64_t phase = 0;
    for (std::uint64_t k = 0; k < terms; k++) {
        sum += zeta(dim, static_cast<std::int64_t>(phase));
        phase = (phase + step) % dim;
    }
    double d = static_cast<double>(dim);
    return std::norm(sum) / (d * d);
}

ProbDist shor_peak_distribution(const ShorParams &p, std::uint64_t order) {
    ProbDist out;
    out.probs.assign(p.first_dim(), 0.0);
    for (std::size_t c = 0; c < p.first_dim(); c++) {
        for (std::uint64_t j0 = 0; j0 < order; j0++) {
            out.probs[c] += shor_peak_probability(c, p, order, j0);
        }
    }
    return out;
}

std::vector<Convergent> continued_fraction_convergents(std::uint64_t num, std::uint64_t den,
                                                       std::uint64_t bound) {
    if (den == 0 || num > den) {
        throw std::invalid_argument("continued_fraction_convergents: need den > 0 and num <= den");
    }
    std::vector<Convergent> out;
    // h_k = a_k h_{k-1} + h_{k-2}, k_k = a_k k_{k-1} + k_{k-2}.
    std::uint64_t h_prev = 1, h_prev2 = 0;
    std::uint64_t k_prev = 0, k_prev2 = 1;
    while (true) {
        std::uint64_t a = num / den;
        std::uint64_t h = a * h_prev + h_prev2;
        std::uint64_t k = a * k_prev + k_prev2;
        if (k > bound) {
            break;
        }
        out.push_back({h, k});
        std::uint64_t rem = num % den;
        if (rem == 0) {
            break;
        }
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        num = den;
        den = rem;
    }
    return out;
}

namespace {

std::uint64_t reduce_to_order(std::uint64_t exponent, std::uint64_t base, std::uint64_t modulus) {
    for (std::uint64_t prime : prime_factors(exponent)) {
        while (exponent % prime == 0 && modpow(base, exponent / prime, modulus) == 1) {
            exponent /= prime;
        }
    }
    return exponent;
}

}  // namespace

std::optional<std::uint64_t> recover_order_from_sample(std::size_t c, unsigned n, std::uint64_t modulus,
                                                       std::uint64_t base) {
    std::uint64_t dim = std::uint64_t{1} << n;
    if (c >= dim) {
        throw std::out_of_range("recover_order_from_sample: c outside the first register");
    }
    if (c == 0) {
        return std::nullopt;
    }
    for (const Convergent &cv : continued_fraction_convergents(c, dim, modulus - 1)) {
        for (std::uint64_t candidate = cv.den; candidate <= modulus; candidate += cv.den) {
            if (modpow(base, candidate, modulus) == 1) {
                return reduce_to_order(candidate, base, modulus);
            }
        }
    }
    return std::nullopt;
}

OrderNotFound::OrderNotFound(std::size_t trials)
    : std::runtime_error("order not recovered after " + std::to_string(trials) + " measurements"),
      trials_used(trials) {
}

OrderResult order_find_quantum(const ShorParams &p, RandomSource &rng, std::size_t max_trials) {
    ProbDist dist = shor_first_register_distribution(p);
    for (std::size_t trial = 1; trial <= max_trials; trial++) {
        std::size_t c = sample(dist, rng);
        std::optional<std::uint64_t> r;
        if (c == 0) {
            // Only the 0/1 convergent is available; it is the answer iff x = 1.
            if (p.base % p.modulus == 1) {
                r = 1;
            }
        } else {
            r = recover_order_from_sample(c, p.first_qubits, p.modulus, p.base);
        }
        if (r) {
            return {*r, c, trial};
        }
    }
    throw OrderNotFound(max_trials);
}

ShorPreconditionError::ShorPreconditionError(ShorRejection reason, const std::string &what)
    : std::invalid_argument(what), reason(reason) {
}

ShorAttemptsExhausted::ShorAttemptsExhausted(std::vector<ShorAttempt> attempts)
    : std::runtime_error("no factor found after " + std::to_string(attempts.size()) + " attempts"),
      attempts(std::move(attempts)) {
}

void check_shor_modulus(std::uint64_t modulus) {
    const std::string n = std::to_string(modulus);
    if (modulus < 4) {
        throw ShorPreconditionError(ShorRejection::TooSmall, "modulus " + n + " is too small to factor");
    }
    if (modulus % 2 == 0) {
        throw ShorPreconditionError(ShorRejection::Even, "modulus " + n + " is even; 2 is a factor");
    }
    if (is_prime(modulus)) {
        throw ShorPreconditionError(ShorRejection::Prime, "modulus " + n + " is prime");
    }
    if (is_prime_power(modulus)) {
        throw ShorPreconditionError(ShorRejection::PrimePower,
                                    "modulus " + n + " is a prime power; order finding cannot split it");
    }
    RegisterSizes sizes = shor_sizing(modulus);
    if (sizes.first_qubits + sizes.second_qubits > kMaxShorQubits) {
        throw ShorPreconditionError(ShorRejection::TooLarge,
                                    "modulus " + n + " needs " +
                                        std::to_string(sizes.first_qubits + sizes.second_qubits) +
                                        " qubits; the cap is " + std::to_string(kMaxShorQubits));
    }
}

FactorResult shor_factor(std::uint64_t modulus, RandomSource &rng, std::size_t max_attempts,
                         std::size_t max_trials) {
    check_shor_modulus(modulus);
    std::vector<ShorAttempt> attempts;
    for (std::size_t i = 0; i < max_attempts; i++) {
        std::uint64_t x = rng.uniform_int(2, modulus - 1);
        ShorAttempt attempt{x, AttemptOutcome::SharedFactor, std::nullopt, std::nullopt};

        std::uint64_t shared = gcd(x, modulus);
        if (shared > 1) {
            attempts.push_back(attempt);
            return {shared, modulus / shared, std::move(attempts)};
        }

        OrderResult found{};
        try {
            found = order_find_quantum(ShorParams::make(modulus, x), rng, max_trials);
        } catch (const OrderNotFound &e) {
            attempt.outcome = AttemptOutcome::OrderNotFound;
            attempt.trials = e.trials_used;
            attempts.push_back(attempt);
            continue;
        }
        attempt.measured_c = found.measured_c;
        attempt.order = found.order;
        attempt.trials = found.trials_used;

        if (found.order % 2 != 0) {
            attempt.outcome = AttemptOutcome::OddOrder;
            attempts.push_back(attempt);
            continue;
        }
        std::uint64_t half = modpow(x, found.order / 2, modulus);
        if (half == modulus - 1) {
            attempt.outcome = AttemptOutcome::TrivialRoot;
            attempts.push_back(attempt);
            continue;
        }
        // r is minimal, so half != 1 and both gcds are proper divisors.
        std::uint64_t p = gcd(half - 1, modulus);
        attempt.outcome = AttemptOutcome::Factored;
        attempts.push_back(attempt);
        return {p, modulus / p, std::move(attempts)};
    }
    throw ShorAttemptsExhausted(std::move(attempts));
}

}  // namespace qdesk
