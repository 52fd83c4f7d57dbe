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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace qdesk;

TEST(deutsch, constant_functions) {
    for (int f : {0, 1}) {
        auto res = deutsch(f, f);
        ASSERT_EQ(res.verdict, DeutschVerdict::Constant);
        ASSERT_NEAR(res.first_qubit[0], 1.0, 1e-12);
        ASSERT_NEAR(res.first_qubit[1], 0.0, 1e-12);
    }
}

TEST(deutsch, balanced_functions) {
    for (int f0 : {0, 1}) {
        auto res = deutsch(f0, 1 - f0);
        ASSERT_EQ(res.verdict, DeutschVerdict::Balanced);
        ASSERT_NEAR(res.first_qubit[0], 0.0, 1e-12);
        ASSERT_NEAR(res.first_qubit[1], 1.0, 1e-12);
    }
}

TEST(deutsch, single_oracle_call) {
    for (int f0 : {0, 1}) {
        for (int f1 : {0, 1}) {
            ASSERT_EQ(deutsch_circuit(f0, f1).count(GateKind::OracleUf), 1u);
        }
    }
}

TEST(deutsch, full_output_state) {
    // (H x I) U_f (H x H)|0 1> = +-|f(0) xor f(1)> x |->.
    const double h = 1 / std::sqrt(2.0);
    for (int f0 : {0, 1}) {
        for (int f1 : {0, 1}) {
            auto out = run_circuit(basis_state(2, 0), deutsch_circuit(f0, f1));
            std::size_t first = static_cast<std::size_t>(f0 ^ f1);
            CVector expected(4);
            expected[2 * first] = h;
            expected[2 * first + 1] = -h;
            ASSERT_TRUE(equal_up_to_phase(out.amplitudes(), expected, 1e-12)) << f0 << f1;
        }
    }
}

TEST(shor_sizing, examples) {
    auto s15 = shor_sizing(15);
    ASSERT_EQ(s15.first_qubits, 8u);
    ASSERT_EQ(s15.second_qubits, 4u);
    auto s21 = shor_sizing(21);
    ASSERT_EQ(s21.first_qubits, 9u);
    ASSERT_EQ(s21.second_qubits, 5u);
    auto s3 = shor_sizing(3);
    ASSERT_EQ(s3.first_qubits, 4u);
    ASSERT_EQ(s3.second_qubits, 2u);
    ASSERT_THROW(shor_sizing(2), std::invalid_argument);
}

TEST(shor_sizing, bounds_hold) {
    for (std::uint64_t n = 3; n < 5000; n++) {
        auto s = shor_sizing(n);
        std::uint64_t q = std::uint64_t{1} << s.first_qubits;
        ASSERT_LE(n * n, q);
        ASSERT_LT(q, 2 * n * n);
        ASSERT_LE(n, std::uint64_t{1} << s.second_qubits);
        ASSERT_GT(n, std::uint64_t{1} << (s.second_qubits - 1));
    }
}

TEST(shor_state_prepare, fifteen_base_seven) {
    auto s = shor_state_prepare(ShorParams::make(15, 7));
    ASSERT_EQ(s.num_qubits(), 12u);
    const std::uint64_t cycle[] = {1, 7, 4, 13};
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < s.dim(); i++) {
        if (std::abs(s[i]) > 1e-12) {
            nonzero++;
        }
    }
    ASSERT_EQ(nonzero, 256u);
    for (std::size_t j = 0; j < 256; j++) {
        ASSERT_NEAR(std::abs(s[j * 16 + cycle[j % 4]] - Amplitude(1.0 / 16, 0)), 0, 1e-12);
    }
}

TEST(shor_state_prepare, base_one_leaves_second_register_at_one) {
    auto s = shor_state_prepare(ShorParams::make(15, 1));
    for (std::size_t j = 0; j < 256; j++) {
        ASSERT_NEAR(std::abs(s[j * 16 + 1]), 1.0 / 16, 1e-12);
    }
}

TEST(shor_params, rejects_shared_factor) {
    ASSERT_THROW(ShorParams::make(15, 6), std::invalid_argument);
}

TEST(shor_peak_probability, examples) {
    auto p = ShorParams::make(15, 7);
    // r = 4 divides 256: each peak c = 64 k gets 64^2 / 256^2 per offset.
    ASSERT_NEAR(shor_peak_probability(64, p, 4, 0), 1.0 / 16, 1e-12);
    ASSERT_NEAR(shor_peak_probability(0, p, 4, 3), 1.0 / 16, 1e-12);
    ASSERT_NEAR(shor_peak_probability(1, p, 4, 0), 0.0, 1e-12);
    auto dist = shor_peak_distribution(p, 4);
    for (std::size_t c = 0; c < 256; c++) {
        ASSERT_NEAR(dist[c], c % 64 == 0 ? 0.25 : 0.0, 1e-12) << c;
    }
}

TEST(shor_peak_probability, uneven_term_counts) {
    // dim = 512, r = 6: offsets 0 and 1 get 86 terms, the rest 85.
    auto p = ShorParams::make(21, 2);
    ASSERT_NEAR(shor_peak_probability(0, p, 6, 0), 86.0 * 86.0 / (512.0 * 512.0), 1e-15);
    ASSERT_NEAR(shor_peak_probability(0, p, 6, 5), 85.0 * 85.0 / (512.0 * 512.0), 1e-15);
    double total = 0;
    for (double q : shor_peak_distribution(p, 6).probs) {
        total += q;
    }
    ASSERT_NEAR(total, 1.0, 1e-10);
}

TEST(shor_first_register_distribution, matches_closed_form) {
    for (auto [n, x] : {std::pair<std::uint64_t, std::uint64_t>{15, 7}, {21, 2}, {15, 2}, {21, 5}}) {
        auto p = ShorParams::make(n, x);
        auto simulated = shor_first_register_distribution(p);
        auto closed = shor_peak_distribution(p, order_bruteforce(x, n));
        ASSERT_EQ(simulated.probs.size(), closed.probs.size());
        for (std::size_t c = 0; c < closed.probs.size(); c++) {
            ASSERT_NEAR(simulated[c], closed[c], 1e-9) << n << " " << x << " c=" << c;
        }
    }
}

TEST(continued_fractions, examples) {
    ASSERT_EQ(continued_fraction_convergents(1, 4, 100), (std::vector<Convergent>{{0, 1}, {1, 4}}));
    ASSERT_EQ(continued_fraction_convergents(0, 256, 100), (std::vector<Convergent>{{0, 1}}));
    ASSERT_EQ(continued_fraction_convergents(85, 256, 14), (std::vector<Convergent>{{0, 1}, {1, 3}}));
    ASSERT_EQ(continued_fraction_convergents(85, 256, 256), (std::vector<Convergent>{{0, 1}, {1, 3}, {85, 256}}));
    ASSERT_THROW(continued_fraction_convergents(1, 0, 10), std::invalid_argument);
}

TEST(continued_fractions, best_approximation_law) {
    // Every reduced h/k with |x - h/k| < 1/(2k^2) is a convergent of x, and
    // every convergent satisfies |x - h/k| <= 1/k^2.
    for (std::uint64_t den = 1; den <= 48; den++) {
        for (std::uint64_t num = 0; num <= den; num++) {
            auto cv = continued_fraction_convergents(num, den, den);
            ASSERT_FALSE(cv.empty());
            for (const auto &c : cv) {
                std::uint64_t diff = num * c.den > c.num * den ? num * c.den - c.num * den : c.num * den - num * c.den;
                ASSERT_LE(diff * c.den, den) << num << "/" << den;
            }
            auto last = cv.back();
            ASSERT_EQ(last.num * den, num * last.den);
            for (std::uint64_t k = 1; k <= den; k++) {
                for (std::uint64_t h = 0; h <= k; h++) {
                    if (std::gcd(h, k) != 1) {
                        continue;
                    }
                    std::uint64_t diff = num * k > h * den ? num * k - h * den : h * den - num * k;
                    // |num/den - h/k| < 1/(2k^2)  <=>  2 k diff < den
                    if (2 * k * diff < den) {
                        ASSERT_TRUE(std::find(cv.begin(), cv.end(), Convergent{h, k}) != cv.end())
                            << h << "/" << k << " near " << num << "/" << den;
                    }
                }
            }
        }
    }
}

TEST(recover_order, examples) {
    ASSERT_EQ(recover_order_from_sample(64, 8, 15, 7), std::optional<std::uint64_t>(4));
    ASSERT_EQ(recover_order_from_sample(128, 8, 15, 7), std::optional<std::uint64_t>(4));
    ASSERT_EQ(recover_order_from_sample(192, 8, 15, 7), std::optional<std::uint64_t>(4));
    ASSERT_EQ(recover_order_from_sample(0, 8, 15, 7), std::nullopt);
    ASSERT_THROW(recover_order_from_sample(256, 8, 15, 7), std::out_of_range);
}

TEST(recover_order, never_returns_a_wrong_order) {
    for (std::uint64_t n : {15, 21, 33}) {
        auto sizes = shor_sizing(n);
        for (std::uint64_t x = 2; x < n; x++) {
            if (std::gcd(x, n) != 1) {
                continue;
            }
            std::uint64_t r = order_bruteforce(x, n);
            for (std::size_t c = 0; c < (std::size_t{1} << sizes.first_qubits); c += 7) {
                auto got = recover_order_from_sample(c, sizes.first_qubits, n, x);
                if (got) {
                    ASSERT_EQ(*got, r) << n << " " << x << " " << c;
                }
            }
        }
    }
}

TEST(order_find_quantum, fifteen_base_seven) {
    auto p = ShorParams::make(15, 7);
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        RandomSource rng(seed);
        auto res = order_find_quantum(p, rng);
        ASSERT_EQ(res.order, 4u);
        ASSERT_TRUE(res.measured_c == 64 || res.measured_c == 128 || res.measured_c == 192) << res.measured_c;
        ASSERT_GE(res.trials_used, 1u);
    }
}

TEST(order_find_quantum, base_one) {
    RandomSource rng(5);
    auto res = order_find_quantum(ShorParams::make(15, 1), rng);
    ASSERT_EQ(res.order, 1u);
    ASSERT_EQ(res.measured_c, 0u);
}

TEST(order_find_quantum, zero_trials_throws) {
    RandomSource rng(5);
    ASSERT_THROW(order_find_quantum(ShorParams::make(15, 7), rng, 0), OrderNotFound);
}

TEST(order_find_quantum, agrees_with_classical_order) {
    RandomSource rng(99);
    for (std::uint64_t n : {15, 21, 33, 35}) {
        for (std::uint64_t x = 2; x < n; x++) {
            if (std::gcd(x, n) != 1) {
                continue;
            }
            auto res = order_find_quantum(ShorParams::make(n, x), rng);
            ASSERT_EQ(res.order, order_bruteforce(x, n)) << n << " " << x;
        }
    }
}

TEST(shor_factor, fifteen) {
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        RandomSource rng(seed);
        auto res = shor_factor(15, rng);
        ASSERT_EQ(std::min(res.p, res.q), 3u);
        ASSERT_EQ(std::max(res.p, res.q), 5u);
        ASSERT_FALSE(res.attempts.empty());
        auto last = res.attempts.back().outcome;
        ASSERT_TRUE(last == AttemptOutcome::Factored || last == AttemptOutcome::SharedFactor);
    }
}

TEST(shor_factor, products_are_nontrivial) {
    for (std::uint64_t n : {21, 33, 35, 39, 51, 55}) {
        RandomSource rng(n);
        auto res = shor_factor(n, rng);
        ASSERT_EQ(res.p * res.q, n);
        ASSERT_GT(res.p, 1u);
        ASSERT_GT(res.q, 1u);
    }
}

TEST(shor_factor, rejected_moduli) {
    RandomSource rng(1);
    auto reason = [&](std::uint64_t n) {
        try {
            shor_factor(n, rng);
        } catch (const ShorPreconditionError &e) {
            return e.reason;
        }
        ADD_FAILURE() << n << " was accepted";
        return ShorRejection::TooSmall;
    };
    ASSERT_EQ(reason(3), ShorRejection::TooSmall);
    ASSERT_EQ(reason(16), ShorRejection::Even);
    ASSERT_EQ(reason(13), ShorRejection::Prime);
    ASSERT_EQ(reason(9), ShorRejection::PrimePower);
    ASSERT_EQ(reason(125), ShorRejection::PrimePower);
    ASSERT_EQ(reason(1003), ShorRejection::TooLarge);
}

TEST(shor_factor, exhausted_attempts) {
    RandomSource rng(1);
    ASSERT_THROW(shor_factor(15, rng, 0), ShorAttemptsExhausted);
}
