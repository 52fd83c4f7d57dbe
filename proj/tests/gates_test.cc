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

#include "qdesk/gates.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "qdesk/number_theory.h"
#include "test_util.h"

using namespace qdesk;
using qdesk::testing::dense_embed;
using qdesk::testing::random_circuit;
using qdesk::testing::random_op;
using qdesk::testing::random_state;
using qdesk::testing::random_unitary;

namespace {

const double kR = 1.0 / std::sqrt(2.0);
const double kPi = std::numbers::pi;

}  // namespace

TEST(hadamard, examples) {
    CVector c{Amplitude(0.6, 0.1), Amplitude(-0.2, 0.77)};
    CVector expected{kR * (c[0] + c[1]), kR * (c[0] - c[1])};
    ASSERT_LE(max_abs_diff(matvec(hadamard(), c), expected), 1e-15);
    ASSERT_LE(max_abs_diff(matmul(hadamard(), hadamard()).matrix(), SquareMatrix::identity(2)), 1e-15);
    ASSERT_LE(max_abs_diff(matvec(hadamard(), CVector{0, 1}), CVector{kR, -kR}), 1e-15);
}

TEST(pauli_x, examples) {
    ASSERT_EQ(matvec(pauli_x(), CVector{1, 0}), (CVector{0, 1}));
    ASSERT_EQ(matmul(pauli_x(), pauli_x()).matrix(), SquareMatrix::identity(2));
    CVector c{Amplitude(0.6, 0.1), Amplitude(-0.2, 0.77)};
    ASSERT_EQ(matvec(pauli_x(), c), (CVector{c[1], c[0]}));
}

TEST(twist, examples) {
    ASSERT_EQ(twist(0).matrix(), SquareMatrix::identity(2));
    ASSERT_LE(max_abs_diff(twist(kPi).matrix(), SquareMatrix{{1, 0}, {0, -1}}), 1e-15);
    CVector c{Amplitude(0.6, 0.1), Amplitude(-0.2, 0.77)};
    double alpha = 0.9;
    CVector expected{c[0], std::polar(1.0, alpha) * c[1]};
    ASSERT_LE(max_abs_diff(matvec(twist(alpha), c), expected), 1e-15);
}

TEST(twist, composition_adds_angles) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (int i = 0; i < 200; i++) {
        double a = angle(gen), b = angle(gen);
        ASSERT_LE(max_abs_diff(matmul(twist(a), twist(b)).matrix(), twist(a + b).matrix()), 1e-12);
    }
}

TEST(cnot, examples) {
    CVector v{1, 2, 3, 4};
    ASSERT_EQ(matvec(cnot(), v), (CVector{1, 2, 4, 3}));
    ASSERT_EQ(matmul(cnot(), cnot()).matrix(), SquareMatrix::identity(4));
}

TEST(cnot, first_target_controls_second) {
    // |1>|t> -> |1>|t xor 1>, |0>|t> -> |0>|t>.
    for (std::size_t c = 0; c < 2; c++) {
        for (std::size_t t = 0; t < 2; t++) {
            auto out = apply_gate(basis_state(2, 2 * c + t), GateOp::cx(0, 1));
            ASSERT_EQ(out, basis_state(2, 2 * c + (t ^ c)));
        }
    }
}

TEST(cnot, textbook_truth_table) {
    // CNOT(b_j (x) b_i) = b_{j xor i} (x) b_i with label (j, i) at index 2i + j.
    auto label = [](std::size_t j, std::size_t i) { return 2 * i + j; };
    for (std::size_t j = 0; j < 2; j++) {
        for (std::size_t i = 0; i < 2; i++) {
            CVector out = matvec(cnot(), qdesk::testing::basis_vector(4, label(j, i)));
            ASSERT_EQ(out, qdesk::testing::basis_vector(4, label(j ^ i, i))) << "j=" << j << " i=" << i;
        }
    }
}

TEST(controlled_phase, examples) {
    ASSERT_EQ(controlled_phase(0).matrix(), SquareMatrix::identity(4));
    CVector e3{0, 0, 0, 1};
    ASSERT_LE(max_abs_diff(matvec(controlled_phase(kPi), e3), CVector{0, 0, 0, -1}), 1e-15);
}

TEST(controlled_phase, symmetric_in_targets) {
    std::mt19937_64 gen(2);
    for (int i = 0; i < 50; i++) {
        auto s = random_state(3, gen);
        auto a = apply_gate(s, GateOp::cphase(0, 2, 0.4 * i));
        auto b = apply_gate(s, GateOp::cphase(2, 0, 0.4 * i));
        ASSERT_LE(max_abs_diff(a.amplitudes(), b.amplitudes()), 1e-15);
    }
}

TEST(swap_gate, exchanges_qubits) {
    SquareMatrix expected{
        {1, 0, 0, 0},
        {0, 0, 1, 0},
        {0, 1, 0, 0},
        {0, 0, 0, 1},
    };
    ASSERT_EQ(swap_gate().matrix(), expected);
}

TEST(oracle_uf, examples) {
    ASSERT_EQ(oracle_uf(0, 0).matrix(), SquareMatrix::identity(4));
    ASSERT_EQ(oracle_uf(1, 1).matrix(), kron(SquareMatrix::identity(2), pauli_x().matrix()));
    ASSERT_EQ(oracle_uf(0, 1).matrix(), cnot().matrix());
    ASSERT_THROW(oracle_uf(2, 0), std::invalid_argument);
}

TEST(oracle_uf, matches_definition) {
    for (int f0 = 0; f0 < 2; f0++) {
        for (int f1 = 0; f1 < 2; f1++) {
            int f[2] = {f0, f1};
            for (std::size_t j = 0; j < 2; j++) {
                for (std::size_t i = 0; i < 2; i++) {
                    CVector out = matvec(oracle_uf(f0, f1), qdesk::testing::basis_vector(4, 2 * j + i));
                    std::size_t expected = 2 * j + (static_cast<std::size_t>(f[j]) ^ i);
                    ASSERT_EQ(out, qdesk::testing::basis_vector(4, expected));
                }
            }
        }
    }
}

TEST(all_gates, are_unitary) {
    for (double a : {0.0, 0.3, -1.7, kPi, 100.0}) {
        ASSERT_TRUE(is_unitary(twist(a).matrix(), 1e-12));
        ASSERT_TRUE(is_unitary(controlled_phase(a).matrix(), 1e-12));
    }
    ASSERT_TRUE(is_unitary(hadamard().matrix(), 1e-12));
    ASSERT_TRUE(is_unitary(pauli_x().matrix(), 1e-12));
    ASSERT_TRUE(is_unitary(cnot().matrix(), 1e-12));
    ASSERT_TRUE(is_unitary(swap_gate().matrix(), 1e-12));
    for (int f = 0; f < 4; f++) {
        ASSERT_TRUE(is_unitary(oracle_uf(f >> 1, f & 1).matrix(), 1e-12));
    }
}

TEST(oracle_ux, examples) {
    auto ux1 = oracle_ux(1, 5, 2, 3);
    for (std::size_t j = 0; j < 4; j++) {
        for (std::size_t t = 0; t < 8; t++) {
            std::size_t expected_t = t < 5 ? (t + 1) % 5 : t;
            ASSERT_EQ(ux1.map((j << 3) | t), (j << 3) | expected_t);
        }
    }
    auto ux = oracle_ux(7, 15, 8, 4);
    ASSERT_EQ(ux.map((2u << 4) | 0u), (2u << 4) | 4u);
    ASSERT_EQ(ux.map((2u << 4) | 15u), (2u << 4) | 15u);
}

TEST(oracle_ux, rejects_invalid_parameters) {
    ASSERT_THROW(oracle_ux(3, 15, 8, 4), std::invalid_argument);
    ASSERT_THROW(oracle_ux(7, 15, 8, 3), std::invalid_argument);
    ASSERT_THROW(oracle_ux(7, 15, kMaxQubits, 4), RegisterTooLarge);
}

TEST(oracle_ux, is_a_bijection) {
    const unsigned n = 3;
    for (std::uint64_t modulus = 2; modulus <= 64; modulus++) {
        unsigned m = 0;
        while ((std::uint64_t{1} << m) < modulus) {
            m++;
        }
        for (std::uint64_t x = 1; x < modulus; x++) {
            if (gcd(x, modulus) != 1) {
                continue;
            }
            auto ux = oracle_ux(x, modulus, n, m);
            std::size_t dim = std::size_t{1} << (n + m);
            std::vector<bool> hit(dim, false);
            for (std::size_t i = 0; i < dim; i++) {
                std::size_t img = ux.map(i);
                ASSERT_LT(img, dim);
                ASSERT_FALSE(hit[img]) << "N=" << modulus << " x=" << x;
                hit[img] = true;
            }
        }
    }
}

TEST(oracle_ux, apply_agrees_with_map) {
    std::mt19937_64 gen(3);
    auto ux = oracle_ux(2, 21, 3, 5);
    auto s = random_state(8, gen);
    auto out = s;
    ux.apply(out);
    for (std::size_t i = 0; i < s.dim(); i++) {
        ASSERT_EQ(out[ux.map(i)], s[i]);
    }
}

TEST(apply_gate, examples) {
    auto h0 = apply_gate(basis_state(2, 0), GateOp::h(0));
    ASSERT_LE(max_abs_diff(h0.amplitudes(), CVector{kR, 0, kR, 0}), 1e-15);
    ASSERT_EQ(apply_gate(basis_state(2, 0), GateOp::x(1)), basis_state(2, 1));
    auto bell = apply_gate(h0, GateOp::cx(0, 1));
    ASSERT_LE(max_abs_diff(bell.amplitudes(), CVector{kR, 0, 0, kR}), 1e-15);
    ASSERT_FALSE(is_separable_2q(bell));
}

TEST(apply_gate, invalid_targets) {
    auto s = basis_state(2, 0);
    ASSERT_THROW(apply_gate(s, GateOp::h(2)), std::out_of_range);
    ASSERT_THROW(apply_gate(s, GateOp::cx(1, 1)), std::invalid_argument);
    ASSERT_THROW(apply_gate(s, GateOp::custom(cnot(), {0})), DimensionMismatch);
    ASSERT_THROW(Circuit(2).append(GateOp::x(5)), std::out_of_range);
}

TEST(apply_gate, strided_matches_dense) {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 200; trial++) {
        unsigned n = 1 + static_cast<unsigned>(gen() % 10);
        auto op = random_op(n, gen);
        auto s = random_state(n, gen);
        auto dense = dense_embed(op.gate.matrix(), op.targets, n);
        auto expected = matvec(dense, s.amplitudes());
        auto got = apply_gate(s, op);
        ASSERT_LE(max_abs_diff(got.amplitudes(), expected), 1e-10) << "trial " << trial << " n=" << n;
        ASSERT_NEAR(got.amplitudes().norm2(), 1.0, 1e-10);
    }
}

TEST(run_circuit, examples) {
    std::mt19937_64 gen(5);
    auto s = random_state(3, gen);
    ASSERT_EQ(run_circuit(s, Circuit(3)), s);
    Circuit hh(3);
    hh.append(GateOp::h(0)).append(GateOp::h(0));
    ASSERT_LE(max_abs_diff(run_circuit(s, hh).amplitudes(), s.amplitudes()), 1e-12);
    Circuit xx(3);
    xx.append(GateOp::x(2)).append(GateOp::x(2)).append(GateOp::cx(0, 1)).append(GateOp::cx(0, 1));
    ASSERT_LE(max_abs_diff(run_circuit(s, xx).amplitudes(), s.amplitudes()), 1e-15);
    ASSERT_THROW(run_circuit(s, Circuit(2)), DimensionMismatch);
}

TEST(inverse_circuit, examples) {
    Circuit t(1);
    t.append(GateOp::t(0, 0.25));
    auto inv = inverse_circuit(t);
    ASSERT_EQ(inv.size(), 1u);
    ASSERT_EQ(inv.ops()[0].kind, GateKind::Twist);
    ASSERT_EQ(inv.ops()[0].param, -0.25);
    ASSERT_LE(max_abs_diff(inv.ops()[0].gate.matrix(), twist(-0.25).matrix()), 0.0);

    Circuit h(1);
    h.append(GateOp::h(0));
    ASSERT_EQ(inverse_circuit(h).ops()[0].gate, hadamard());

    Circuit cx(2);
    cx.append(GateOp::cx(0, 1));
    ASSERT_EQ(inverse_circuit(cx).ops()[0].gate, cnot());
    ASSERT_EQ(inverse_circuit(cx).ops()[0].targets, (std::vector<unsigned>{0, 1}));
}

TEST(inverse_circuit, traces_back_random_circuits) {
    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 100; trial++) {
        unsigned n = 1 + static_cast<unsigned>(gen() % 6);
        auto c = random_circuit(n, gen() % 21, gen);
        auto s = random_state(n, gen);
        auto back = run_circuit(run_circuit(s, c), inverse_circuit(c));
        ASSERT_LE(max_abs_diff(back.amplitudes(), s.amplitudes()), 1e-8);
    }
}

TEST(expand_to_basic_gates, preserves_the_operator) {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 40; trial++) {
        unsigned n = 2 + static_cast<unsigned>(gen() % 3);
        auto c = random_circuit(n, 12, gen);
        auto basic = expand_to_basic_gates(c);
        for (const auto &op : basic.ops()) {
            ASSERT_NE(op.kind, GateKind::Swap);
            ASSERT_NE(op.kind, GateKind::ControlledPhase);
        }
        ASSERT_LE(max_abs_diff(circuit_matrix(basic), circuit_matrix(c)), 1e-12);
    }
}

TEST(circuit, counts_ops_by_kind) {
    Circuit c(3);
    c.append(GateOp::h(0)).append(GateOp::h(1)).append(GateOp::swap(0, 2)).append(GateOp::x(2));
    ASSERT_EQ(c.count(GateKind::Hadamard), 2u);
    ASSERT_EQ(c.count(GateKind::Swap), 1u);
    ASSERT_EQ(c.count(GateKind::Cnot), 0u);
    ASSERT_THROW(Circuit(0), RegisterTooLarge);
}
