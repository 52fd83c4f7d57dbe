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

#include <cmath>
#include <string>

#include "qdesk/number_theory.h"

namespace qdesk {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

SquareMatrix permutation_matrix(std::size_t dim, auto &&image) {
    SquareMatrix m(dim);
    for (std::size_t col = 0; col < dim; col++) {
        m(image(col), col) = 1;
    }
    return m;
}

// Same 2-qubit gate with its targets exchanged.
SquareMatrix exchange_targets(const SquareMatrix &g) {
    auto flip = [](std::size_t i) { return ((i & 1) << 1) | (i >> 1); };
    SquareMatrix out(4);
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            out(flip(r), flip(c)) = g(r, c);
        }
    }
    return out;
}

void apply_1q(std::span<Amplitude> amps, std::size_t mask, const UnitaryMatrix &g) {
    const Amplitude g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t i = base; i < base + mask; i++) {
            Amplitude a = amps[i];
            Amplitude b = amps[i | mask];
            amps[i] = g00 * a + g01 * b;
            amps[i | mask] = g10 * a + g11 * b;
        }
    }
}

void apply_2q(std::span<Amplitude> amps, std::size_t mask_hi, std::size_t mask_lo, const UnitaryMatrix &g) {
    const std::size_t both = mask_hi | mask_lo;
    const std::size_t dim = amps.size();
    for (std::size_t i = 0; i < dim; i++) {
        if (i & both) {
            continue;
        }
        const std::size_t idx[4] = {i, i | mask_lo, i | mask_hi, i | both};
        Amplitude in[4];
        for (int k = 0; k < 4; k++) {
            in[k] = amps[idx[k]];
        }
        for (int r = 0; r < 4; r++) {
            Amplitude acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += g(r, c) * in[c];
            }
            amps[idx[r]] = acc;
        }
    }
}

}  // namespace

UnitaryMatrix hadamard() {
    return UnitaryMatrix::trusted(SquareMatrix{
        {kInvSqrt2, kInvSqrt2},
        {kInvSqrt2, -kInvSqrt2},
    });
}

UnitaryMatrix pauli_x() {
    return UnitaryMatrix::trusted(SquareMatrix{
        {0, 1},
        {1, 0},
    });
}

UnitaryMatrix twist(double alpha) {
    return UnitaryMatrix::trusted(SquareMatrix{
        {1, 0},
        {0, std::polar(1.0, alpha)},
    });
}

UnitaryMatrix cnot() {
    return UnitaryMatrix::trusted(SquareMatrix{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
    });
}

UnitaryMatrix controlled_phase(double alpha) {
    SquareMatrix m = SquareMatrix::identity(4);
    m(3, 3) = std::polar(1.0, alpha);
    return UnitaryMatrix::trusted(std::move(m));
}

UnitaryMatrix swap_gate() {
    const SquareMatrix c01 = cnot().matrix();
    SquareMatrix c10 = exchange_targets(c01);
    return UnitaryMatrix::trusted(matmul(c01, matmul(c10, c01)));
}

UnitaryMatrix oracle_uf(int f0, int f1) {
    if ((f0 != 0 && f0 != 1) || (f1 != 0 && f1 != 1)) {
        throw std::invalid_argument("oracle_uf: f values must be 0 or 1");
    }
    const int f[2] = {f0, f1};
    return UnitaryMatrix::trusted(permutation_matrix(4, [&](std::size_t in) {
        std::size_t j = in >> 1;
        std::size_t i = in & 1;
        return (j << 1) | (i ^ static_cast<std::size_t>(f[j]));
    }));
}

std::string_view mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::Hadamard:
            return "H";
        case GateKind::PauliX:
            return "X";
        case GateKind::Twist:
            return "T";
        case GateKind::Cnot:
            return "CNOT";
        case GateKind::ControlledPhase:
            return "CPHASE";
        case GateKind::Swap:
            return "SWAP";
        case GateKind::OracleUf:
            return "UF";
        case GateKind::Custom:
            return "U";
    }
    return "?";
}

GateOp GateOp::h(unsigned q) {
    return {GateKind::Hadamard, hadamard(), {q}};
}

GateOp GateOp::x(unsigned q) {
    return {GateKind::PauliX, pauli_x(), {q}};
}

GateOp GateOp::t(unsigned q, double alpha) {
    return {GateKind::Twist, twist(alpha), {q}, alpha};
}

GateOp GateOp::cx(unsigned control, unsigned target) {
    return {GateKind::Cnot, cnot(), {control, target}};
}

GateOp GateOp::cphase(unsigned control, unsigned target, double alpha) {
    return {GateKind::ControlledPhase, controlled_phase(alpha), {control, target}, alpha};
}

GateOp GateOp::swap(unsigned a, unsigned b) {
    return {GateKind::Swap, swap_gate(), {a, b}};
}

GateOp GateOp::uf(int f0, int f1, unsigned input, unsigned output) {
    return {GateKind::OracleUf, oracle_uf(f0, f1), {input, output}};
}

GateOp GateOp::custom(UnitaryMatrix gate, std::vector<unsigned> targets) {
    return {GateKind::Custom, std::move(gate), std::move(targets)};
}

void GateOp::validate(unsigned n) const {
    if (targets.empty() || targets.size() > 2) {
        throw std::invalid_argument("gates act on one or two qubits");
    }
    if (gate.dim() != (std::size_t{1} << targets.size())) {
        throw DimensionMismatch("gate dimension " + std::to_string(gate.dim()) + " does not match " +
                                std::to_string(targets.size()) + " target(s)");
    }
    for (unsigned q : targets) {
        if (q >= n) {
            throw std::out_of_range("target qubit " + std::to_string(q) + " out of range for " + std::to_string(n) +
                                    " qubits");
        }
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("two-qubit gate targets must be distinct");
    }
}

Circuit::Circuit(unsigned num_qubits) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw RegisterTooLarge("circuit qubit count " + std::to_string(num_qubits) + " outside [1, " +
                               std::to_string(kMaxQubits) + "]");
    }
}

Circuit &Circuit::append(GateOp op) {
    op.validate(n_);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    for (const auto &op : other.ops()) {
        append(op);
    }
    return *this;
}

std::size_t Circuit::count(GateKind kind) const {
    std::size_t total = 0;
    for (const auto &op : ops_) {
        total += op.kind == kind;
    }
    return total;
}

void apply_gate_in_place(StateVector &s, const GateOp &op) {
    unsigned n = s.num_qubits();
    op.validate(n);
    if (op.arity() == 1) {
        apply_1q(s.raw(), qubit_mask(n, op.targets[0]), op.gate);
    } else {
        apply_2q(s.raw(), qubit_mask(n, op.targets[0]), qubit_mask(n, op.targets[1]), op.gate);
    }
}

StateVector apply_gate(StateVector s, const GateOp &op) {
    apply_gate_in_place(s, op);
    return s;
}

StateVector run_circuit(StateVector s, const Circuit &c) {
    if (c.num_qubits() != s.num_qubits()) {
        throw DimensionMismatch("circuit has " + std::to_string(c.num_qubits()) + " qubits but state has " +
                                std::to_string(s.num_qubits()));
    }
    for (const auto &op : c.ops()) {
        apply_gate_in_place(s, op);
    }
    return s;
}

Circuit inverse_circuit(const Circuit &c) {
    Circuit out(c.num_qubits());
    for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
        const GateOp &op = *it;
        switch (op.kind) {
            case GateKind::Twist:
                out.append(GateOp::t(op.targets[0], -op.param));
                break;
            case GateKind::ControlledPhase:
                out.append(GateOp::cphase(op.targets[0], op.targets[1], -op.param));
                break;
            case GateKind::Custom:
                out.append(GateOp::custom(dagger(op.gate), op.targets));
                break;
            default:
                // H, X, CNOT, SWAP and U_f are all involutions.
                out.append(op);
                break;
        }
    }
    return out;
}

SquareMatrix circuit_matrix(const Circuit &c) {
    unsigned n = c.num_qubits();
    if (n > kMaxDenseQubits) {
        throw RegisterTooLarge("circuit_matrix: " + std::to_string(n) + " qubits exceeds the dense cap");
    }
    std::size_t dim = std::size_t{1} << n;
    SquareMatrix out(dim);
    for (std::size_t col = 0; col < dim; col++) {
        StateVector s = run_circuit(basis_state(n, col), c);
        for (std::size_t row = 0; row < dim; row++) {
            out(row, col) = s[row];
        }
    }
    return out;
}

Circuit expand_to_basic_gates(const Circuit &c) {
    Circuit out(c.num_qubits());
    for (const auto &op : c.ops()) {
        if (op.kind == GateKind::Swap) {
            unsigned a = op.targets[0], b = op.targets[1];
            out.append(GateOp::cx(a, b));
            out.append(GateOp::cx(b, a));
            out.append(GateOp::cx(a, b));
        } else if (op.kind == GateKind::ControlledPhase) {
            unsigned ctl = op.targets[0], tgt = op.targets[1];
            double half = op.param / 2;
            out.append(GateOp::t(ctl, half));
            out.append(GateOp::cx(ctl, tgt));
            out.append(GateOp::t(tgt, -half));
            out.append(GateOp::cx(ctl, tgt));
            out.append(GateOp::t(tgt, half));
        } else {
            out.append(op);
        }
    }
    return out;
}

ModExpOracle::ModExpOracle(std::uint64_t x, std::uint64_t modulus, unsigned n, unsigned m)
    : x_(0), modulus_(modulus), n_(n), m_(m) {
    if (modulus < 2) {
        throw std::invalid_argument("U_x: modulus must be at least 2");
    }
    if (n == 0 || m == 0 || n + m > kMaxQubits) {
        throw RegisterTooLarge("U_x: register sizes n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                               " outside the simulator cap");
    }
    if ((std::uint64_t{1} << m) < modulus) {
        throw std::invalid_argument("U_x: second register too small, 2^m < N");
    }
    if (gcd(x, modulus) != 1) {
        throw std::invalid_argument("U_x: gcd(x, N) != 1, so t -> t + x^j is not a unit orbit");
    }
    x_ = x % modulus;
}

std::size_t ModExpOracle::map(std::size_t index) const {
    std::size_t t_mask = (std::size_t{1} << m_) - 1;
    std::size_t j = index >> m_;
    std::size_t t = index & t_mask;
    if (t >= modulus_) {
        return index;
    }
    std::size_t shifted = (t + modpow(x_, j, modulus_)) % modulus_;
    return (j << m_) | shifted;
}

void ModExpOracle::apply(StateVector &s) const {
    if (s.num_qubits() != num_qubits()) {
        throw DimensionMismatch("U_x acts on " + std::to_string(num_qubits()) + " qubits, state has " +
                                std::to_string(s.num_qubits()));
    }
    auto amps = s.raw();
    std::vector<Amplitude> out(amps.size());
    std::size_t block = std::size_t{1} << m_;
    for (std::size_t j = 0; j < (std::size_t{1} << n_); j++) {
        std::uint64_t power = modpow(x_, j, modulus_);
        std::size_t base = j << m_;
        for (std::size_t t = 0; t < block; t++) {
            std::size_t dest = t < modulus_ ? (t + power) % modulus_ : t;
            out[base + dest] = amps[base + t];
        }
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

ModExpOracle oracle_ux(std::uint64_t x, std::uint64_t modulus, unsigned n, unsigned m) {
    return ModExpOracle(x, modulus, n, m);
}

}  // namespace qdesk
