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

#ifndef QDESK_GATES_H
#define QDESK_GATES_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "qdesk/linalg.h"
#include "qdesk/register.h"

namespace qdesk {

// Single-qubit gates.
UnitaryMatrix hadamard();
UnitaryMatrix pauli_x();
/// diag(1, e^{i alpha}).
UnitaryMatrix twist(double alpha);

// Two-qubit gates act on (first, second) target with matrix index
// 2 * bit(first) + bit(second), i.e. the first target is the left tensor factor.

/// Permutation fixing |00>, |01> and exchanging |10> <-> |11>. The first
/// target is the control and the second is flipped.
///
/// Read against the textbook labels b_j (x) b_i, the identity
/// CNOT(b_j (x) b_i) = b_{j xor i} (x) b_i holds when the label's right factor
/// b_i is our first target (the control), i.e. label (j, i) is basis index
/// 2 * i + j.
UnitaryMatrix cnot();
/// diag(1, 1, 1, e^{i alpha}); symmetric in its two targets.
UnitaryMatrix controlled_phase(double alpha);
/// Exchanges the two targets. Built as the product of three CNOTs with
/// alternating control.
UnitaryMatrix swap_gate();
/// U_f(b_j (x) b_i) = b_j (x) b_{f(j) xor i}, with j on the first target.
UnitaryMatrix oracle_uf(int f0, int f1);

enum class GateKind { Hadamard, PauliX, Twist, Cnot, ControlledPhase, Swap, OracleUf, Custom };

std::string_view mnemonic(GateKind kind);

/// A 1- or 2-qubit unitary bound to target qubits.
struct GateOp {
    GateKind kind;
    UnitaryMatrix gate;
    std::vector<unsigned> targets;
    /// Angle for Twist / ControlledPhase; unused otherwise.
    double param = 0;

    static GateOp h(unsigned q);
    static GateOp x(unsigned q);
    static GateOp t(unsigned q, double alpha);
    static GateOp cx(unsigned control, unsigned target);
    static GateOp cphase(unsigned control, unsigned target, double alpha);
    static GateOp swap(unsigned a, unsigned b);
    static GateOp uf(int f0, int f1, unsigned input, unsigned output);
    static GateOp custom(UnitaryMatrix gate, std::vector<unsigned> targets);

    unsigned arity() const {
        return static_cast<unsigned>(targets.size());
    }
    /// Throws std::out_of_range / std::invalid_argument if the op cannot act
    /// on an n-qubit register.
    void validate(unsigned n) const;
};

class Circuit {
   public:
    explicit Circuit(unsigned num_qubits);

    unsigned num_qubits() const {
        return n_;
    }
    const std::vector<GateOp> &ops() const {
        return ops_;
    }
    std::size_t size() const {
        return ops_.size();
    }

    /// Validates `op` against the register size before appending.
    Circuit &append(GateOp op);
    Circuit &append(const Circuit &other);

    /// Number of ops of the given kind.
    std::size_t count(GateKind kind) const;

   private:
    unsigned n_;
    std::vector<GateOp> ops_;
};

/// Applies `op` in place with a strided kernel: O(2^n) work and no 2^n x 2^n
/// matrix.
void apply_gate_in_place(StateVector &s, const GateOp &op);
StateVector apply_gate(StateVector s, const GateOp &op);

StateVector run_circuit(StateVector s, const Circuit &c);

/// Reversed op order, each gate replaced by its adjoint.
Circuit inverse_circuit(const Circuit &c);

/// Induced 2^n x 2^n matrix, built column by column by running the circuit on
/// each basis state. Limited to kMaxDenseQubits.
SquareMatrix circuit_matrix(const Circuit &c);

/// Rewrites every SWAP as three CNOTs and every controlled phase as
///   T(a/2) on control, CNOT, T(-a/2) on target, CNOT, T(a/2) on target,
/// leaving a circuit made only of H, X, T and CNOT (plus any U_f / custom ops).
Circuit expand_to_basic_gates(const Circuit &c);

/// U_x: (j, t) -> (j, (t + x^j) mod N) for t < N, identity for t >= N, where j
/// is the first `n` qubits and t the last `m`. Held as a permutation of basis
/// indices; the 2^(n+m) matrix is never formed.
class ModExpOracle {
   public:
    /// Throws std::invalid_argument if gcd(x, N) != 1 or 2^m < N.
    ModExpOracle(std::uint64_t x, std::uint64_t modulus, unsigned n, unsigned m);

    unsigned num_qubits() const {
        return n_ + m_;
    }
    /// Image of a basis index under the permutation.
    std::size_t map(std::size_t index) const;
    /// Applies the permutation to an (n+m)-qubit register.
    void apply(StateVector &s) const;

   private:
    std::uint64_t x_;
    std::uint64_t modulus_;
    unsigned n_;
    unsigned m_;
};

ModExpOracle oracle_ux(std::uint64_t x, std::uint64_t modulus, unsigned n, unsigned m);

}  // namespace qdesk

#endif
