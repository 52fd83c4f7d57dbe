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

#ifndef QDESK_FOURIER_H
#define QDESK_FOURIER_H

#include <cstdint>

#include "qdesk/gates.h"
#include "qdesk/linalg.h"
#include "qdesk/register.h"

namespace qdesk {

/// e^{2 pi i power / order}, with `power` reduced mod `order` first. Quarter
/// turns are returned exactly.
Amplitude zeta(std::uint64_t order, std::int64_t power);

/// Dense F_n with entry [j, k] = zeta(2^n, j k) / sqrt(2^n). 1 <= n <= kMaxDenseQubits.
UnitaryMatrix qft_dense(unsigned n);

/// Gate-level F_n on qubits [first, first + count) of an n_total-qubit circuit:
/// for each qubit k, H on k then controlled_phase(pi / 2^(j-k)) with control j
/// for every later j; then the bit-reversal SWAP layer. Produces `count` H,
/// count(count-1)/2 CPHASE and floor(count/2) SWAP ops.
Circuit qft_circuit(unsigned count, unsigned first = 0, unsigned n_total = 0);

/// Applies F_count (x) identity to qubits [first, first + count) in
/// O(count^2 2^n) amplitude updates. count == 0 means "every qubit from first".
void qft_apply_in_place(StateVector &s, unsigned first = 0, unsigned count = 0);
StateVector qft_apply(StateVector s, unsigned first = 0, unsigned count = 0);

}  // namespace qdesk

#endif
