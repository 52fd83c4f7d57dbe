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

#ifndef QDESK_CIRCUIT_FILE_H
#define QDESK_CIRCUIT_FILE_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdesk/gates.h"

namespace qdesk {

// Line-oriented circuit text. `#` starts a comment, blank lines are skipped,
// and the first instruction must be `QUBITS <n>`. Instructions:
//
//   H <q>                X <q>               T <q> <alpha>
//   CNOT <ctl> <tgt>     SWAP <a> <b>        CPHASE <ctl> <tgt> <alpha>
//   QFT <lo> <hi>        (inclusive range, expands to the gate-level QFT)
//
// Angles are in radians.

enum class ParseErrorKind {
    MissingHeader,
    DuplicateHeader,
    BadQubitCount,
    UnknownMnemonic,
    WrongArgumentCount,
    MalformedNumber,
    QubitOutOfRange,
    RepeatedQubit,
    EmptyRange,
};

std::string_view describe(ParseErrorKind kind);

struct ParseError : std::runtime_error {
    ParseErrorKind kind;
    /// 1-based; 0 when the error is about the file as a whole.
    std::size_t line;
    ParseError(ParseErrorKind kind, std::size_t line, const std::string &detail);
};

/// Throws ParseError on the first offending line.
Circuit parse_circuit(std::string_view text);

}  // namespace qdesk

#endif
