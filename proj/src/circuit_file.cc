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

#include "qdesk/circuit_file.h"

#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

#include "qdesk/fourier.h"

namespace qdesk {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
            i++;
        }
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) {
            i++;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

class LineParser {
   public:
    LineParser(std::size_t line, std::vector<std::string_view> tokens) : line_(line), tokens_(std::move(tokens)) {
    }

    void expect_args(std::size_t count) const {
        if (tokens_.size() != count + 1) {
            fail(ParseErrorKind::WrongArgumentCount, std::string(tokens_[0]) + " takes " + std::to_string(count) +
                                                         " argument(s), got " + std::to_string(tokens_.size() - 1));
        }
    }

    unsigned integer(std::size_t arg) const {
        std::string_view tok = tokens_[arg];
        unsigned value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || end != tok.data() + tok.size()) {
            fail(ParseErrorKind::MalformedNumber, "expected a non-negative integer, got '" + std::string(tok) + "'");
        }
        return value;
    }

    unsigned qubit(std::size_t arg, unsigned n) const {
        unsigned q = integer(arg);
        if (q >= n) {
            fail(ParseErrorKind::QubitOutOfRange,
                 "qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
        }
        return q;
    }

    double angle(std::size_t arg) const {
        std::string_view tok = tokens_[arg];
        double value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || end != tok.data() + tok.size() || !std::isfinite(value)) {
            fail(ParseErrorKind::MalformedNumber, "expected an angle in radians, got '" + std::string(tok) + "'");
        }
        return value;
    }

    void distinct(unsigned a, unsigned b) const {
        if (a == b) {
            fail(ParseErrorKind::RepeatedQubit, "qubit " + std::to_string(a) + " used twice in one gate");
        }
    }

    [[noreturn]] void fail(ParseErrorKind kind, const std::string &detail) const {
        throw ParseError(kind, line_, detail);
    }

   private:
    std::size_t line_;
    std::vector<std::string_view> tokens_;
};

}  // namespace

std::string_view describe(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::MissingHeader:
            return "missing QUBITS header";
        case ParseErrorKind::DuplicateHeader:
            return "duplicate QUBITS header";
        case ParseErrorKind::BadQubitCount:
            return "bad qubit count";
        case ParseErrorKind::UnknownMnemonic:
            return "unknown mnemonic";
        case ParseErrorKind::WrongArgumentCount:
            return "wrong argument count";
        case ParseErrorKind::MalformedNumber:
            return "malformed number";
        case ParseErrorKind::QubitOutOfRange:
            return "qubit index out of range";
        case ParseErrorKind::RepeatedQubit:
            return "repeated qubit";
        case ParseErrorKind::EmptyRange:
            return "empty qubit range";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string &detail)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) +
                         std::string(describe(kind)) + ": " + detail),
      kind(kind),
      line(line) {
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        line_no++;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        std::string_view op = tokens[0];
        LineParser p(line_no, tokens);

        if (op == "QUBITS") {
            if (circuit) {
                p.fail(ParseErrorKind::DuplicateHeader, "QUBITS already declared");
            }
            p.expect_args(1);
            unsigned n = p.integer(1);
            if (n == 0 || n > kMaxQubits) {
                p.fail(ParseErrorKind::BadQubitCount,
                       "QUBITS must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n));
            }
            circuit.emplace(n);
            continue;
        }
        if (!circuit) {
            p.fail(ParseErrorKind::MissingHeader, "the first instruction must be QUBITS <n>");
        }
        unsigned n = circuit->num_qubits();

        if (op == "H") {
            p.expect_args(1);
            circuit->append(GateOp::h(p.qubit(1, n)));
        } else if (op == "X") {
            p.expect_args(1);
            circuit->append(GateOp::x(p.qubit(1, n)));
        } else if (op == "T") {
            p.expect_args(2);
            unsigned q = p.qubit(1, n);
            circuit->append(GateOp::t(q, p.angle(2)));
        } else if (op == "CNOT" || op == "SWAP") {
            p.expect_args(2);
            unsigned a = p.qubit(1, n);
            unsigned b = p.qubit(2, n);
            p.distinct(a, b);
            circuit->append(op == "CNOT" ? GateOp::cx(a, b) : GateOp::swap(a, b));
        } else if (op == "CPHASE") {
            p.expect_args(3);
            unsigned a = p.qubit(1, n);
            unsigned b = p.qubit(2, n);
            p.distinct(a, b);
            circuit->append(GateOp::cphase(a, b, p.angle(3)));
        } else if (op == "QFT") {
            p.expect_args(2);
            unsigned lo = p.qubit(1, n);
            unsigned hi = p.qubit(2, n);
            if (hi < lo) {
                p.fail(ParseErrorKind::EmptyRange, "QFT range " + std::to_string(lo) + ".." + std::to_string(hi));
            }
            circuit->append(qft_circuit(hi - lo + 1, lo, n));
        } else {
            p.fail(ParseErrorKind::UnknownMnemonic, "'" + std::string(op) + "'");
        }
    }
    if (!circuit) {
        throw ParseError(ParseErrorKind::MissingHeader, 0, "no QUBITS directive found");
    }
    return std::move(*circuit);
}

}  // namespace qdesk
