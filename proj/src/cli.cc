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

#include "qdesk/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qdesk/algorithms.h"
#include "qdesk/circuit_file.h"
#include "qdesk/fourier.h"

namespace qdesk::cli {

namespace {

constexpr double kPrintThreshold = 1e-12;
constexpr unsigned kMaxCheckedQft = 10;

std::string bitstring(std::size_t index, unsigned n) {
    std::string out(n, '0');
    for (unsigned q = 0; q < n; q++) {
        if (index & qubit_mask(n, q)) {
            out[q] = '1';
        }
    }
    return out;
}

std::string describe_attempt(std::size_t number, const ShorAttempt &a, std::uint64_t modulus) {
    std::ostringstream line;
    line << "attempt " << number << ": x=" << a.base;
    switch (a.outcome) {
        case AttemptOutcome::SharedFactor:
            line << " gcd(x,N)=" << gcd(a.base, modulus) << " -> shared factor";
            return line.str();
        case AttemptOutcome::OrderNotFound:
            line << " -> order not recovered in " << a.trials << " measurements, retry";
            return line.str();
        default:
            break;
    }
    line << " c=" << *a.measured_c << " r=" << *a.order;
    switch (a.outcome) {
        case AttemptOutcome::OddOrder:
            line << " -> odd order, retry";
            break;
        case AttemptOutcome::TrivialRoot:
            line << " -> x^(r/2) = -1 mod N, retry";
            break;
        default:
            line << " -> factored";
            break;
    }
    return line.str();
}

}  // namespace

std::string format_probability(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    std::string s(buf);
    if (s.find_first_of(".en") == std::string::npos) {
        s += ".0";
    }
    return s;
}

int cmd_simulate(const std::string &path, std::uint64_t shots, std::uint64_t seed, std::ostream &out,
                 std::ostream &err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read circuit file '" << path << "'\n";
        return kExitUsage;
    }
    std::stringstream text;
    text << in.rdbuf();

    std::optional<Circuit> circuit;
    try {
        circuit.emplace(parse_circuit(text.str()));
    } catch (const ParseError &e) {
        err << path << ": " << e.what() << "\n";
        return kExitUsage;
    }

    unsigned n = circuit->num_qubits();
    StateVector state = run_circuit(basis_state(n, 0), *circuit);
    ProbDist dist = probabilities(state);

    std::map<std::size_t, std::uint64_t> counts;
    RandomSource rng(seed);
    for (std::uint64_t i = 0; i < shots; i++) {
        counts[sample(dist, rng)]++;
    }

    out << "# qubits " << n << " shots " << shots << " seed " << seed << "\n";
    for (std::size_t i = 0; i < dist.size(); i++) {
        auto hit = counts.find(i);
        if (dist[i] <= kPrintThreshold && hit == counts.end()) {
            continue;
        }
        out << bitstring(i, n) << " " << format_probability(dist[i]);
        if (shots > 0) {
            out << " " << (hit == counts.end() ? 0 : hit->second);
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_deutsch(const std::string &f_bits, std::ostream &out, std::ostream &err) {
    if (f_bits.size() != 2 || std::any_of(f_bits.begin(), f_bits.end(), [](char c) { return c != '0' && c != '1'; })) {
        err << "error: deutsch expects two bits f(0)f(1), e.g. 01; got '" << f_bits << "'\n";
        return kExitUsage;
    }
    DeutschResult r = deutsch(f_bits[0] - '0', f_bits[1] - '0');
    out << (r.verdict == DeutschVerdict::Constant ? "constant" : "balanced") << "\n";
    out << "b0 " << format_probability(r.first_qubit[0]) << "\n";
    out << "b1 " << format_probability(r.first_qubit[1]) << "\n";
    return kExitOk;
}

int cmd_qft(unsigned n, bool check, std::ostream &out, std::ostream &err) {
    if (n == 0 || n > kMaxQubits) {
        err << "error: qft needs 1 <= n <= " << kMaxQubits << "\n";
        return kExitPrecondition;
    }
    if (!check) {
        Circuit c = qft_circuit(n);
        out << "H:" << c.count(GateKind::Hadamard) << " CPHASE:" << c.count(GateKind::ControlledPhase)
            << " SWAP:" << c.count(GateKind::Swap) << "\n";
        return kExitOk;
    }
    if (n > kMaxCheckedQft) {
        err << "error: --check builds dense matrices and is limited to n <= " << kMaxCheckedQft << "\n";
        return kExitPrecondition;
    }
    double deviation = max_abs_diff(circuit_matrix(qft_circuit(n)), qft_dense(n).matrix());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", deviation);
    out << "n " << n << "\n";
    out << "max_deviation " << buf << "\n";
    if (n == 1) {
        out << "F1 = H: " << (qft_dense(1) == hadamard() ? "exact" : "inexact") << "\n";
    }
    bool pass = deviation <= kUnitaryTol;
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitUsage;
}

int cmd_shor(std::uint64_t modulus, std::uint64_t seed, std::size_t max_attempts, std::ostream &out,
             std::ostream &err) {
    try {
        check_shor_modulus(modulus);
    } catch (const ShorPreconditionError &e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    out << "# shor N=" << modulus << " seed=" << seed << " max_attempts=" << max_attempts << "\n";
    RandomSource rng(seed);
    try {
        FactorResult r = shor_factor(modulus, rng, max_attempts);
        for (std::size_t i = 0; i < r.attempts.size(); i++) {
            out << describe_attempt(i + 1, r.attempts[i], modulus) << "\n";
        }
        std::uint64_t lo = std::min(r.p, r.q), hi = std::max(r.p, r.q);
        out << "factors " << lo << " " << hi << "\n";
        out << "check " << lo << "*" << hi << "=" << lo * hi << (lo * hi == modulus ? " ok" : " MISMATCH") << "\n";
        return lo * hi == modulus ? kExitOk : kExitExhausted;
    } catch (const ShorAttemptsExhausted &e) {
        for (std::size_t i = 0; i < e.attempts.size(); i++) {
            out << describe_attempt(i + 1, e.attempts[i], modulus) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return kExitExhausted;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qdesk: state-vector quantum circuit simulator"};
    app.require_subcommand(1);

    std::string sim_path;
    std::uint64_t sim_shots = 0;
    std::uint64_t sim_seed = kDefaultSeed;
    auto *simulate = app.add_subcommand("simulate", "Run a circuit file on |0...0> and report probabilities");
    simulate->add_option("file", sim_path, "Circuit file")->required();
    simulate->add_option("--shots", sim_shots, "Number of sampled measurements");
    simulate->add_option("--seed", sim_seed, "Random seed");

    std::string f_bits;
    auto *deutsch_cmd = app.add_subcommand("deutsch", "Decide whether f:{0,1}->{0,1} is constant with one query");
    deutsch_cmd->add_option("f", f_bits, "f(0)f(1) as two bits, e.g. 01")->required();

    unsigned qft_n = 0;
    bool qft_check = false;
    auto *qft_cmd = app.add_subcommand("qft", "Build the gate-level QFT and optionally compare it with the dense matrix");
    qft_cmd->add_option("--n", qft_n, "Number of qubits")->required();
    qft_cmd->add_flag("--check", qft_check, "Compare circuit and dense matrices");

    std::uint64_t shor_n = 0;
    std::uint64_t shor_seed = kDefaultSeed;
    std::size_t shor_attempts = kDefaultShorAttempts;
    auto *shor_cmd = app.add_subcommand("shor", "Factor an odd composite with simulated order finding");
    shor_cmd->add_option("N", shor_n, "Modulus to factor")->required();
    shor_cmd->add_option("--seed", shor_seed, "Random seed");
    shor_cmd->add_option("--max-attempts", shor_attempts, "Attempts before giving up");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (simulate->parsed()) {
        return cmd_simulate(sim_path, sim_shots, sim_seed, out, err);
    }
    if (deutsch_cmd->parsed()) {
        return cmd_deutsch(f_bits, out, err);
    }
    if (qft_cmd->parsed()) {
        return cmd_qft(qft_n, qft_check, out, err);
    }
    return cmd_shor(shor_n, shor_seed, shor_attempts, out, err);
}

}  // namespace qdesk::cli
