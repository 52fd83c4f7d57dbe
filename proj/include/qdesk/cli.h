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

#ifndef QDESK_CLI_H
#define QDESK_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qdesk::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitPrecondition = 2,
    kExitExhausted = 3,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Probability text: 12 significant digits, always with a decimal point
/// ("0.5", "1.0", "0.333333333333").
std::string format_probability(double p);

int cmd_simulate(const std::string &path, std::uint64_t shots, std::uint64_t seed, std::ostream &out,
                 std::ostream &err);
int cmd_deutsch(const std::string &f_bits, std::ostream &out, std::ostream &err);
int cmd_qft(unsigned n, bool check, std::ostream &out, std::ostream &err);
int cmd_shor(std::uint64_t modulus, std::uint64_t seed, std::size_t max_attempts, std::ostream &out,
             std::ostream &err);

/// Parses `args` (without the program name) and dispatches to a command.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qdesk::cli

#endif
