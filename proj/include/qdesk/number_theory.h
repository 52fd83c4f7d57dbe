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

#ifndef QDESK_NUMBER_THEORY_H
#define QDESK_NUMBER_THEORY_H

#include <cstdint>
#include <vector>

namespace qdesk {

/// Euclid's algorithm. Throws std::invalid_argument when a == b == 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// x^e mod n by square-and-multiply. Requires n >= 2.
std::uint64_t modpow(std::uint64_t x, std::uint64_t e, std::uint64_t n);

/// Least r >= 1 with x^r = 1 (mod n), found by stepping through the powers.
/// Requires gcd(x, n) == 1.
std::uint64_t order_bruteforce(std::uint64_t x, std::uint64_t n);

/// Trial division; fine for the moduli this library simulates.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True when n = p^k for a prime p and k >= 2.
bool is_prime_power(std::uint64_t n);

}  // namespace qdesk

#endif
