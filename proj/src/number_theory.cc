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

#include "qdesk/number_theory.h"

#include <stdexcept>

namespace qdesk {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t modpow(std::uint64_t x, std::uint64_t e, std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("modpow: modulus must be at least 2");
    }
    std::uint64_t result = 1;
    std::uint64_t base = x % n;
    while (e > 0) {
        if (e & 1) {
            result = mulmod(result, base, n);
        }
        base = mulmod(base, base, n);
        e >>= 1;
    }
    return result;
}

std::uint64_t order_bruteforce(std::uint64_t x, std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("order_bruteforce: modulus must be at least 2");
    }
    if (gcd(x, n) != 1) {
        throw std::invalid_argument("order_bruteforce: base is not a unit modulo n");
    }
    std::uint64_t base = x % n;
    std::uint64_t acc = base;
    std::uint64_t r = 1;
    while (acc != 1) {
        acc = mulmod(acc, base, n);
        r++;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

bool is_prime_power(std::uint64_t n) {
    auto ps = prime_factors(n);
    return ps.size() == 1 && ps[0] != n;
}

}  // namespace qdesk
