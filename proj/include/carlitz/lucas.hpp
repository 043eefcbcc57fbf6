// Copyright 2026 The carlitz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <vector>

namespace carlitz {

// Base-b digits of n, lowest first. Empty for n = 0.
inline std::vector<std::uint32_t> digits(std::uint64_t n, std::uint64_t b) {
    std::vector<std::uint32_t> out;
    while (n > 0) {
        out.push_back(static_cast<std::uint32_t>(n % b));
        n /= b;
    }
    return out;
}

inline std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b) {
    std::uint64_t s = 0;
    for (; n > 0; n /= b) s += n % b;
    return s;
}

// True when adding a and b in base b produces no carry.
inline bool no_carry(std::uint64_t a, std::uint64_t c, std::uint64_t b) {
    for (; a > 0 && c > 0; a /= b, c /= b)
        if (a % b + c % b >= b) return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// binom(n, k) mod p for n, k < p.
inline std::uint32_t small_binom_mod(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num = num * (n - i) % p;
        den = den * (i + 1) % p;
    }
    // den^(p-2)
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = inv * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

// Lucas: binom(n, k) mod p digit by digit in base p.
inline std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    while (k > 0) {
        const auto nd = static_cast<std::uint32_t>(n % p);
        const auto kd = static_cast<std::uint32_t>(k % p);
        if (kd > nd) return 0;
        r = r * small_binom_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(r);
}

// Multinomial (a+b+c)! / (a! b! c!) mod p, as a product of two binomials.
inline std::uint32_t multinomial3_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{binom_mod_p(a + b + c, a, p)} * binom_mod_p(b + c, b, p) % p);
}

}  // namespace carlitz
