/*
   Copyright 2026 The chaincodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "chaincodes/number_theory.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace chaincodes::nt {

int64_t pow_mod(int64_t base, uint64_t exp, int64_t m) {
    if (m == 1) return 0;
    __int128 result = 1;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1U) result = (result * b) % m;
        b = (b * b) % m;
        exp >>= 1U;
    }
    return static_cast<int64_t>(result);
}

int64_t checked_pow(int64_t base, int exp) {
    int64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && std::abs(result) > std::numeric_limits<int64_t>::max() / std::abs(base))
            throw std::overflow_error("integer power overflows 64 bits");
        result *= base;
    }
    return result;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<int64_t, int>> prime_power(int64_t q) {
    if (q < 2) return std::nullopt;
    auto primes = prime_factors(q);
    if (primes.size() != 1) return std::nullopt;
    int k = 0;
    while (q > 1) {
        q /= primes[0];
        ++k;
    }
    return std::make_pair(primes[0], k);
}

int64_t multiplicative_order(int64_t a, int64_t m) {
    if (m == 1) return 1;
    if (std::gcd(mod(a, m), m) != 1) throw std::domain_error("multiplicative_order: gcd(a, m) != 1");
    // Carmichael-free approach: the order divides phi(m); shrink phi(m) prime by prime.
    int64_t phi = m;
    for (int64_t p : prime_factors(m)) phi = phi / p * (p - 1);
    int64_t order = phi;
    for (int64_t p : prime_factors(phi)) {
        while (order % p == 0 && pow_mod(a, static_cast<uint64_t>(order / p), m) == 1) order /= p;
    }
    return order;
}

ExtGcd ext_gcd(int64_t a, int64_t b) {
    int64_t old_r = a, r = b;
    int64_t old_s = 1, s = 0;
    int64_t old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

int p_valuation(int64_t a, int64_t p, int cap) {
    if (a == 0) return cap;
    int v = 0;
    while (v < cap && a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

}  // namespace chaincodes::nt
