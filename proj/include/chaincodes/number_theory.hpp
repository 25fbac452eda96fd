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

#ifndef CHAINCODES_NUMBER_THEORY_HPP
#define CHAINCODES_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chaincodes {

using BigInt = boost::multiprecision::cpp_int;

namespace nt {

/// Canonical residue of a in [0, m).
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t pow_mod(int64_t base, uint64_t exp, int64_t m);

/// base^exp, throwing std::overflow_error if the result leaves int64_t.
int64_t checked_pow(int64_t base, int exp);

bool is_prime(int64_t n);

/// Distinct prime factors in increasing order (trial division).
std::vector<int64_t> prime_factors(int64_t n);

/// If q = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<int64_t, int>> prime_power(int64_t q);

/// Least e >= 1 with a^e = 1 mod m; requires gcd(a, m) = 1. Returns 1 for m = 1.
int64_t multiplicative_order(int64_t a, int64_t m);

struct ExtGcd {
    int64_t g;
    int64_t x;
    int64_t y;
};

/// g = gcd(a, b) = a*x + b*y.
ExtGcd ext_gcd(int64_t a, int64_t b);

/// Exponent of p in a (a != 0), capped at cap.
int p_valuation(int64_t a, int64_t p, int cap);

}  // namespace nt
}  // namespace chaincodes

#endif
