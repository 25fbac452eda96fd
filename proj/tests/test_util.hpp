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

#ifndef CHAINCODES_TESTS_TEST_UTIL_HPP
#define CHAINCODES_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "chaincodes/poly.hpp"
#include "chaincodes/ring.hpp"

namespace chaincodes::testing {

inline RingElement random_element(const RingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> dist(0, ring->coefficient_modulus() - 1);
    std::vector<int64_t> c(static_cast<size_t>(ring->width()));
    for (auto& v : c) v = dist(rng);
    return ring->element(std::move(c));
}

inline Poly random_poly(const RingPtr& ring, int degree, std::mt19937_64& rng) {
    std::vector<RingElement> c;
    for (int i = 0; i <= degree; ++i) c.push_back(random_element(ring, rng));
    return Poly(ring, c);
}

inline Poly random_monic(const RingPtr& ring, int degree, std::mt19937_64& rng) {
    Poly f = random_poly(ring, degree - 1, rng);
    return f + Poly::monomial(ring->one(), degree);
}

}  // namespace chaincodes::testing

#endif
