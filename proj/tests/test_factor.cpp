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

#include <algorithm>
#include <numeric>
#include <random>

#include "chaincodes/errors.hpp"
#include "chaincodes/factor.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chaincodes;
using namespace chaincodes::testing;

namespace {

RingPtr ring(const std::string& spec) { return ChainRing::make(ChainRingSpec::parse(spec)); }

Poly P(const RingPtr& R, std::string_view text) { return Poly::parse(R, text); }

using Cosets = std::vector<std::vector<int64_t>>;

}  // namespace

TEST_CASE("coset_partition examples") {
    auto gf5 = ring("GF(5)");
    auto part = coset_partition(gf5->from_int(-1), 6);
    CHECK(part.t == 2);
    CHECK(part.tn == 12);
    CHECK(part.cosets == Cosets{{1, 5}, {3}, {7, 11}, {9}});
    CHECK(part.index_of(11) == 2);
    CHECK(part.index_of(2) == -1);

    auto fixed = coset_partition(7, 1, 6);
    CHECK(fixed.cosets == Cosets{{0}, {1}, {2}, {3}, {4}, {5}});

    CHECK(coset_partition(3, 2, 4).cosets == Cosets{{1, 3}, {5, 7}});
    CHECK_THROWS_AS(coset_partition(gf5->one(), 10), PreconditionError);
}

TEST_CASE("factor_residue examples") {
    auto gf5 = ring("GF(5)");
    auto f = factor_residue(gf5, gf5->from_int(-1), 6);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == P(gf5, "X^2+3X+4"));
    CHECK(f[1] == P(gf5, "X-2"));
    CHECK(f[2] == P(gf5, "X^2+2X+4"));
    CHECK(f[3] == P(gf5, "X-3"));

    auto trivial = factor_residue(gf5, gf5->one(), 1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == P(gf5, "X-1"));

    auto gf2 = ring("GF(2)");
    auto seven = factor_residue(gf2, gf2->one(), 7);
    std::vector<std::string> got;
    for (const auto& g : seven) got.push_back(g.to_string());
    std::sort(got.begin(), got.end());
    std::vector<std::string> want = {P(gf2, "X+1").to_string(), P(gf2, "X^3+X+1").to_string(), P(gf2, "X^3+X^2+1").to_string()};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("factor_over_ring examples") {
    auto z25 = ring("GR(25,1)");
    auto fact = factor_over_ring(z25->from_int(4), 6);
    REQUIRE(fact.m() == 4);
    CHECK(fact.factors()[0] == P(z25, "X^2+3X+9"));
    CHECK(fact.factors()[1] == P(z25, "X+3"));
    CHECK(fact.factors()[2] == P(z25, "X^2-3X+9"));
    CHECK(fact.factors()[3] == P(z25, "X-3"));
    CHECK(fact.degrees() == std::vector<int>{2, 1, 2, 1});
    CHECK(fact.verify());
    CHECK(fact.phi_subset({0, 1}) == P(z25, "X^3+6X^2+18X+2"));
    CHECK(fact.phi_hat({0, 1}) * fact.phi_subset({0, 1}) == fact.modulus());
    CHECK(fact.phi_subset({}) == P(z25, "1"));

    auto gf5 = ring("GF(5)");
    auto field_fact = factor_over_ring(gf5->from_int(4), 6);
    CHECK(field_fact.factors() == factor_residue(gf5, gf5->from_int(4), 6));

    auto z4 = ring("GR(4,1)");
    auto f4 = factor_over_ring(z4->one(), 3);
    REQUIRE(f4.m() == 2);
    CHECK(f4.factors()[0] == P(z4, "X-1"));
    CHECK(residue(f4.factors()[1]) == P(z4->residue_field(), "X^2+X+1"));
    CHECK(f4.factors()[0] * f4.factors()[1] == P(z4, "X^3-1"));

    CHECK_THROWS_AS(factor_over_ring(z25->from_int(5), 6), PreconditionError);
    CHECK_THROWS_AS(factor_over_ring(z25->from_int(4), 10), PreconditionError);
}

TEST_CASE("property: factorizations over random chain rings") {
    std::mt19937_64 rng(8675309);
    const char* specs[] = {"GR(4,1)", "GR(8,1)", "GR(9,1)", "GR(27,1)", "GR(25,1)", "GR(4,2)", "GR(9,2)", "FPS(4,2)", "FPS(3,3)", "FPS(2,3)", "GF(7)", "GF(4)"};
    for (const char* s : specs) {
        auto R = ring(s);
        for (int trial = 0; trial < 12; ++trial) {
            int64_t n = 1 + static_cast<int64_t>(rng() % 14);
            if (std::gcd(n, R->p()) != 1) continue;
            RingElement lambda = random_element(R, rng);
            if (!is_unit(lambda)) continue;
            CAPTURE(s);
            CAPTURE(n);
            CAPTURE(lambda.to_string());
            auto fact = factor_over_ring(lambda, n);
            CHECK(fact.verify());
            CHECK(product(R, fact.factors()) == Poly::binomial(static_cast<int>(n), lambda));
            int total = 0;
            for (int i = 0; i < fact.m(); ++i) {
                total += fact.degree(i);
                CHECK(residue(fact.factors()[static_cast<size_t>(i)]) == fact.residue_factors()[static_cast<size_t>(i)]);
                // Roots of phi-bar_i among the powers of xi are exactly its coset.
                const auto& root = fact.root();
                auto bar_ext = map_coefficients(fact.residue_factors()[static_cast<size_t>(i)], root.extension,
                                                [&](const RingElement& c) { return root.embedding.apply(c); });
                std::vector<int64_t> roots;
                for (int64_t j = 0; j < root.tn; ++j)
                    if (bar_ext.evaluate(pow(root.xi, static_cast<uint64_t>(j))).is_zero()) roots.push_back(j);
                CHECK(roots == fact.partition().cosets[static_cast<size_t>(i)]);
            }
            CHECK(total == n);
            CHECK(pow(fact.root().xi, static_cast<uint64_t>(n)) == fact.root().embedding.apply(residue(lambda)));
            CHECK(pow(fact.root().xi, static_cast<uint64_t>(fact.root().tn)).is_one());
            // Determinism.
            CHECK(factor_over_ring(lambda, n).factors() == fact.factors());
            if (R->spec().r == 1)
                for (const auto& bar : fact.residue_factors()) {
                    std::vector<int64_t> raw(bar.raw().begin(), bar.raw().end());
                    CHECK(is_irreducible_mod_p(raw, R->p()));
                }
        }
    }
}
