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

#include <random>

#include "chaincodes/errors.hpp"
#include "chaincodes/field.hpp"
#include "chaincodes/ring.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chaincodes;
using chaincodes::testing::random_element;

namespace {

RingPtr ring(const char* spec) { return ChainRing::make(ChainRingSpec::parse(spec)); }

const char* const kSpecs[] = {"GR(25,1)", "GR(4,1)", "GR(8,2)", "GR(9,2)", "FPS(4,3)", "FPS(5,2)", "GF(25)", "GF(8)", "FPS(2,4)"};

}  // namespace

TEST_CASE("spec parsing and invariants") {
    auto z25 = ChainRingSpec::parse("GR(25,1)");
    CHECK(z25.family == Family::GaloisRing);
    CHECK(z25.p == 5);
    CHECK(z25.s == 2);
    CHECK(z25.ell == 2);
    CHECK(z25.r == 1);
    CHECK(z25.k() == 1);
    CHECK(z25.characteristic() == 25);
    CHECK(z25.residue_size() == 5);

    auto fps = ChainRingSpec::parse("FPS(4,3)");
    CHECK(fps.family == Family::TruncatedPowerSeries);
    CHECK(fps.s == 1);
    CHECK(fps.ell == 3);
    CHECK(fps.k() == 3);
    CHECK(fps.characteristic() == 2);

    auto gf = ChainRingSpec::parse("GF(25)");
    CHECK(gf.ell == 1);
    CHECK(gf.r == 2);
    CHECK(gf.modulus == std::vector<int64_t>{2, 0, 1});

    CHECK(ChainRingSpec::parse(z25.to_string()) == z25);
    CHECK(ChainRingSpec::parse(fps.to_string()) == fps);
    CHECK(ChainRingSpec::parse("GR(9,2,[2,1,1])").modulus == std::vector<int64_t>{2, 1, 1});

    CHECK_THROWS_AS(ChainRingSpec::parse("GR(24,1)"), ParseError);
    CHECK_THROWS_AS(ChainRingSpec::parse("XY(5,1)"), ParseError);
    CHECK_THROWS_AS(ChainRingSpec::parse("GR(9,2,[2,0,1])"), PreconditionError);  // x^2 - 1 splits mod 3
}

TEST_CASE("default modulus is irreducible and minimal") {
    for (int64_t p : {2, 3, 5, 7}) {
        for (int r = 1; r <= 4; ++r) {
            auto h = default_modulus(p, r);
            REQUIRE(h.size() == static_cast<size_t>(r + 1));
            CHECK(h.back() == 1);
            CHECK(is_irreducible_mod_p(h, p));
        }
    }
    CHECK(default_modulus(2, 2) == std::vector<int64_t>{1, 1, 1});
    CHECK(default_modulus(2, 3) == std::vector<int64_t>{1, 1, 0, 1});
    CHECK(default_modulus(5, 2) == std::vector<int64_t>{2, 0, 1});
}

TEST_CASE("ring_arith examples over Z25") {
    auto z25 = ring("GR(25,1)");
    CHECK(z25->from_int(18) + z25->from_int(9) == z25->from_int(2));
    CHECK(z25->from_int(4) * z25->from_int(19) == z25->from_int(1));
    CHECK(ring_arith(z25->from_int(7), z25->zero(), ArithOp::Add) == z25->from_int(7));
    CHECK(ring_arith(z25->from_int(7), z25->zero(), ArithOp::Neg) == z25->from_int(18));
    CHECK_THROWS_AS(ring_arith(z25->one(), ring("GR(4,1)")->one(), ArithOp::Add), PreconditionError);
    for (int a = 0; a < 25; ++a)
        for (int b = 0; b < 25; ++b) {
            REQUIRE(z25->from_int(a) * z25->from_int(b) == z25->from_int(a * b % 25));
            REQUIRE(z25->from_int(a) - z25->from_int(b) == z25->from_int(((a - b) % 25 + 25) % 25));
        }
}

TEST_CASE("units, inverses and valuations over Z25") {
    auto z25 = ring("GR(25,1)");
    CHECK(is_unit(z25->from_int(4)));
    CHECK_FALSE(is_unit(z25->from_int(5)));
    CHECK_FALSE(is_unit(z25->zero()));
    CHECK(invert_unit(z25->from_int(4)) == z25->from_int(19));
    CHECK(invert_unit(z25->one()) == z25->one());
    CHECK_THROWS_AS(invert_unit(z25->from_int(10)), PreconditionError);
    CHECK(valuation(z25->from_int(10)) == 1);
    CHECK(valuation(z25->zero()) == 2);
    CHECK(valuation(z25->from_int(4)) == 0);

    auto gf5 = ring("GF(5)");
    CHECK(invert_unit(gf5->from_int(2)) == gf5->from_int(3));
}

TEST_CASE("residue and lift") {
    auto z25 = ring("GR(25,1)");
    auto gf5 = z25->residue_field();
    CHECK(gf5->spec() == ChainRingSpec::galois_field(5, 1));
    CHECK(residue(z25->from_int(19)) == gf5->from_int(4));
    CHECK(residue(z25->from_int(5)).is_zero());
    CHECK(lift(z25, gf5->from_int(4)) == z25->from_int(4));
    CHECK(residue(lift(z25, gf5->from_int(4))) == gf5->from_int(4));
    CHECK_THROWS_AS(lift(z25, ring("GF(7)")->one()), PreconditionError);
}

TEST_CASE("unit_order examples") {
    auto gf5 = ring("GF(5)");
    CHECK(unit_order(gf5->from_int(-1)) == 2);
    CHECK(unit_order(gf5->one()) == 1);
    CHECK(unit_order(gf5->from_int(2)) == 4);
    CHECK(field_order(gf5->from_int(2)) == 4);
    CHECK_THROWS_AS(unit_order(gf5->zero()), PreconditionError);
    auto z25 = ring("GR(25,1)");
    CHECK(unit_order(z25->from_int(4)) == 10);
    CHECK_THROWS_AS(unit_order(z25->from_int(5)), PreconditionError);
}

TEST_CASE("extension fields and embeddings") {
    auto gf5 = ring("GF(5)");
    auto gf25 = extension_field(gf5, 2);
    CHECK(gf25->residue_size() == 25);
    FieldEmbedding emb(gf5, gf25);
    for (int c = 0; c < 5; ++c) CHECK(emb.apply(gf5->from_int(c)) == gf25->from_int(c));
    CHECK(extension_field(gf5, 1) == gf5);
    auto gf4 = extension_field(ring("GF(2)"), 2);
    CHECK(gf4->residue_size() == 4);
    CHECK(FieldEmbedding(ring("GF(2)"), gf4).apply(ring("GF(2)")->one()) == gf4->one());

    // GF(4) inside GF(16): a homomorphism, and preimage inverts it.
    auto gf16 = extension_field(gf4, 2);
    FieldEmbedding e(gf4, gf16);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto a = random_element(gf4, rng);
        auto b = random_element(gf4, rng);
        CHECK(e.apply(a * b) == e.apply(a) * e.apply(b));
        CHECK(e.apply(a + b) == e.apply(a) + e.apply(b));
        auto back = e.preimage(e.apply(a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    CHECK_THROWS_AS(FieldEmbedding(ring("GF(4)"), ring("GF(8)")), PreconditionError);
}

TEST_CASE("find_primary_root examples") {
    auto gf5 = ring("GF(5)");
    auto root = find_primary_root(gf5, gf5->from_int(-1), 6);
    CHECK(root.t == 2);
    CHECK(root.tn == 12);
    CHECK(root.degree == 2);
    CHECK(root.extension->residue_size() == 25);
    const auto& xi = root.xi;
    const auto& E = root.extension;
    CHECK((xi * xi - E->from_int(2) * xi - E->one()).is_zero());
    CHECK(pow(xi, 3) == E->from_int(2));
    CHECK(pow(xi, 6) == E->from_int(4));
    CHECK(field_order(xi) == 12);

    auto trivial = find_primary_root(gf5, gf5->one(), 1);
    CHECK(trivial.xi.is_one());
    CHECK(trivial.degree == 1);

    // Order-3 elements first appear in GF(4): 3 | 2^2 - 1 but 3 does not divide 2^3 - 1.
    auto gf2 = ring("GF(2)");
    auto r3 = find_primary_root(gf2, gf2->one(), 3);
    CHECK(r3.extension->residue_size() == 4);
    CHECK(pow(r3.xi, 3).is_one());
    CHECK_FALSE(r3.xi.is_one());

    CHECK_THROWS_AS(find_primary_root(gf5, gf5->one(), 10), PreconditionError);
    CHECK_THROWS_AS(find_primary_root(gf5, gf5->zero(), 3), PreconditionError);
}

TEST_CASE("property: ring axioms, valuation and residue homomorphism") {
    std::mt19937_64 rng(20260101);
    for (const char* s : kSpecs) {
        CAPTURE(s);
        auto R = ring(s);
        const int ell = R->ell();
        for (int trial = 0; trial < 200; ++trial) {
            auto a = random_element(R, rng);
            auto b = random_element(R, rng);
            auto c = random_element(R, rng);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
            REQUIRE(a - a == R->zero());
            REQUIRE(valuation(a * b) == std::min(valuation(a) + valuation(b), ell));
            REQUIRE(is_unit(a) == (valuation(a) == 0));
            if (is_unit(a)) REQUIRE((a * invert_unit(a)).is_one());
            REQUIRE(residue(a * b) == residue(a) * residue(b));
            REQUIRE(residue(a + b) == residue(a) + residue(b));
            REQUIRE(residue(a).is_zero() == (valuation(a) >= 1));
        }
        auto pi = R->uniformizer();
        CHECK(pow(pi, static_cast<uint64_t>(ell)).is_zero());
        if (ell > 1) CHECK_FALSE(pow(pi, static_cast<uint64_t>(ell - 1)).is_zero());
        if (R->spec().family == Family::GaloisRing) CHECK(pi == R->from_int(R->p()));
        // Residue map is onto: every field element is hit by its lift.
        auto F = R->residue_field();
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_element(F, rng);
            CHECK(residue(lift(R, x)) == x);
        }
    }
}

TEST_CASE("property: unit orders divide the group order") {
    std::mt19937_64 rng(99);
    for (const char* s : {"GF(25)", "GF(8)", "GF(49)", "GF(7)", "GF(16)"}) {
        auto F = ring(s);
        for (int trial = 0; trial < 50; ++trial) {
            auto x = random_element(F, rng);
            if (x.is_zero()) continue;
            const int64_t t = unit_order(x);
            CHECK((F->residue_size() - 1) % t == 0);
            CHECK(field_order(x) == t);
        }
    }
}

TEST_CASE("property: primary roots") {
    for (int64_t p : {2, 3, 5, 7}) {
        auto F = ring(("GF(" + std::to_string(p) + ")").c_str());
        for (int64_t n = 1; n <= 12; ++n) {
            if (n % p == 0) continue;
            for (int64_t lam = 1; lam < p; ++lam) {
                auto lb = F->from_int(lam);
                auto root = find_primary_root(F, lb, n);
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(lam);
                CHECK(pow(root.xi, static_cast<uint64_t>(root.tn)).is_one());
                CHECK(field_order(root.xi) == root.tn);
                CHECK(pow(root.xi, static_cast<uint64_t>(n)) == root.embedding.apply(lb));
                CHECK((root.extension->residue_size() - 1) % root.tn == 0);
            }
        }
    }
}
