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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "chaincodes/pir.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace chaincodes;
using oracle::IntPoly;

namespace {

// Collects failed checks for one criterion.
struct Checker {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what) {
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
};

RingPtr ring(const std::string& spec) { return ChainRing::make(ChainRingSpec::parse(spec)); }
Poly P(const RingPtr& R, const std::string& text) { return Poly::parse(R, text); }

IntPoly ints(const Poly& f) { return IntPoly(f.raw().begin(), f.raw().end()); }

FactorizationPtr example() {
    static const FactorizationPtr fact = std::make_shared<const Factorization>(factor_over_ring(ring("GR(25,1)")->from_int(4), 6));
    return fact;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

int64_t ipow(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// 1. Example factorization.
void criterion1(Checker& check) {
    auto fact = example();
    const auto R = fact->base();
    const auto F = R->residue_field();
    check(fact->partition().t == 2, "t = 2");
    const std::vector<std::vector<int64_t>> cosets = {{1, 5}, {3}, {7, 11}, {9}};
    check(fact->partition().cosets == cosets, "cosets {1,5},{3},{7,11},{9}");
    std::set<std::string> expected_residues, residues;
    for (const char* g : {"X-2", "X^2+2X+4", "X-3", "X^2+3X+4"}) expected_residues.insert(P(F, g).to_string());
    for (const auto& g : fact->residue_factors()) residues.insert(g.to_string());
    check(residues == expected_residues, "residue factors (X-2)(X^2+2X+4)(X-3)(X^2+3X+4)");
    const std::vector<IntPoly> lifted = {{9, 3, 1}, {3, 1}, {9, 22, 1}, {22, 1}};
    check(fact->m() == 4, "four factors");
    IntPoly prod = {1};
    for (int i = 0; i < fact->m() && i < 4; ++i) {
        check(ints(fact->factors()[static_cast<size_t>(i)]) == lifted[static_cast<size_t>(i)], "phi_" + std::to_string(i + 1));
        prod = oracle::int_mul(prod, ints(fact->factors()[static_cast<size_t>(i)]), 25);
    }
    check(prod == IntPoly({21, 0, 0, 0, 0, 0, 1}), "product is X^6 - 4 over Z_25");
}

// 2. The code with exponents (2,2,1,0).
void criterion2(Checker& check) {
    auto fact = example();
    const auto R = fact->base();
    auto C = ConstacyclicCode::from_exponents(fact, {2, 2, 1, 0});
    const auto& phi = fact->factors();
    auto tower = C.generator_tower();
    check(tower.polys.size() == 2, "two tower levels");
    if (tower.polys.size() != 2) return;
    check(tower.polys[0] == phi[0] * phi[1] * phi[2], "g0 = phi1 phi2 phi3");
    check(tower.polys[1] == phi[0] * phi[1], "g1 = phi1 phi2");
    check(ints(tower.polys[1]) == IntPoly({2, 18, 6, 1}), "g1 = 2 + 18X + 6X^2 + X^3");
    auto h = C.check_tower();
    check(h.size() == 2 && h[0] == phi[2] * phi[3] && h[1] == phi[3], "h0 = phi3 phi4, h1 = phi4");
    check(C.residue_zero_set() == std::vector<int64_t>{1, 3, 5}, "residue zero set {1,3,5}");
    check(C.bch_bound() == 4, "BCH bound 4");
    check(C.min_weight_exact(WeightStrategy::Direct) == 4, "min weight 4 (direct)");
    check(C.min_weight_exact(WeightStrategy::Residue) == 4, "min weight 4 (residue)");
    const auto Q = C.ambient();
    auto word = Q.element(P(R, "10 + 15X + 5X^2 + 5X^3"));
    check(C.contains(word, Membership::Crt) && C.contains(word, Membership::Check), "(10,15,5,5,0,0) is a member");
    check(word.weight() == 4, "(10,15,5,5,0,0) has weight 4");
    oracle::IdealClosure closure(Q, {C.canonical_generator()});
    check(closure.contains(word), "brute-force closure contains the word");
    check(closure.min_weight() == 4, "brute-force min weight 4");
}

// 3. Ideal census on the example instance.
void criterion3(Checker& check) {
    auto fact = example();
    const auto R = fact->base();
    std::mt19937_64 rng(3);
    std::set<std::vector<int>> exps;
    std::set<std::string> generators;
    int count = 0;
    for (const auto& C : enumerate_codes(fact)) {
        ++count;
        const std::string tag = "(" + join(C.exponents()) + ")";
        exps.insert(C.exponents());
        const auto G = C.canonical_generator();
        generators.insert(G.to_string());
        auto tower = C.generator_tower();
        Poly above = fact->modulus();
        for (const auto& g : tower.polys) {
            check(divmod_monic(above, g).remainder.is_zero(), "tower divisibility " + tag);
            above = g;
        }
        check(exponents_from_generator(*fact, G) == C.exponents(), "round trip " + tag);
        check((G * C.check_polynomial()).is_zero(), "G H = 0 " + tag);
        const auto Q = C.ambient();
        for (int i = 0; i < 200; ++i) {
            // Half the samples are codewords, so both answers occur.
            auto f = Q.element(testing::random_poly(R, 5, rng));
            if (i % 2 == 0) f = f * G;
            check(C.contains(f, Membership::Crt) == C.contains(f, Membership::Check), "crt/check agree " + tag);
        }
    }
    check(count == 81 && exps.size() == 81, "81 codes enumerated");
    check(generators.size() == 81, "81 distinct generators");
}

// 4. Cardinality against brute-force closure.
void criterion4(Checker& check, std::string& note) {
    auto fact = example();
    int compared = 0, skipped = 0;
    for (const auto& C : enumerate_codes(fact)) {
        int64_t exponent = 0;
        for (int i = 0; i < fact->m(); ++i) exponent += fact->degree(i) * (fact->base()->ell() - C.exponents()[static_cast<size_t>(i)]);
        if (exponent > 8) {
            ++skipped;
            continue;
        }
        oracle::IdealClosure closure(C.ambient(), {C.canonical_generator()});
        check(static_cast<int64_t>(closure.size()) == ipow(5, exponent), "|C| = 5^" + std::to_string(exponent) + " for (" + join(C.exponents()) + ")");
        check(C.cardinality() == ipow(5, exponent), "library cardinality for (" + join(C.exponents()) + ")");
        ++compared;
    }
    // The whole ring has 5^12 elements; a count of m * ell = 8 factors of q would give 5^8.
    auto whole = ConstacyclicCode::from_exponents(fact, {0, 0, 0, 0});
    check(whole.cardinality() == BigInt(244140625), "whole ring has 5^12 elements");
    note = std::to_string(compared) + " codes counted, " + std::to_string(skipped) + " above 10^6 skipped";
}

// 5. BCH soundness.
void criterion5(Checker& check, std::string& note) {
    struct Instance {
        const char* spec;
        int64_t lambda;
        int64_t n;
    };
    int compared = 0;
    for (const auto& inst : {Instance{"GR(25,1)", 4, 6}, Instance{"GF(5)", -1, 6}, Instance{"GR(4,1)", 1, 3}}) {
        auto R = ring(inst.spec);
        auto fact = std::make_shared<const Factorization>(factor_over_ring(R->from_int(inst.lambda), inst.n));
        for (const auto& C : enumerate_codes(fact)) {
            if (C.is_zero_code()) continue;
            const auto g = C.generator_tower().polys.back();
            const int64_t dim = inst.n - g.degree();
            if (dim > 0 && ipow(R->residue_size(), dim) > 1'000'000) continue;
            const int d = C.min_weight_exact(WeightStrategy::Residue, 1'000'000);
            const std::string tag = std::string(inst.spec) + " (" + join(C.exponents()) + ")";
            check(C.bch_bound(true) <= d, "wrapped BCH bound " + tag);
            check(C.bch_bound(false) <= d, "BCH bound " + tag);
            ++compared;
        }
    }
    note = std::to_string(compared) + " nonzero codes";
}

// 6. Direct and residue minimum weights agree.
void criterion6(Checker& check, std::string& note) {
    int compared = 0;
    for (const auto& C : enumerate_codes(example())) {
        if (C.is_zero_code() || C.cardinality() > 1'000'000) continue;
        check(C.min_weight_exact(WeightStrategy::Direct) == C.min_weight_exact(WeightStrategy::Residue), "(" + join(C.exponents()) + ")");
        ++compared;
    }
    note = std::to_string(compared) + " codes";
}

// 7. The isometry X -> -X from Z_25[X]/<X^3 + 1> onto Z_25[X]/<X^3 - 1>.
void criterion7(Checker& check) {
    auto R = ring("GR(25,1)");
    const RingElement lambda = R->from_int(24);
    QuotientRing Q(lambda, 3);
    QuotientRing cyclic(R->one(), 3);
    auto iso = make_isometry({lambda}, 3);
    // c_i -> (-1)^i c_i, computed independently.
    auto expected = [&](const QuotientElement& f) {
        IntPoly c = ints(f.rep());
        for (size_t i = 1; i < c.size(); i += 2) c[i] = (25 - c[i]) % 25;
        return oracle::int_trim(c, 25);
    };
    std::vector<QuotientElement> probes;
    const int64_t values[] = {0, 1, 5, 12, 24};
    for (int64_t a : values)
        for (int64_t b : values)
            for (int64_t c : values) probes.push_back(Q.element(Poly::from_ints(R, {a, b, c})));
    check(probes.size() == 125, "125 probes");
    std::set<std::string> images;
    for (const auto& f : probes) {
        const auto g = iso.apply(f);
        check(ints(g.rep()) == expected(f), "image of " + f.to_string());
        check(g.weight() == f.weight(), "weight of " + f.to_string());
        images.insert(g.to_string());
    }
    check(images.size() == probes.size(), "injective on probes");
    for (const auto& f : probes)
        for (const auto& g : probes) {
            check(iso.apply(f + g) == iso.apply(f) + iso.apply(g), "additive");
            check(iso.apply(f * g) == iso.apply(f) * iso.apply(g), "multiplicative on probes");
        }
    check(iso.apply(Q.one()) == cyclic.one(), "1 -> 1");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto f = Q.element(testing::random_poly(R, 2, rng));
        auto g = Q.element(testing::random_poly(R, 2, rng));
        check(iso.apply(f * g) == iso.apply(f) * iso.apply(g), "multiplicative on random pairs");
    }
    auto fact = std::make_shared<const Factorization>(factor_over_ring(lambda, 3));
    for (const auto& C : enumerate_codes(fact)) {
        oracle::IdealClosure closure(Q, {C.canonical_generator()});
        std::set<IntPoly> image;
        for (const auto& w : closure.words()) image.insert(expected(Q.element(Poly::from_raw(R, w))));
        for (const auto& w : image) {
            // Cyclic shift (c0, c1, c2) -> (c2, c0, c1).
            IntPoly full = w;
            full.resize(3, 0);
            IntPoly shifted = oracle::int_trim({full[2], full[0], full[1]}, 25);
            if (!image.count(shifted)) {
                check(false, "image of (" + join(C.exponents()) + ") closed under cyclic shift");
                break;
            }
        }
    }
}

// 8. Principality and the brute-force lattices.
void criterion8(Checker& check) {
    auto verdict = [](const std::string& spec, const std::string& lambda, int64_t n) {
        auto pir = PirSpec::parse(spec);
        return is_principal_quotient(pir, n, parse_lambdas(pir.rings(), lambda)).verdict;
    };
    check(verdict("GR(25,1)", "4", 6) == Verdict::Principal, "Z25, n=6 principal");
    check(verdict("GF(2)", "1", 4) == Verdict::Principal, "GF(2), n=4 principal");
    check(verdict("GR(4,1)", "1", 2) == Verdict::NotPrincipal, "Z4, n=2, lambda=1 not principal");

    auto t = SmallRingTable::parse("Z4[X]/(X^2-1)");
    const auto R = t.modulus().ring();
    std::vector<int> target = ideal_generated(t, {t.index_of(P(R, "2")), t.index_of(P(R, "X+1"))});
    bool principal = false;
    for (int g = 0; g < t.size(); ++g) principal = principal || ideal_generated(t, {g}) == target;
    check(!principal, "<2, X+1> is not principal in Z4[X]/(X^2-1)");
    auto lat = brute_ideal_lattice(t);
    check(!lat.principal && lat.local && !lat.chain, "Z4[X]/(X^2-1) local, not chain, not principal");

    auto chain_table = SmallRingTable::parse("Z4[X]/(X^2-3)");
    auto chain = brute_ideal_lattice(chain_table);
    check(chain.chain && chain.principal && chain.ideals.size() == 5, "Z4[X]/(X^2-3) is a chain with 5 ideals");
    // Nilpotency of X - 3 by repeated table multiplication.
    const int pi = chain_table.index_of(P(chain_table.modulus().ring(), "X-3"));
    int power = pi, index = 1;
    while (power != 0 && index < 16) {
        power = chain_table.mul(power, pi);
        ++index;
    }
    check(index == 4, "X - 3 has nilpotency index 4");
    auto report = verify_chain_quotient(ring("GR(4,1)")->from_int(3), 2);
    check(report.is_chain && report.nilpotency == 4, "verify_chain_quotient agrees");
}

// 9. Z9[X]/<X^3 - 4>.
void criterion9(Checker& check) {
    auto report = verify_chain_quotient(ring("GR(9,1)")->from_int(4), 3);
    check(report.is_chain, "is chain");
    check(report.nilpotency == 6, "nilpotency index 6");
    check(report.eisenstein_unit.has_value(), "Eisenstein unit found");
    // Independent: powers of X - 4 in Z_9[X]/<X^3 - 4>.
    IntPoly pi = {5, 1}, power = {1};
    int zero_at = 0;
    IntPoly cube;
    for (int k = 1; k <= 9; ++k) {
        power = oracle::int_fold(oracle::int_mul(power, pi, 9), 3, 4, 9);
        if (k == 3) cube = power;
        if (power.empty()) {
            zero_at = k;
            break;
        }
    }
    check(zero_at == 6, "(X-4)^6 = 0 and (X-4)^5 != 0 by integer arithmetic");
    if (!report.eisenstein_unit || !report.pi_power_n) return;
    const IntPoly u = ints(report.eisenstein_unit->rep());
    check(oracle::int_mul(u, {3}, 9) == cube, "pi^3 = 3u");
    check(ints(report.pi_power_n->rep()) == cube, "reported pi^3");
    // Over GF(3), X^3 - 4 = (X - 1)^3, so u is a unit iff u(1) != 0 mod 3.
    const int64_t u1 = std::accumulate(u.begin(), u.end(), int64_t{0});
    check(u1 % 3 != 0, "u is a unit");
}

// 10. Hensel lifting on random instances.
void criterion10(Checker& check) {
    std::mt19937_64 rng(10);
    const int64_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 50; ++trial) {
        const int64_t p = primes[rng() % 3];
        const int s = 1 + static_cast<int>(rng() % 3);
        int64_t n;
        do n = 1 + static_cast<int64_t>(rng() % 12);
        while (std::gcd(n, p) != 1);
        const int64_t m = ipow(p, s);
        int64_t lam;
        do lam = static_cast<int64_t>(rng() % static_cast<uint64_t>(m));
        while (lam % p == 0);
        auto R = ChainRing::make(ChainRingSpec::galois_ring(p, s, 1));
        const std::string tag = "Z" + std::to_string(m) + ", n=" + std::to_string(n) + ", lambda=" + std::to_string(lam);
        auto fact = factor_over_ring(R->from_int(lam), n);
        IntPoly prod = {1};
        for (const auto& phi : fact.factors()) prod = oracle::int_mul(prod, ints(phi), m);
        IntPoly target(static_cast<size_t>(n) + 1, 0);
        target[0] = m - lam;
        target[static_cast<size_t>(n)] = 1;
        check(prod == target, "product " + tag);
        for (int i = 0; i < fact.m(); ++i) {
            const auto& phi = fact.factors()[static_cast<size_t>(i)];
            check(phi.is_monic(), "monic " + tag);
            check(residue(phi) == fact.residue_factors()[static_cast<size_t>(i)], "residue " + tag);
            for (int j = i + 1; j < fact.m(); ++j) {
                const auto& psi = fact.factors()[static_cast<size_t>(j)];
                auto b = bezout_coprime(phi, psi);
                IntPoly lhs = oracle::int_add(oracle::int_mul(ints(b.a), ints(phi), m), oracle::int_mul(ints(b.b), ints(psi), m), m);
                check(lhs == IntPoly{1}, "Bezout certificate " + tag);
            }
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Checker&, std::string&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "factorization of X^6 - 4 over Z25", [](Checker& c, std::string&) { criterion1(c); }},
        {2, "code (2,2,1,0): towers, zero set, BCH, min weight, member", [](Checker& c, std::string&) { criterion2(c); }},
        {3, "ideal census: 81 codes with towers, round trips, G H = 0, membership", [](Checker& c, std::string&) { criterion3(c); }},
        {4, "cardinality equals brute-force count", criterion4},
        {5, "BCH bound <= exact minimum weight", criterion5},
        {6, "direct and residue minimum weights agree", criterion6},
        {7, "isometry f(X) -> f(-X) on Z25, n=3", [](Checker& c, std::string&) { criterion7(c); }},
        {8, "principality verdicts and brute-force lattices", [](Checker& c, std::string&) { criterion8(c); }},
        {9, "Z9[X]/<X^3 - 4> is a chain ring with pi^3 = 3u", [](Checker& c, std::string&) { criterion9(c); }},
        {10, "Hensel lifting on 50 random instances", [](Checker& c, std::string&) { criterion10(c); }},
    };
    int failed = 0;
    for (const auto& crit : criteria) {
        Checker check;
        std::string note;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.body(check, note);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = check.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("%s %2d  %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", crit.id, crit.title, secs, note.empty() ? "" : "; ", note.c_str());
        for (const auto& f : check.failures) std::printf("        failed: %s\n", f.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
