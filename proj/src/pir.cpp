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

#include "chaincodes/pir.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "chaincodes/detail/text_util.hpp"
#include "chaincodes/errors.hpp"

namespace chaincodes {

// ---------------------------------------------------------------------------
// PirSpec

PirSpec PirSpec::parse(std::string_view input) {
    PirSpec out;
    for (const auto& part : text::split_top_level(text::strip_spaces(input), '+')) {
        if (part.empty()) throw ParseError("PIR spec: empty component in '" + std::string(input) + "'");
        out.components.push_back(ChainRingSpec::parse(part));
    }
    if (out.components.empty()) throw ParseError("PIR spec: no components");
    return out;
}

int64_t PirSpec::characteristic() const {
    int64_t c = 1;
    for (const auto& s : components) c = std::lcm(c, s.characteristic());
    return c;
}

std::vector<RingPtr> PirSpec::rings() const {
    std::vector<RingPtr> out;
    for (const auto& s : components) out.push_back(ChainRing::make(s));
    return out;
}

std::string PirSpec::to_string() const {
    std::string out;
    for (const auto& s : components) out += (out.empty() ? "" : "+") + s.to_string();
    return out;
}

std::vector<RingElement> parse_lambdas(const std::vector<RingPtr>& rings, std::string_view input) {
    const auto parts = text::split_top_level(text::strip_spaces(input), ',');
    if (parts.size() != rings.size())
        throw ParseError("expected " + std::to_string(rings.size()) + " lambda component(s), got '" + std::string(input) + "'");
    std::vector<RingElement> out;
    for (size_t i = 0; i < parts.size(); ++i) out.push_back(parse_element(rings[i], parts[i]));
    return out;
}

namespace {

void check_lambdas(const PirSpec& spec, int64_t n, const std::vector<RingElement>& lambdas, const char* what) {
    if (n < 1) throw PreconditionError(std::string(what) + ": n must be >= 1");
    if (lambdas.size() != spec.components.size())
        throw PreconditionError(std::string(what) + ": one lambda per component is required");
    for (size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i].ring()->spec() == spec.components[i]))
            throw PreconditionError(std::string(what) + ": lambda " + std::to_string(i + 1) + " is not in " + spec.components[i].to_string());
        if (!is_unit(lambdas[i]))
            throw PreconditionError(std::string(what) + ": lambda " + std::to_string(i + 1) + " = " + lambdas[i].to_string() + " is not a unit");
    }
}

}  // namespace

std::vector<ComponentInstance> decompose_quotient(const PirSpec& spec, int64_t n, const std::vector<RingElement>& lambdas) {
    check_lambdas(spec, n, lambdas, "decompose_quotient");
    std::vector<ComponentInstance> out;
    for (const auto& l : lambdas) out.push_back({l.ring(), l, n});
    return out;
}

// ---------------------------------------------------------------------------
// PirCode

PirCode::PirCode(std::vector<ConstacyclicCode> components) : components_(std::move(components)) {
    if (components_.empty()) throw PreconditionError("PirCode: no components");
    for (const auto& c : components_)
        if (c.factorization().n() != components_.front().factorization().n())
            throw PreconditionError("PirCode: components must share n");
}

PirCode PirCode::from_exponents(const std::vector<FactorizationPtr>& facts, const std::vector<std::vector<int>>& exponents) {
    if (facts.size() != exponents.size()) throw PreconditionError("PirCode: one exponent vector per component is required");
    std::vector<ConstacyclicCode> codes;
    for (size_t i = 0; i < facts.size(); ++i) codes.push_back(ConstacyclicCode::from_exponents(facts[i], exponents[i]));
    return PirCode(std::move(codes));
}

BigInt PirCode::cardinality() const {
    BigInt out = 1;
    for (const auto& c : components_) out *= c.cardinality();
    return out;
}

bool PirCode::contains(const std::vector<QuotientElement>& word, Membership method) const {
    if (word.size() != components_.size()) throw PreconditionError("PirCode::contains: one word per component is required");
    for (size_t i = 0; i < word.size(); ++i)
        if (!components_[i].contains(word[i], method)) return false;
    return true;
}

std::vector<QuotientElement> PirCode::canonical_generator() const {
    std::vector<QuotientElement> out;
    for (const auto& c : components_) out.push_back(c.canonical_generator());
    return out;
}

int PirCode::min_weight_exact(WeightStrategy strategy, uint64_t budget) const {
    // A word touching one component only is never heavier than one touching several.
    std::optional<int> best;
    for (const auto& c : components_) {
        if (c.is_zero_code()) continue;
        const int w = c.min_weight_exact(strategy, budget);
        best = best ? std::min(*best, w) : w;
    }
    if (!best) throw PreconditionError("PirCode::min_weight_exact: the zero code has no nonzero words");
    return *best;
}

// ---------------------------------------------------------------------------
// Principality

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Principal:
            return "principal";
        case Verdict::NotPrincipal:
            return "not_principal";
        case Verdict::Unknown:
            return "unknown";
    }
    throw std::logic_error("unknown Verdict");
}

PrincipalityReport is_principal_quotient(const PirSpec& spec, int64_t n, const std::vector<RingElement>& lambdas) {
    check_lambdas(spec, n, lambdas, "is_principal_quotient");
    PrincipalityReport report;
    bool criterion = true;
    for (size_t i = 0; i < lambdas.size(); ++i) {
        ComponentCertificate cert;
        cert.spec = spec.components[i];
        cert.ell = cert.spec.ell;
        cert.characteristic = cert.spec.characteristic();
        cert.gcd_n_char = std::gcd(n, cert.characteristic);
        cert.criterion = std::min<int64_t>(cert.ell, cert.gcd_n_char) == 1;
        cert.lambda_order = unit_order(lambdas[i]);
        report.lambda_order = std::lcm(report.lambda_order, cert.lambda_order);
        criterion = criterion && cert.criterion;
        report.components.push_back(std::move(cert));
    }
    report.exact = std::gcd(n, report.lambda_order) == 1;
    if (criterion) {
        report.verdict = Verdict::Principal;
        report.reason = "min{ell_i, gcd(n, char R_i)} = 1 for every component";
    } else if (report.exact) {
        report.verdict = Verdict::NotPrincipal;
        report.reason = "gcd(n, ord lambda) = 1 and some component has min{ell_i, gcd(n, char R_i)} > 1";
    } else {
        report.verdict = Verdict::Unknown;
        report.reason = "criterion fails but gcd(n, ord lambda) = " + std::to_string(std::gcd(n, report.lambda_order)) +
                        " != 1, so it is not necessary here";
    }
    return report;
}

// ---------------------------------------------------------------------------
// Isometry

Isometry make_isometry(const std::vector<RingElement>& lambdas, int64_t n) {
    if (lambdas.empty()) throw PreconditionError("isometry: no lambda given");
    if (n < 1) throw PreconditionError("isometry: n must be >= 1");
    Isometry iso;
    iso.n = n;
    for (const auto& l : lambdas) iso.t = std::lcm(iso.t, unit_order(l));
    const auto eg = nt::ext_gcd(n, iso.t);
    if (eg.g != 1)
        throw PreconditionError("isometry: gcd(n, ord lambda) = gcd(" + std::to_string(n) + ", " + std::to_string(iso.t) +
                                ") = " + std::to_string(eg.g) + " != 1");
    iso.alpha = nt::mod(eg.x, iso.t);
    iso.beta = (1 - n * iso.alpha) / iso.t;
    iso.lambdas = lambdas;
    for (const auto& l : lambdas) iso.scalings.push_back(pow(l, static_cast<uint64_t>(iso.alpha)));
    return iso;
}

QuotientElement Isometry::apply(const QuotientElement& f, size_t component) const {
    if (component >= lambdas.size()) throw PreconditionError("isometry: component out of range");
    const auto& lambda = lambdas[component];
    if (f.ring().n() != n || !(f.ring().lambda() == lambda))
        throw PreconditionError("isometry: word is not in " + QuotientRing(lambda, static_cast<int>(n)).to_string());
    const RingPtr& R = lambda.ring();
    std::vector<RingElement> c;
    RingElement power = R->one();
    for (const auto& a : f.word()) {
        c.push_back(a * power);
        power *= scalings[component];
    }
    return QuotientRing(R->one(), static_cast<int>(n)).from_word(c);
}

QuotientElement isometry_map(const QuotientElement& f) { return make_isometry({f.ring().lambda()}, f.ring().n()).apply(f); }

// ---------------------------------------------------------------------------
// Chain quotients of Galois rings

ChainQuotientReport verify_chain_quotient(const RingElement& lambda, int64_t n) {
    const RingPtr& R = lambda.ring();
    const auto& spec = R->spec();
    if (spec.family != Family::GaloisRing) throw PreconditionError("verify_chain_quotient: base must be a Galois ring");
    if (n < 1) throw PreconditionError("verify_chain_quotient: n must be >= 1");
    if (!is_unit(lambda)) throw PreconditionError("verify_chain_quotient: lambda = " + lambda.to_string() + " is not a unit");
    const QuotientRing Q(lambda, static_cast<int>(n));
    const QuotientElement pi = Q.x() - Q.element(Poly::constant(lambda));

    ChainQuotientReport report;
    report.residue_valuation = valuation(pow(lambda, static_cast<uint64_t>(n)) - lambda);

    // The quotient has length n s, so a nilpotent pi dies by the power n s.
    const int64_t bound = n * spec.s;
    QuotientElement power = Q.one();
    for (int64_t k = 1; k <= bound; ++k) {
        power = power * pi;
        if (k == n) report.pi_power_n = power;
        if (power.is_zero()) {
            report.nilpotency = static_cast<int>(k);
            break;
        }
    }
    if (!report.pi_power_n) report.pi_power_n = Q.zero();

    if (!report.nilpotency) {
        report.reason = "X - lambda is not nilpotent: (X - lambda)^" + std::to_string(bound) + " != 0";
    } else if (report.residue_valuation != 1) {
        report.reason = "quotient by X - lambda is R/<lambda^n - lambda> with lambda^n - lambda of valuation " +
                        std::to_string(report.residue_valuation) + ", not a field";
    } else {
        report.is_chain = true;
        report.reason = "X - lambda is nilpotent and the quotient by it is the residue field";
    }

    // Eisenstein relation (X - lambda)^n = p u.
    const auto& pn = *report.pi_power_n;
    std::optional<Poly> u;
    if (spec.s == 1) {
        if (pn.is_zero()) u = Poly::constant(R->one());
    } else {
        const auto raw = pn.rep().raw();
        if (std::all_of(raw.begin(), raw.end(), [&](int64_t c) { return c % spec.p == 0; })) {
            std::vector<int64_t> div(raw.begin(), raw.end());
            for (auto& c : div) c /= spec.p;
            u = Poly::from_raw(R, std::move(div));
        }
    }
    if (u) {
        const Poly modulus_bar = residue(Q.modulus());
        if (extended_gcd(residue(*u), modulus_bar).gcd.degree() == 0) report.eisenstein_unit = Q.element(*u);
    }
    if (report.is_chain && !report.eisenstein_unit) {
        report.is_chain = false;
        report.reason = "no unit u with (X - lambda)^n = p u";
    }
    return report;
}

// ---------------------------------------------------------------------------
// SmallRingTable

SmallRingTable::SmallRingTable(Poly modulus, int size) : modulus_(std::move(modulus)), size_(size) {}

SmallRingTable SmallRingTable::from_quotient(const Poly& modulus) {
    const RingPtr& R = modulus.ring();
    if (!modulus.is_monic() || modulus.degree() < 1) throw PreconditionError("SmallRingTable: modulus must be monic of positive degree");
    const int digits = modulus.degree() * R->width();
    const int64_t m = R->coefficient_modulus();
    int64_t size = 1;
    for (int i = 0; i < digits; ++i) {
        size *= m;
        if (size > static_cast<int64_t>(kMaxElements))
            throw BudgetExceeded("SmallRingTable: quotient has more than " + std::to_string(kMaxElements) + " elements");
    }
    SmallRingTable t(modulus, static_cast<int>(size));
    t.one_ = 1;
    const auto N = static_cast<size_t>(size);
    const auto D = static_cast<size_t>(digits);

    auto decode = [&](size_t code) {
        std::vector<int64_t> c(D);
        for (auto& v : c) {
            v = static_cast<int64_t>(code % static_cast<size_t>(m));
            code /= static_cast<size_t>(m);
        }
        return c;
    };
    auto encode = [&](const std::vector<int64_t>& c) {
        size_t code = 0;
        for (size_t i = D; i-- > 0;) code = code * static_cast<size_t>(m) + static_cast<size_t>(c[i]);
        return code;
    };
    auto flat_of = [&](const Poly& f) {
        std::vector<int64_t> c(D, 0);
        std::copy(f.raw().begin(), f.raw().end(), c.begin());
        return c;
    };

    t.add_.resize(N * N);
    t.mul_.resize(N * N);
    std::vector<std::vector<int64_t>> elems(N);
    for (size_t a = 0; a < N; ++a) elems[a] = decode(a);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            std::vector<int64_t> s(D);
            for (size_t i = 0; i < D; ++i) s[i] = (elems[a][i] + elems[b][i]) % m;
            t.add_[a * N + b] = static_cast<uint16_t>(encode(s));
        }

    // Row a of the product table: b runs through the codes in order, so the
    // product is updated by adding a * e_k where e_k is the k-th unit digit.
    for (size_t a = 0; a < N; ++a) {
        const Poly pa = Poly::from_raw(R, elems[a]);
        std::vector<std::vector<int64_t>> basis(D);
        for (size_t k = 0; k < D; ++k) {
            std::vector<int64_t> e(D, 0);
            e[k] = 1;
            basis[k] = flat_of(divmod_monic(pa * Poly::from_raw(R, e), modulus).remainder);
        }
        std::vector<int64_t> cur(D, 0);
        std::vector<int64_t> dig(D, 0);
        for (size_t b = 0; b < N; ++b) {
            t.mul_[a * N + b] = static_cast<uint16_t>(encode(cur));
            for (size_t k = 0; k < D; ++k) {
                for (size_t i = 0; i < D; ++i) cur[i] = (cur[i] + basis[k][i]) % m;
                if (++dig[k] < m) break;
                dig[k] = 0;
            }
        }
    }
    return t;
}

SmallRingTable SmallRingTable::parse(std::string_view input) {
    const std::string s = text::strip_spaces(input);
    const auto bar = s.find("[X]/(");
    if (bar == std::string::npos || s.back() != ')') throw ParseError("quotient: expected BASE[X]/(f), got '" + s + "'");
    const std::string base = s.substr(0, bar);
    const std::string poly = s.substr(bar + 5, s.size() - bar - 6);
    ChainRingSpec spec;
    if (!base.empty() && base.front() == 'Z' && base.find('(') == std::string::npos) {
        const int64_t m = text::parse_int(std::string_view(base).substr(1));
        const auto pk = nt::prime_power(m);
        if (!pk) throw ParseError("quotient: Z" + std::to_string(m) + " is not a prime-power modulus");
        spec = ChainRingSpec::galois_ring(pk->first, pk->second, 1);
    } else {
        spec = ChainRingSpec::parse(base);
    }
    const RingPtr R = ChainRing::make(spec);
    return from_quotient(Poly::parse(R, poly));
}

Poly SmallRingTable::element(int a) const {
    if (a < 0 || a >= size_) throw PreconditionError("SmallRingTable: element index out of range");
    const RingPtr& R = modulus_.ring();
    const auto D = static_cast<size_t>(modulus_.degree() * R->width());
    const auto m = static_cast<size_t>(R->coefficient_modulus());
    std::vector<int64_t> c(D);
    auto code = static_cast<size_t>(a);
    for (auto& v : c) {
        v = static_cast<int64_t>(code % m);
        code /= m;
    }
    return Poly::from_raw(R, std::move(c));
}

int SmallRingTable::index_of(const Poly& f) const {
    const Poly r = divmod_monic(f, modulus_).remainder;
    const auto m = static_cast<int64_t>(modulus_.ring()->coefficient_modulus());
    int64_t code = 0;
    const auto raw = r.raw();
    for (size_t i = raw.size(); i-- > 0;) code = code * m + raw[i];
    return static_cast<int>(code);
}

std::string SmallRingTable::description() const {
    return modulus_.ring()->spec().to_string() + "[X]/(" + modulus_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Ideal lattice

namespace {

using Bits = std::vector<char>;

Bits principal_bits(const SmallRingTable& t, int g) {
    Bits out(static_cast<size_t>(t.size()), 0);
    for (int r = 0; r < t.size(); ++r) out[static_cast<size_t>(t.mul(r, g))] = 1;
    return out;
}

Bits sum_bits(const SmallRingTable& t, const Bits& a, const Bits& b) {
    std::vector<int> ea, eb;
    for (int i = 0; i < t.size(); ++i) {
        if (a[static_cast<size_t>(i)]) ea.push_back(i);
        if (b[static_cast<size_t>(i)]) eb.push_back(i);
    }
    Bits out(static_cast<size_t>(t.size()), 0);
    for (int x : ea)
        for (int y : eb) out[static_cast<size_t>(t.add(x, y))] = 1;
    return out;
}

std::vector<int> members(const Bits& b) {
    std::vector<int> out;
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

std::vector<int> ideal_generated(const SmallRingTable& table, const std::vector<int>& generators) {
    Bits acc(static_cast<size_t>(table.size()), 0);
    acc[0] = 1;
    for (int g : generators) {
        if (g < 0 || g >= table.size()) throw PreconditionError("ideal_generated: element index out of range");
        acc = sum_bits(table, acc, principal_bits(table, g));
    }
    return members(acc);
}

IdealLattice brute_ideal_lattice(const SmallRingTable& table) {
    std::map<Bits, size_t> index;
    std::vector<Bits> bits;
    std::vector<LatticeIdeal> ideals;
    auto insert = [&](Bits b, std::vector<int> gens, bool principal) {
        if (index.count(b)) return;
        index.emplace(b, bits.size());
        ideals.push_back({members(b), std::move(gens), principal});
        bits.push_back(std::move(b));
    };
    for (int g = 0; g < table.size(); ++g) insert(principal_bits(table, g), {g}, true);
    // Every ideal of a finite ring is a finite sum of principal ideals.
    for (size_t j = 0; j < bits.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            Bits s = sum_bits(table, bits[i], bits[j]);
            if (index.count(s)) continue;
            std::vector<int> gens = ideals[i].generators;
            gens.insert(gens.end(), ideals[j].generators.begin(), ideals[j].generators.end());
            std::sort(gens.begin(), gens.end());
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
            insert(std::move(s), std::move(gens), false);
        }

    std::sort(ideals.begin(), ideals.end(), [](const LatticeIdeal& a, const LatticeIdeal& b) {
        return a.elements.size() != b.elements.size() ? a.elements.size() < b.elements.size() : a.elements < b.elements;
    });
    IdealLattice out;
    out.ideals = std::move(ideals);
    const size_t k = out.ideals.size();
    for (size_t i = 0; i < k; ++i) {
        if (!out.ideals[i].principal && !out.witness) out.witness = i;
        for (size_t j = i + 1; j < k; ++j)
            if (!subset(out.ideals[i].elements, out.ideals[j].elements)) out.chain = false;
    }
    out.principal = !out.witness.has_value();
    int maximal = 0;
    for (size_t i = 0; i < k; ++i) {
        if (static_cast<int>(out.ideals[i].elements.size()) == table.size()) continue;
        bool is_max = true;
        for (size_t j = 0; j < k && is_max; ++j)
            if (j != i && static_cast<int>(out.ideals[j].elements.size()) < table.size() &&
                out.ideals[j].elements.size() > out.ideals[i].elements.size() && subset(out.ideals[i].elements, out.ideals[j].elements))
                is_max = false;
        if (is_max) ++maximal;
    }
    out.local = maximal == 1;
    return out;
}

}  // namespace chaincodes
