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

#include "chaincodes/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "chaincodes/errors.hpp"
#include "chaincodes/detail/text_util.hpp"

namespace chaincodes {

namespace {

using Vec = std::vector<int64_t>;

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo f over GF(p); f nonzero.
Vec rem_mod_p(Vec a, const Vec& f, int64_t p) {
    trim(a);
    const size_t df = f.size() - 1;
    const int64_t inv_lead = nt::pow_mod(f.back(), static_cast<uint64_t>(p - 2), p);
    while (a.size() >= f.size()) {
        const int64_t c = (a.back() * inv_lead) % p;
        const size_t shift = a.size() - 1 - df;
        for (size_t i = 0; i <= df; ++i) a[shift + i] = nt::mod(a[shift + i] - c * f[i], p);
        trim(a);
    }
    return a;
}

Vec mulmod_p(const Vec& a, const Vec& b, const Vec& f, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return rem_mod_p(std::move(out), f, p);
}

Vec gcd_mod_p(Vec a, Vec b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = rem_mod_p(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int64_t pow_or_cap(int64_t base, int exp) {
    try {
        return nt::checked_pow(base, exp);
    } catch (const std::overflow_error&) {
        return std::numeric_limits<int64_t>::max();
    }
}

}  // namespace

bool is_irreducible_mod_p(std::span<const int64_t> f_in, int64_t p) {
    Vec f(f_in.begin(), f_in.end());
    for (auto& c : f) c = nt::mod(c, p);
    trim(f);
    if (f.size() < 2) return false;
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) return true;
    Vec h = {0, 1};
    for (int i = 1; i <= deg / 2; ++i) {
        // h <- h^p mod f
        Vec acc = {1};
        Vec base = h;
        for (int64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mulmod_p(acc, base, f, p);
            base = mulmod_p(base, base, f, p);
        }
        h = acc;
        Vec diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = nt::mod(diff[1] - 1, p);
        Vec g = gcd_mod_p(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<int64_t> default_modulus(int64_t p, int r) {
    const int64_t count = nt::checked_pow(p, r);
    for (int64_t code = 0; code < count; ++code) {
        Vec f(static_cast<size_t>(r) + 1, 0);
        int64_t c = code;
        for (int i = 0; i < r; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[r] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// ChainRingSpec

ChainRingSpec ChainRingSpec::galois_ring(int64_t p, int s, int r, std::vector<int64_t> modulus) {
    ChainRingSpec spec;
    spec.family = Family::GaloisRing;
    spec.p = p;
    spec.r = r;
    spec.s = s;
    spec.ell = s;
    if (modulus.empty() && nt::is_prime(p) && r >= 1) modulus = default_modulus(p, r);
    spec.modulus = std::move(modulus);
    spec.validate();
    return spec;
}

ChainRingSpec ChainRingSpec::truncated_power_series(int64_t p, int r, int ell, std::vector<int64_t> modulus) {
    ChainRingSpec spec;
    spec.family = Family::TruncatedPowerSeries;
    spec.p = p;
    spec.r = r;
    spec.s = 1;
    spec.ell = ell;
    if (modulus.empty() && nt::is_prime(p) && r >= 1) modulus = default_modulus(p, r);
    spec.modulus = std::move(modulus);
    spec.validate();
    return spec;
}

ChainRingSpec ChainRingSpec::galois_field(int64_t p, int r, std::vector<int64_t> modulus) {
    return galois_ring(p, 1, r, std::move(modulus));
}

int64_t ChainRingSpec::characteristic() const { return nt::checked_pow(p, s); }

int64_t ChainRingSpec::residue_size() const { return nt::checked_pow(p, r); }

std::string ChainRingSpec::to_string() const {
    std::ostringstream os;
    if (family == Family::GaloisRing) {
        os << "GR(" << characteristic() << "," << r;
    } else {
        os << "FPS(" << residue_size() << "," << ell;
    }
    if (modulus != default_modulus(p, r)) {
        os << ",[";
        for (size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
        os << "]";
    }
    os << ")";
    return os.str();
}

void ChainRingSpec::validate() const {
    if (!nt::is_prime(p)) throw PreconditionError("ring spec: p = " + std::to_string(p) + " is not prime");
    if (r < 1 || s < 1 || ell < 1) throw PreconditionError("ring spec: r, s and ell must be positive");
    if (family == Family::GaloisRing && ell != s)
        throw PreconditionError("ring spec: Galois rings require ell = s");
    if (family == Family::TruncatedPowerSeries && s != 1)
        throw PreconditionError("ring spec: truncated power series require s = 1");
    const int64_t m = pow_or_cap(p, s);
    if (m >= (int64_t{1} << 31)) throw PreconditionError("ring spec: characteristic p^s must stay below 2^31");
    if (pow_or_cap(p, r) >= (int64_t{1} << 40))
        throw PreconditionError("ring spec: residue field size p^r must stay below 2^40");
    if (modulus.size() != static_cast<size_t>(r) + 1 || modulus.back() != 1)
        throw PreconditionError("ring spec: modulus must be monic of degree r");
    const int64_t coeff_mod = family == Family::GaloisRing ? m : p;
    for (int64_t c : modulus)
        if (c < 0 || c >= coeff_mod) throw PreconditionError("ring spec: modulus coefficients must be canonical residues");
    if (!is_irreducible_mod_p(modulus, p))
        throw PreconditionError("ring spec: modulus does not reduce to an irreducible polynomial over GF(p)");
}

ChainRingSpec ChainRingSpec::parse(std::string_view input) {
    const std::string src = text::strip_spaces(input);
    const auto open = src.find('(');
    if (open == std::string::npos || src.back() != ')') throw ParseError("ring spec: expected NAME(args), got '" + src + "'");
    const std::string name = src.substr(0, open);
    const auto args = text::split_top_level(src.substr(open + 1, src.size() - open - 2), ',');
    std::vector<int64_t> modulus;
    auto take_modulus = [&](size_t index) {
        if (args.size() > index + 1) throw ParseError("ring spec: too many arguments in '" + src + "'");
        if (args.size() == index + 1) {
            const std::string& m = args[index];
            if (m.size() < 2 || m.front() != '[' || m.back() != ']') throw ParseError("ring spec: modulus must be a [..] list");
            modulus = text::parse_int_list(m.substr(1, m.size() - 2));
        }
    };
    auto power = [&](const std::string& arg) {
        const int64_t q = text::parse_int(arg);
        auto pk = nt::prime_power(q);
        if (!pk) throw ParseError("ring spec: " + arg + " is not a prime power");
        return *pk;
    };
    if (name == "GR") {
        if (args.size() < 2) throw ParseError("ring spec: GR needs (p^s, r)");
        auto [p, s] = power(args[0]);
        const int r = static_cast<int>(text::parse_int(args[1]));
        take_modulus(2);
        return galois_ring(p, s, r, modulus);
    }
    if (name == "FPS") {
        if (args.size() < 2) throw ParseError("ring spec: FPS needs (q, l)");
        auto [p, r] = power(args[0]);
        const int ell = static_cast<int>(text::parse_int(args[1]));
        take_modulus(2);
        return truncated_power_series(p, r, ell, modulus);
    }
    if (name == "GF") {
        if (args.empty()) throw ParseError("ring spec: GF needs (q)");
        auto [p, r] = power(args[0]);
        take_modulus(1);
        return galois_field(p, r, modulus);
    }
    throw ParseError("ring spec: unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// ChainRing

ChainRing::ChainRing(ChainRingSpec spec)
    : spec_(std::move(spec)),
      width_(spec_.r * (spec_.family == Family::TruncatedPowerSeries ? spec_.ell : 1)),
      blocks_(spec_.family == Family::TruncatedPowerSeries ? spec_.ell : 1),
      m_(nt::checked_pow(spec_.p, spec_.s)),
      q_(nt::checked_pow(spec_.p, spec_.r)) {}

RingPtr ChainRing::make(const ChainRingSpec& spec) {
    spec.validate();
    auto ring = std::make_shared<ChainRing>(spec);
    const bool self_residue = spec.family == Family::GaloisRing && spec.s == 1;
    if (!self_residue) {
        std::vector<int64_t> h = spec.modulus;
        for (auto& c : h) c = nt::mod(c, spec.p);
        ring->residue_ = make(ChainRingSpec::galois_field(spec.p, spec.r, h));
    }
    return ring;
}

BigInt ChainRing::size() const {
    BigInt out = 1;
    for (int i = 0; i < spec_.ell; ++i) out *= q_;
    return out;
}

RingPtr ChainRing::residue_field() const { return residue_ ? residue_ : shared_from_this(); }

RingElement ChainRing::zero() const { return RingElement(shared_from_this(), {}); }

RingElement ChainRing::one() const { return from_int(1); }

RingElement ChainRing::from_int(int64_t v) const { return RingElement(shared_from_this(), {v}); }

RingElement ChainRing::element(std::vector<int64_t> coeffs) const {
    return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement ChainRing::uniformizer() const {
    if (spec_.family == Family::GaloisRing) return from_int(spec_.p);
    std::vector<int64_t> c(static_cast<size_t>(width_), 0);
    if (blocks_ > 1) c[static_cast<size_t>(spec_.r)] = 1;
    return element(std::move(c));
}

RingElement ChainRing::generator() const {
    std::vector<int64_t> c(static_cast<size_t>(width_), 0);
    if (spec_.r > 1) {
        c[1] = 1;
    } else {
        c[0] = nt::mod(-spec_.modulus[0], m_);  // x = -h0 when h = x + h0
    }
    return element(std::move(c));
}

std::vector<std::pair<RingElement, int64_t>> ChainRing::transversal_digits(int depth) const {
    depth = std::clamp(depth, 0, spec_.ell);
    std::vector<std::pair<RingElement, int64_t>> out;
    auto unit_vector = [&](size_t index) {
        std::vector<int64_t> c(static_cast<size_t>(width_), 0);
        c[index] = 1;
        return element(std::move(c));
    };
    if (spec_.family == Family::GaloisRing) {
        if (depth == 0) return out;
        const int64_t order = nt::checked_pow(spec_.p, depth);
        for (int i = 0; i < spec_.r; ++i) out.emplace_back(unit_vector(static_cast<size_t>(i)), order);
    } else {
        for (int b = 0; b < depth; ++b)
            for (int i = 0; i < spec_.r; ++i)
                out.emplace_back(unit_vector(static_cast<size_t>(b * spec_.r + i)), spec_.p);
    }
    return out;
}

void ChainRing::add(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> out) const {
    for (int i = 0; i < width_; ++i) {
        int64_t v = a[i] + b[i];
        out[i] = v >= m_ ? v - m_ : v;
    }
}

void ChainRing::sub(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> out) const {
    for (int i = 0; i < width_; ++i) {
        int64_t v = a[i] - b[i];
        out[i] = v < 0 ? v + m_ : v;
    }
}

void ChainRing::neg(std::span<const int64_t> a, std::span<int64_t> out) const {
    for (int i = 0; i < width_; ++i) out[i] = a[i] == 0 ? 0 : m_ - a[i];
}

void ChainRing::mul(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> out) const {
    if (width_ == 1) {
        out[0] = (a[0] * b[0]) % m_;
        return;
    }
    const int r = spec_.r;
    const int span_len = 2 * r - 1;
    std::vector<int64_t> tmp(static_cast<size_t>(blocks_ * span_len), 0);
    for (int b1 = 0; b1 < blocks_; ++b1) {
        for (int b2 = 0; b1 + b2 < blocks_; ++b2) {
            int64_t* dst = tmp.data() + (b1 + b2) * span_len;
            for (int i = 0; i < r; ++i) {
                const int64_t ai = a[b1 * r + i];
                if (ai == 0) continue;
                for (int j = 0; j < r; ++j) dst[i + j] = (dst[i + j] + ai * b[b2 * r + j]) % m_;
            }
        }
    }
    const auto& h = spec_.modulus;
    for (int blk = 0; blk < blocks_; ++blk) {
        int64_t* t = tmp.data() + blk * span_len;
        for (int k = span_len - 1; k >= r; --k) {
            const int64_t c = t[k];
            if (c == 0) continue;
            for (int j = 0; j < r; ++j) t[k - r + j] = nt::mod(t[k - r + j] - c * h[j], m_);
            t[k] = 0;
        }
        for (int i = 0; i < r; ++i) out[blk * r + i] = t[i];
    }
}

void ChainRing::mul_add(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> acc) const {
    if (width_ == 1) {
        acc[0] = (acc[0] + a[0] * b[0]) % m_;
        return;
    }
    std::vector<int64_t> prod(static_cast<size_t>(width_));
    mul(a, b, prod);
    add(acc, prod, acc);
}

bool ChainRing::is_zero(std::span<const int64_t> a) const {
    return std::all_of(a.begin(), a.begin() + width_, [](int64_t c) { return c == 0; });
}

int ChainRing::valuation(std::span<const int64_t> a) const {
    if (spec_.family == Family::GaloisRing) {
        int v = spec_.s;
        for (int i = 0; i < width_; ++i) v = std::min(v, nt::p_valuation(a[i], spec_.p, spec_.s));
        return v;
    }
    for (int b = 0; b < blocks_; ++b)
        for (int i = 0; i < spec_.r; ++i)
            if (a[b * spec_.r + i] != 0) return b;
    return spec_.ell;
}

uint64_t ChainRing::encode(std::span<const int64_t> a) const {
    uint64_t code = 0;
    for (int i = width_ - 1; i >= 0; --i) code = code * static_cast<uint64_t>(m_) + static_cast<uint64_t>(a[i]);
    return code;
}

std::string ChainRing::format(std::span<const int64_t> a) const {
    if (width_ == 1) return std::to_string(a[0]);
    std::string out = "[";
    for (int i = 0; i < width_; ++i) out += (i ? "," : "") + std::to_string(a[i]);
    return out + "]";
}

bool same_ring(const ChainRing& a, const ChainRing& b) { return &a == &b || a.spec() == b.spec(); }

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPtr ring, std::vector<int64_t> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    const auto w = static_cast<size_t>(ring_->width());
    if (coeffs_.size() > w) {
        for (size_t i = w; i < coeffs_.size(); ++i)
            if (nt::mod(coeffs_[i], ring_->coefficient_modulus()) != 0)
                throw PreconditionError("element has more coefficients than the ring width " + std::to_string(w));
        coeffs_.resize(w);
    }
    coeffs_.resize(w, 0);
    for (auto& c : coeffs_) c = nt::mod(c, ring_->coefficient_modulus());
}

bool RingElement::is_zero() const { return ring_->is_zero(coeffs_); }

bool RingElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

namespace {
void require_same(const RingElement& a, const RingElement& b) {
    if (!same_ring(*a.ring(), *b.ring()))
        throw PreconditionError("ring mismatch: " + a.ring()->spec().to_string() + " vs " + b.ring()->spec().to_string());
}
}  // namespace

RingElement RingElement::operator-() const {
    RingElement out = *this;
    ring_->neg(coeffs_, out.coeffs_);
    return out;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    require_same(*this, o);
    ring_->add(coeffs_, o.coeffs_, coeffs_);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    require_same(*this, o);
    ring_->sub(coeffs_, o.coeffs_, coeffs_);
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
    require_same(*this, o);
    std::vector<int64_t> out(coeffs_.size());
    ring_->mul(coeffs_, o.coeffs_, out);
    coeffs_ = std::move(out);
    return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return same_ring(*a.ring_, *b.ring_) && a.coeffs_ == b.coeffs_;
}

RingElement ring_arith(const RingElement& a, const RingElement& b, ArithOp op) {
    require_same(a, b);
    switch (op) {
        case ArithOp::Add:
            return a + b;
        case ArithOp::Sub:
            return a - b;
        case ArithOp::Mul:
            return a * b;
        case ArithOp::Neg:
            return -a;
    }
    throw std::logic_error("unknown ArithOp");
}

RingElement pow(const RingElement& a, uint64_t e) {
    RingElement result = a.ring()->one();
    RingElement base = a;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

int valuation(const RingElement& a) { return a.ring()->valuation(a.coeffs()); }

bool is_unit(const RingElement& a) { return valuation(a) == 0; }

FieldElement residue(const RingElement& a) {
    const auto& ring = *a.ring();
    RingPtr field = ring.residue_field();
    const auto& spec = ring.spec();
    std::vector<int64_t> c(a.coeffs().begin(), a.coeffs().begin() + spec.r);
    if (spec.family == Family::GaloisRing)
        for (auto& v : c) v %= spec.p;
    return FieldElement(field, std::move(c));
}

RingElement lift(const RingPtr& ring, const FieldElement& x) {
    if (!same_ring(*x.ring(), *ring->residue_field()))
        throw PreconditionError("lift: element is not in the residue field of " + ring->spec().to_string());
    return RingElement(ring, std::vector<int64_t>(x.coeffs().begin(), x.coeffs().end()));
}

RingElement invert_unit(const RingElement& a) {
    if (!is_unit(a)) throw PreconditionError("invert_unit: element " + a.to_string() + " is not a unit");
    const auto& ring = a.ring();
    if (ring->is_field()) return pow(a, static_cast<uint64_t>(ring->residue_size() - 2));
    RingElement x = lift(ring, invert_unit(residue(a)));
    const RingElement two = ring->from_int(2);
    // Each Newton step doubles the pi-adic precision of the inverse.
    for (int step = 0; step <= ring->ell() + 1; ++step) {
        const RingElement ax = a * x;
        if (ax.is_one()) return x;
        x = x * (two - ax);
    }
    throw std::logic_error("invert_unit: Newton iteration did not converge");
}

int64_t unit_order(const RingElement& a) {
    if (!is_unit(a)) throw PreconditionError("unit_order: element " + a.to_string() + " is not a unit");
    const auto& ring = *a.ring();
    const int64_t q = ring.residue_size();
    const int64_t group_order = (q - 1) * pow_or_cap(q, ring.ell() - 1);
    RingElement x = a;
    int64_t t = 1;
    while (!x.is_one()) {
        x *= a;
        if (++t > group_order) throw std::logic_error("unit_order exceeded |R^x|");
    }
    return t;
}

}  // namespace chaincodes
