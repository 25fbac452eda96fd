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

#include "chaincodes/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "chaincodes/detail/text_util.hpp"
#include "chaincodes/errors.hpp"

namespace chaincodes {

namespace {

void require_same(const Poly& f, const Poly& g, const char* what) {
    if (!same_ring(*f.ring(), *g.ring()))
        throw PreconditionError(std::string(what) + ": ring mismatch " + f.ring()->spec().to_string() + " vs " +
                                g.ring()->spec().to_string());
}

}  // namespace

RingElement parse_element(const RingPtr& ring, std::string_view text) {
    const std::string s = text::strip_spaces(text);
    if (s.empty()) throw ParseError("empty ring element");
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated element '" + s + "'");
        auto c = text::parse_int_list(std::string_view(s).substr(1, s.size() - 2));
        if (c.size() > static_cast<size_t>(ring->width()))
            throw ParseError("element '" + s + "' has more than " + std::to_string(ring->width()) + " coefficients");
        return ring->element(std::move(c));
    }
    return ring->from_int(text::parse_int(s));
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly::Poly(RingPtr ring, const std::vector<RingElement>& coeffs) : ring_(std::move(ring)) {
    const auto w = static_cast<size_t>(ring_->width());
    c_.reserve(coeffs.size() * w);
    for (const auto& c : coeffs) {
        if (!same_ring(*c.ring(), *ring_)) throw PreconditionError("Poly: coefficient from " + c.ring()->spec().to_string());
        c_.insert(c_.end(), c.coeffs().begin(), c.coeffs().end());
    }
    normalize();
}

Poly Poly::from_raw(RingPtr ring, std::vector<int64_t> flat) {
    if (flat.size() % static_cast<size_t>(ring->width()) != 0) throw std::logic_error("Poly::from_raw: ragged data");
    Poly out(std::move(ring));
    out.c_ = std::move(flat);
    out.normalize();
    return out;
}

Poly Poly::from_ints(const RingPtr& ring, const std::vector<int64_t>& coeffs) {
    std::vector<RingElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(ring->from_int(v));
    return Poly(ring, c);
}

Poly Poly::constant(const RingElement& c) { return Poly(c.ring(), {c}); }

Poly Poly::monomial(const RingElement& c, int degree) {
    if (degree < 0) throw PreconditionError("Poly::monomial: negative degree");
    std::vector<RingElement> coeffs(static_cast<size_t>(degree), c.ring()->zero());
    coeffs.push_back(c);
    return Poly(c.ring(), coeffs);
}

Poly Poly::binomial(int n, const RingElement& lambda) {
    return monomial(lambda.ring()->one(), n) - constant(lambda);
}

Poly Poly::parse(const RingPtr& ring, std::string_view input) {
    const std::string s = text::strip_spaces(input);
    if (s.empty()) throw ParseError("empty polynomial");
    Poly out(ring);
    auto closes_at_end = [&] {
        int d = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            d += s[i] == '[' ? 1 : s[i] == ']' ? -1 : 0;
            if (d == 0) return i + 1 == s.size();
        }
        return false;
    };
    if (s.front() == '[' && closes_at_end()) {
        // List form; a lone bracketed coefficient must itself be bracketed: [[1,2]].
        std::vector<RingElement> c;
        for (const auto& item : text::split_top_level(std::string_view(s).substr(1, s.size() - 2), ','))
            c.push_back(parse_element(ring, item));
        return Poly(ring, c);
    }
    // Split into signed terms at top-level + and -, except right after '^'.
    std::vector<std::pair<bool, std::string>> terms;
    bool negative = false;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == '+' || c == '-') && (i == 0 || s[i - 1] != '^')) {
            if (!cur.empty()) terms.emplace_back(negative, cur);
            else if (i != 0) throw ParseError("malformed polynomial '" + s + "'");
            negative = c == '-';
            cur.clear();
            continue;
        }
        cur.push_back(c);
    }
    if (cur.empty()) throw ParseError("malformed polynomial '" + s + "'");
    terms.emplace_back(negative, cur);

    for (const auto& [neg, term] : terms) {
        size_t x = std::string::npos;
        depth = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '[') ++depth;
            if (term[i] == ']') --depth;
            if (depth == 0 && (term[i] == 'X' || term[i] == 'x')) {
                x = i;
                break;
            }
        }
        RingElement coeff = ring->one();
        int exponent = 0;
        if (x == std::string::npos) {
            coeff = parse_element(ring, term);
        } else {
            std::string head = term.substr(0, x);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coeff = parse_element(ring, head);
            const std::string tail = term.substr(x + 1);
            if (tail.empty()) {
                exponent = 1;
            } else if (tail.front() == '^') {
                const int64_t e = text::parse_int(std::string_view(tail).substr(1));
                if (e < 0 || e > (1 << 20)) throw ParseError("bad exponent in term '" + term + "'");
                exponent = static_cast<int>(e);
            } else {
                throw ParseError("bad term '" + term + "'");
            }
        }
        Poly t = monomial(coeff, exponent);
        out = neg ? out - t : out + t;
    }
    return out;
}

void Poly::normalize() {
    const auto w = static_cast<size_t>(ring_->width());
    while (!c_.empty() && ring_->is_zero(std::span<const int64_t>(c_).subspan(c_.size() - w, w))) c_.resize(c_.size() - w);
}

int Poly::degree() const { return static_cast<int>(c_.size() / static_cast<size_t>(ring_->width())) - 1; }

bool Poly::is_monic() const { return !is_zero() && leading().is_one(); }

RingElement Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return ring_->zero();
    const auto w = static_cast<size_t>(ring_->width());
    return ring_->element(std::vector<int64_t>(c_.begin() + static_cast<std::ptrdiff_t>(i * w),
                                               c_.begin() + static_cast<std::ptrdiff_t>((i + 1) * w)));
}

RingElement Poly::leading() const { return coeff(degree()); }

std::vector<RingElement> Poly::coefficients() const {
    std::vector<RingElement> out;
    for (int i = 0; i <= degree(); ++i) out.push_back(coeff(i));
    return out;
}

int Poly::weight() const {
    int count = 0;
    const auto w = static_cast<size_t>(ring_->width());
    for (size_t i = 0; i < c_.size(); i += w)
        if (!ring_->is_zero(std::span<const int64_t>(c_).subspan(i, w))) ++count;
    return count;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        const RingElement c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c.to_string();
            continue;
        }
        if (!c.is_one()) out += c.to_string() + "*";
        out += "X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    const auto w = static_cast<size_t>(ring_->width());
    for (size_t i = 0; i < c_.size(); i += w)
        ring_->neg(std::span<const int64_t>(c_).subspan(i, w), std::span<int64_t>(out.c_).subspan(i, w));
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same(*this, o, "Poly +");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    const auto w = static_cast<size_t>(ring_->width());
    for (size_t i = 0; i < o.c_.size(); i += w)
        ring_->add(std::span<const int64_t>(c_).subspan(i, w), std::span<const int64_t>(o.c_).subspan(i, w),
                   std::span<int64_t>(c_).subspan(i, w));
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same(*this, o, "Poly -");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    const auto w = static_cast<size_t>(ring_->width());
    for (size_t i = 0; i < o.c_.size(); i += w)
        ring_->sub(std::span<const int64_t>(c_).subspan(i, w), std::span<const int64_t>(o.c_).subspan(i, w),
                   std::span<int64_t>(c_).subspan(i, w));
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b, "Poly *");
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    const auto w = static_cast<size_t>(a.ring_->width());
    const size_t da = a.c_.size() / w;
    const size_t db = b.c_.size() / w;
    std::vector<int64_t> out((da + db - 1) * w, 0);
    const int64_t m = a.ring_->coefficient_modulus();
    if (w == 1) {
        for (size_t i = 0; i < da; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < db; ++j) out[i + j] = (out[i + j] + a.c_[i] * b.c_[j]) % m;
        }
    } else {
        const std::span<const int64_t> as(a.c_), bs(b.c_);
        std::span<int64_t> os(out);
        for (size_t i = 0; i < da; ++i) {
            if (a.ring_->is_zero(as.subspan(i * w, w))) continue;
            for (size_t j = 0; j < db; ++j) a.ring_->mul_add(as.subspan(i * w, w), bs.subspan(j * w, w), os.subspan((i + j) * w, w));
        }
    }
    return Poly::from_raw(a.ring_, std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const RingElement& c) {
    if (!same_ring(*c.ring(), *ring_)) throw PreconditionError("Poly scalar *: ring mismatch");
    const auto w = static_cast<size_t>(ring_->width());
    std::vector<int64_t> tmp(w);
    for (size_t i = 0; i < c_.size(); i += w) {
        ring_->mul(std::span<const int64_t>(c_).subspan(i, w), c.coeffs(), tmp);
        std::copy(tmp.begin(), tmp.end(), c_.begin() + static_cast<std::ptrdiff_t>(i));
    }
    normalize();
    return *this;
}

bool operator==(const Poly& a, const Poly& b) { return same_ring(*a.ring_, *b.ring_) && a.c_ == b.c_; }

Poly Poly::shifted(int k) const {
    if (k < 0) throw PreconditionError("Poly::shifted: negative shift");
    if (is_zero()) return *this;
    std::vector<int64_t> flat(static_cast<size_t>(k * ring_->width()), 0);
    flat.insert(flat.end(), c_.begin(), c_.end());
    return from_raw(ring_, std::move(flat));
}

RingElement Poly::evaluate(const RingElement& x) const {
    if (!same_ring(*x.ring(), *ring_)) throw PreconditionError("Poly::evaluate: ring mismatch");
    RingElement acc = ring_->zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeff(i);
    return acc;
}

Poly poly_arith(const Poly& f, const Poly& g, PolyOp op) {
    switch (op) {
        case PolyOp::Add:
            return f + g;
        case PolyOp::Sub:
            return f - g;
        case PolyOp::Mul:
            return f * g;
    }
    throw std::logic_error("unknown PolyOp");
}

Poly map_coefficients(const Poly& f, const RingPtr& target, const std::function<RingElement(const RingElement&)>& fn) {
    std::vector<RingElement> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back(fn(f.coeff(i)));
    return Poly(target, c);
}

Poly residue(const Poly& f) {
    return map_coefficients(f, f.ring()->residue_field(), [](const RingElement& c) { return residue(c); });
}

Poly lift(const RingPtr& ring, const Poly& f) {
    return map_coefficients(f, ring, [&](const RingElement& c) { return lift(ring, c); });
}

Poly product(const RingPtr& ring, std::span<const Poly> factors) {
    Poly out = Poly::constant(ring->one());
    for (const auto& f : factors) out *= f;
    return out;
}

// ---------------------------------------------------------------------------
// Division

namespace {

DivMod divide(const Poly& f, const Poly& g, const RingElement& lead_inverse) {
    const RingPtr& ring = f.ring();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(ring), f};
    const auto w = static_cast<size_t>(ring->width());
    std::vector<int64_t> rem(f.raw().begin(), f.raw().end());
    std::vector<int64_t> quo(static_cast<size_t>(f.degree() - dg + 1) * w, 0);
    const auto gs = g.raw();
    std::vector<int64_t> c(w);
    std::vector<int64_t> neg_gj(w);
    for (int k = f.degree() - dg; k >= 0; --k) {
        const std::span<int64_t> top = std::span<int64_t>(rem).subspan(static_cast<size_t>(k + dg) * w, w);
        if (ring->is_zero(top)) continue;
        ring->mul(top, lead_inverse.coeffs(), c);
        std::copy(c.begin(), c.end(), quo.begin() + static_cast<std::ptrdiff_t>(static_cast<size_t>(k) * w));
        for (int j = 0; j <= dg; ++j) {
            ring->neg(gs.subspan(static_cast<size_t>(j) * w, w), neg_gj);
            ring->mul_add(c, neg_gj, std::span<int64_t>(rem).subspan(static_cast<size_t>(k + j) * w, w));
        }
    }
    return {Poly::from_raw(ring, std::move(quo)), Poly::from_raw(ring, std::move(rem))};
}

}  // namespace

DivMod divmod_monic(const Poly& f, const Poly& g) {
    require_same(f, g, "divmod_monic");
    if (!g.is_monic()) throw PreconditionError("divmod_monic: divisor " + g.to_string() + " is not monic");
    return divide(f, g, g.ring()->one());
}

DivMod divmod(const Poly& f, const Poly& g) {
    require_same(f, g, "divmod");
    if (g.is_zero()) throw PreconditionError("divmod: division by zero polynomial");
    if (!is_unit(g.leading())) throw PreconditionError("divmod: leading coefficient of " + g.to_string() + " is not a unit");
    return divide(f, g, invert_unit(g.leading()));
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
    require_same(f, g, "extended_gcd");
    const RingPtr& field = f.ring();
    if (!field->is_field()) throw PreconditionError("extended_gcd: base " + field->spec().to_string() + " is not a field");
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(field->one()), s1(field);
    Poly t0(field), t1 = Poly::constant(field->one());
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const RingElement inv = invert_unit(r0.leading());
    return {r0 * inv, s0 * inv, t0 * inv};
}

Bezout bezout_coprime(const Poly& f, const Poly& g) {
    require_same(f, g, "bezout_coprime");
    const RingPtr& ring = f.ring();
    const auto field_id = extended_gcd(residue(f), residue(g));
    if (field_id.gcd.degree() != 0)
        throw PreconditionError("bezout_coprime: residues of " + f.to_string() + " and " + g.to_string() + " are not coprime");
    Poly a = lift(ring, field_id.a);
    Poly b = lift(ring, field_id.b);
    const Poly one = Poly::constant(ring->one());
    const Poly e = one - (a * f + b * g);
    // e has zero residue, so e^ell = 0 and (1 - e)(1 + e + ... + e^{ell-1}) = 1.
    Poly series = one;
    Poly power = one;
    for (int k = 1; k < ring->ell(); ++k) {
        power *= e;
        series += power;
    }
    a *= series;
    b *= series;
    if (g.is_monic() && g.degree() > 0) {
        auto [q, rem] = divmod_monic(a, g);
        a = std::move(rem);
        b += q * f;
    }
    if (!(a * f + b * g == one)) throw std::logic_error("bezout_coprime: identity check failed");
    return {a, b};
}

// ---------------------------------------------------------------------------
// Hensel lifting

namespace {

std::pair<Poly, Poly> hensel_two(const Poly& f, const Poly& g_bar, const Poly& h_bar) {
    const RingPtr& ring = f.ring();
    const auto id = extended_gcd(g_bar, h_bar);
    if (id.gcd.degree() != 0) throw PreconditionError("hensel_lift: residue factors are repeated or not coprime");
    Poly g = lift(ring, g_bar);
    Poly h = lift(ring, h_bar);
    const Poly a = lift(ring, id.a);
    const Poly b = lift(ring, id.b);
    // Linear step: if f = gh mod pi^k then the corrected pair agrees mod pi^{k+1}.
    for (int k = 1; k < ring->ell(); ++k) {
        const Poly e = f - g * h;
        if (e.is_zero()) break;
        g += divmod_monic(b * e, g).remainder;
        h += divmod_monic(a * e, h).remainder;
    }
    if (!(g * h == f)) throw std::logic_error("hensel_lift: lifted factors do not multiply back");
    return {g, h};
}

void lift_range(const Poly& f, std::span<const Poly> bars, std::vector<Poly>& out) {
    if (bars.size() == 1) {
        out.push_back(f);
        return;
    }
    const size_t mid = bars.size() / 2;
    const RingPtr& field = bars.front().ring();
    const auto left = bars.first(mid);
    const auto right = bars.subspan(mid);
    auto [g, h] = hensel_two(f, product(field, left), product(field, right));
    lift_range(g, left, out);
    lift_range(h, right, out);
}

}  // namespace

std::vector<Poly> hensel_lift(const Poly& f, const std::vector<Poly>& residue_factors) {
    const RingPtr& ring = f.ring();
    if (!f.is_monic()) throw PreconditionError("hensel_lift: " + f.to_string() + " is not monic");
    if (residue_factors.empty()) throw PreconditionError("hensel_lift: no residue factors");
    const RingPtr field = ring->residue_field();
    for (const auto& phi : residue_factors) {
        if (!same_ring(*phi.ring(), *field)) throw PreconditionError("hensel_lift: factor not over the residue field");
        if (!phi.is_monic() || phi.degree() < 1) throw PreconditionError("hensel_lift: factor " + phi.to_string() + " is not monic of positive degree");
    }
    if (!(product(field, residue_factors) == residue(f)))
        throw PreconditionError("hensel_lift: residue factors do not multiply to the residue of " + f.to_string());
    std::vector<Poly> out;
    out.reserve(residue_factors.size());
    lift_range(f, residue_factors, out);
    return out;
}

}  // namespace chaincodes
