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

#include "chaincodes/quotient.hpp"

#include <algorithm>

#include "chaincodes/errors.hpp"

namespace chaincodes {

QuotientRing::QuotientRing(RingElement lambda, int n) : lambda_(std::move(lambda)), n_(n) {
    if (n_ < 1) throw PreconditionError("quotient ring: n must be >= 1");
    if (!is_unit(lambda_)) throw PreconditionError("quotient ring: lambda = " + lambda_.to_string() + " is not a unit");
}

QuotientElement QuotientRing::element(const Poly& f) const {
    if (!same_ring(*f.ring(), *base())) throw PreconditionError("quotient ring: polynomial over the wrong ring");
    if (f.degree() < n_) return QuotientElement(*this, f);
    const RingPtr& ring = base();
    const auto w = static_cast<size_t>(ring->width());
    std::vector<int64_t> c(f.raw().begin(), f.raw().end());
    std::span<int64_t> cs(c);
    for (int i = f.degree(); i >= n_; --i) {
        const auto hi = cs.subspan(static_cast<size_t>(i) * w, w);
        if (ring->is_zero(hi)) continue;
        ring->mul_add(hi, lambda_.coeffs(), cs.subspan(static_cast<size_t>(i - n_) * w, w));
        std::fill(hi.begin(), hi.end(), 0);
    }
    return QuotientElement(*this, Poly::from_raw(ring, std::move(c)));
}

QuotientElement QuotientRing::from_word(const std::vector<RingElement>& word) const {
    if (word.size() > static_cast<size_t>(n_)) throw PreconditionError("quotient ring: word longer than n");
    return element(Poly(base(), word));
}

QuotientElement QuotientRing::zero() const { return QuotientElement(*this, Poly(base())); }

QuotientElement QuotientRing::one() const { return element(Poly::constant(base()->one())); }

QuotientElement QuotientRing::x() const { return element(Poly::monomial(base()->one(), 1)); }

std::string QuotientRing::to_string() const {
    return base()->spec().to_string() + "[X]/<" + modulus().to_string() + ">";
}

bool operator==(const QuotientRing& a, const QuotientRing& b) { return a.n_ == b.n_ && a.lambda_ == b.lambda_; }

namespace {
void require_same(const QuotientElement& a, const QuotientElement& b) {
    if (!(a.ring() == b.ring()))
        throw PreconditionError("quotient ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
}
}  // namespace

std::vector<RingElement> QuotientElement::word() const {
    std::vector<RingElement> out;
    out.reserve(static_cast<size_t>(ring_.n()));
    for (int i = 0; i < ring_.n(); ++i) out.push_back(rep_.coeff(i));
    return out;
}

QuotientElement QuotientElement::operator-() const { return QuotientElement(ring_, -rep_); }

QuotientElement& QuotientElement::operator+=(const QuotientElement& o) {
    require_same(*this, o);
    rep_ += o.rep_;
    return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& o) {
    require_same(*this, o);
    rep_ -= o.rep_;
    return *this;
}

QuotientElement& QuotientElement::operator*=(const QuotientElement& o) { return *this = mulmod(*this, o); }

QuotientElement& QuotientElement::operator*=(const RingElement& c) {
    rep_ *= c;
    return *this;
}

bool operator==(const QuotientElement& a, const QuotientElement& b) { return a.ring_ == b.ring_ && a.rep_ == b.rep_; }

QuotientElement mulmod(const QuotientElement& a, const QuotientElement& b) {
    require_same(a, b);
    return a.ring().element(a.rep() * b.rep());
}

}  // namespace chaincodes
