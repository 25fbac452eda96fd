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

#include "chaincodes/field.hpp"

#include <numeric>

#include "chaincodes/errors.hpp"

namespace chaincodes {

namespace {

void require_field(const RingPtr& f, const char* what) {
    if (!f->is_field()) throw PreconditionError(std::string(what) + ": " + f->spec().to_string() + " is not a field");
}

FieldElement decode(const RingPtr& field, uint64_t code) {
    std::vector<int64_t> c(static_cast<size_t>(field->width()));
    const auto m = static_cast<uint64_t>(field->coefficient_modulus());
    for (auto& v : c) {
        v = static_cast<int64_t>(code % m);
        code /= m;
    }
    return field->element(std::move(c));
}

// Value of sum_i h_i y^i with integer coefficients h_i.
FieldElement evaluate_int_poly(std::span<const int64_t> h, const FieldElement& y) {
    FieldElement acc = y.ring()->zero();
    for (size_t i = h.size(); i-- > 0;) acc = acc * y + y.ring()->from_int(h[i]);
    return acc;
}

}  // namespace

RingPtr extension_field(const RingPtr& field, int d) {
    require_field(field, "extension_field");
    if (d < 1) throw PreconditionError("extension_field: degree must be >= 1");
    if (d == 1) return field;
    const auto& spec = field->spec();
    return ChainRing::make(ChainRingSpec::galois_field(spec.p, spec.r * d));
}

FieldElement primitive_element(const RingPtr& field) {
    require_field(field, "primitive_element");
    const int64_t q = field->residue_size();
    const auto primes = nt::prime_factors(q - 1);
    for (int64_t code = 1; code < q; ++code) {
        FieldElement x = decode(field, static_cast<uint64_t>(code));
        bool generates = true;
        for (int64_t l : primes) {
            if (pow(x, static_cast<uint64_t>((q - 1) / l)).is_one()) {
                generates = false;
                break;
            }
        }
        if (generates) return x;
    }
    throw std::logic_error("primitive_element: none found");
}

int64_t field_order(const FieldElement& x) {
    require_field(x.ring(), "field_order");
    if (x.is_zero()) throw PreconditionError("field_order: zero has no multiplicative order");
    const int64_t group = x.ring()->residue_size() - 1;
    int64_t t = group;
    for (int64_t l : nt::prime_factors(group))
        while (t % l == 0 && pow(x, static_cast<uint64_t>(t / l)).is_one()) t /= l;
    return t;
}

FieldEmbedding::FieldEmbedding(RingPtr from, RingPtr to)
    : from_(std::move(from)), to_(std::move(to)), image_(to_->zero()) {
    require_field(from_, "FieldEmbedding");
    require_field(to_, "FieldEmbedding");
    const auto& fs = from_->spec();
    const auto& ts = to_->spec();
    if (fs.p != ts.p || ts.r % fs.r != 0)
        throw PreconditionError("FieldEmbedding: " + fs.to_string() + " does not embed in " + ts.to_string());
    const auto& h = fs.modulus;
    if (fs.r == 1) {
        image_ = to_->from_int(-h[0]);
        return;
    }
    // Roots of h lie in the subfield of order q = p^r: zero and the powers of gamma.
    const int64_t q = from_->residue_size();
    const int64_t big = to_->residue_size();
    const FieldElement gamma = pow(primitive_element(to_), static_cast<uint64_t>((big - 1) / (q - 1)));
    std::optional<FieldElement> best;
    FieldElement y = to_->one();
    for (int64_t j = 0; j < q - 1; ++j, y *= gamma) {
        if (!evaluate_int_poly(h, y).is_zero()) continue;
        if (!best || y.encode() < best->encode()) best = y;
    }
    if (!best) throw std::logic_error("FieldEmbedding: modulus has no root in the extension");
    image_ = *best;
}

FieldElement FieldEmbedding::apply(const FieldElement& x) const {
    if (!same_ring(*x.ring(), *from_)) throw PreconditionError("FieldEmbedding::apply: element from the wrong field");
    FieldElement acc = to_->zero();
    FieldElement power = to_->one();
    for (int64_t c : x.coeffs()) {
        acc += to_->from_int(c) * power;
        power *= image_;
    }
    return acc;
}

std::optional<FieldElement> FieldEmbedding::preimage(const FieldElement& y) const {
    if (!same_ring(*y.ring(), *to_)) throw PreconditionError("FieldEmbedding::preimage: element from the wrong field");
    const int64_t p = from_->p();
    const int rows = to_->width();
    const int cols = from_->width();
    // Augmented matrix [beta^0 ... beta^{r-1} | y] over GF(p).
    std::vector<std::vector<int64_t>> a(static_cast<size_t>(rows), std::vector<int64_t>(static_cast<size_t>(cols) + 1));
    FieldElement power = to_->one();
    for (int j = 0; j < cols; ++j, power *= image_)
        for (int i = 0; i < rows; ++i) a[i][j] = power.coeffs()[i];
    for (int i = 0; i < rows; ++i) a[i][cols] = y.coeffs()[i];

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[row]);
        const int64_t inv = nt::pow_mod(a[row][col], static_cast<uint64_t>(p - 2), p);
        for (auto& v : a[row]) v = (v * inv) % p;
        for (int i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const int64_t f = a[i][col];
            for (int j = 0; j <= cols; ++j) a[i][j] = nt::mod(a[i][j] - f * a[row][j], p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    std::vector<int64_t> c(static_cast<size_t>(cols), 0);
    for (int i = 0; i < row; ++i) c[pivot_col[i]] = a[i][cols];
    return from_->element(std::move(c));
}

PrimaryRoot find_primary_root(const RingPtr& field, const FieldElement& lambda_bar, int64_t n) {
    require_field(field, "find_primary_root");
    if (!same_ring(*lambda_bar.ring(), *field)) throw PreconditionError("find_primary_root: lambda is not in the field");
    if (n < 1) throw PreconditionError("find_primary_root: n must be >= 1");
    if (std::gcd(n, field->p()) != 1) throw PreconditionError("find_primary_root: gcd(n, p) != 1");
    if (lambda_bar.is_zero()) throw PreconditionError("find_primary_root: lambda must be nonzero");

    const int64_t t = field_order(lambda_bar);
    const int64_t tn = t * n;
    const int64_t q = field->residue_size();
    const auto degree = static_cast<int>(nt::multiplicative_order(q % tn, tn));
    {
        int64_t size = 1;
        for (int i = 0; i < degree; ++i) {
            if (size > (int64_t{1} << 40) / q) throw BudgetExceeded("find_primary_root: extension field GF(q^" + std::to_string(degree) + ") is too large");
            size *= q;
        }
    }
    RingPtr ext = extension_field(field, degree);
    FieldEmbedding embedding(field, ext);
    const FieldElement target = embedding.apply(lambda_bar);

    const int64_t big = ext->residue_size();
    const FieldElement h = pow(primitive_element(ext), static_cast<uint64_t>((big - 1) / tn));
    std::optional<FieldElement> best;
    FieldElement cand = h;
    for (int64_t j = 1; j <= tn; ++j, cand *= h) {
        if (std::gcd(j, tn) != 1) continue;
        if (!(pow(cand, static_cast<uint64_t>(n)) == target)) continue;
        if (!best || cand.encode() < best->encode()) best = cand;
    }
    if (!best) throw std::logic_error("find_primary_root: no primitive root with xi^n = lambda");
    return PrimaryRoot{t, tn, degree, ext, std::move(embedding), *best};
}

}  // namespace chaincodes
