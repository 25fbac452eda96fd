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

#include "chaincodes/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chaincodes/errors.hpp"

namespace chaincodes {

int CosetPartition::index_of(int64_t j) const {
    j = nt::mod(j, tn);
    for (size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), j)) return static_cast<int>(i);
    return -1;
}

CosetPartition coset_partition(int64_t q, int64_t t, int64_t n) {
    if (t < 1 || n < 1) throw PreconditionError("coset_partition: t and n must be positive");
    const int64_t tn = t * n;
    if (std::gcd(q, tn) != 1) throw PreconditionError("coset_partition: gcd(q, tn) != 1");
    CosetPartition out{q, t, n, tn, {}};
    std::vector<bool> seen(static_cast<size_t>(tn), false);
    for (int64_t k = 0; k < n; ++k) {
        const int64_t j = (1 + t * k) % tn;
        if (seen[j]) continue;
        std::vector<int64_t> orbit;
        for (int64_t x = j; !seen[x]; x = static_cast<int64_t>((static_cast<__int128>(x) * q) % tn)) {
            seen[x] = true;
            orbit.push_back(x);
        }
        std::sort(orbit.begin(), orbit.end());
        out.cosets.push_back(std::move(orbit));
    }
    std::sort(out.cosets.begin(), out.cosets.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

CosetPartition coset_partition(const FieldElement& lambda_bar, int64_t n) {
    const RingPtr& field = lambda_bar.ring();
    if (!field->is_field()) throw PreconditionError("coset_partition: lambda-bar must lie in a field");
    if (std::gcd(n, field->p()) != 1) throw PreconditionError("coset_partition: gcd(n, p) != 1");
    return coset_partition(field->residue_size(), field_order(lambda_bar), n);
}

ResidueFactorization factor_residue_detailed(const RingPtr& field, const FieldElement& lambda_bar, int64_t n) {
    PrimaryRoot root = find_primary_root(field, lambda_bar, n);
    CosetPartition partition = coset_partition(field->residue_size(), root.t, n);
    const RingPtr& ext = root.extension;
    const auto q = static_cast<uint64_t>(field->residue_size());

    std::vector<Poly> factors;
    for (const auto& coset : partition.cosets) {
        Poly prod = Poly::constant(ext->one());
        for (int64_t j : coset) prod *= Poly::monomial(ext->one(), 1) - Poly::constant(pow(root.xi, static_cast<uint64_t>(j)));
        std::vector<FieldElement> coeffs;
        for (const auto& c : prod.coefficients()) {
            if (!(pow(c, q) == c)) throw std::logic_error("factor_residue: orbit product coefficient is not Frobenius-fixed");
            auto back = root.embedding.preimage(c);
            if (!back) throw std::logic_error("factor_residue: coefficient outside the base field");
            coeffs.push_back(*back);
        }
        factors.emplace_back(field, coeffs);
    }
    if (!(product(field, factors) == Poly::binomial(static_cast<int>(n), lambda_bar)))
        throw std::logic_error("factor_residue: product identity failed");
    return {std::move(partition), std::move(root), std::move(factors)};
}

std::vector<Poly> factor_residue(const RingPtr& field, const FieldElement& lambda_bar, int64_t n) {
    return factor_residue_detailed(field, lambda_bar, n).factors;
}

Factorization::Factorization(RingElement lambda, int64_t n, ResidueFactorization residue, std::vector<Poly> factors)
    : lambda_(std::move(lambda)), n_(n), residue_(std::move(residue)), factors_(std::move(factors)) {}

std::vector<int> Factorization::degrees() const {
    std::vector<int> out;
    for (const auto& f : factors_) out.push_back(f.degree());
    return out;
}

Poly Factorization::phi_subset(const std::vector<int>& indices) const {
    Poly out = Poly::constant(base()->one());
    for (int i : indices) {
        if (i < 0 || i >= m()) throw PreconditionError("factor index " + std::to_string(i) + " out of range");
        out *= factors_[static_cast<size_t>(i)];
    }
    return out;
}

Poly Factorization::phi_hat(const std::vector<int>& indices) const {
    std::vector<bool> in(static_cast<size_t>(m()), false);
    for (int i : indices) {
        if (i < 0 || i >= m()) throw PreconditionError("factor index " + std::to_string(i) + " out of range");
        in[static_cast<size_t>(i)] = true;
    }
    Poly out = Poly::constant(base()->one());
    for (int i = 0; i < m(); ++i)
        if (!in[static_cast<size_t>(i)]) out *= factors_[static_cast<size_t>(i)];
    return out;
}

bool Factorization::verify() const {
    if (!(product(base(), factors_) == modulus())) return false;
    const auto& cosets = partition().cosets;
    if (cosets.size() != factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (!factors_[i].is_monic() || factors_[i].degree() != static_cast<int>(cosets[i].size())) return false;
        if (!(residue(factors_[i]) == residue_.factors[i])) return false;
        for (size_t j = i + 1; j < factors_.size(); ++j)
            if (extended_gcd(residue_.factors[i], residue_.factors[j]).gcd.degree() != 0) return false;
    }
    return true;
}

Factorization factor_over_ring(const RingElement& lambda, int64_t n) {
    const RingPtr& ring = lambda.ring();
    if (n < 1) throw PreconditionError("factor_over_ring: n must be >= 1");
    if (std::gcd(n, ring->p()) != 1) throw PreconditionError("factor_over_ring: gcd(n, p) != 1");
    if (!is_unit(lambda)) throw PreconditionError("factor_over_ring: lambda = " + lambda.to_string() + " is not a unit");
    const RingPtr field = ring->residue_field();
    ResidueFactorization res = factor_residue_detailed(field, residue(lambda), n);
    std::vector<Poly> lifted = hensel_lift(Poly::binomial(static_cast<int>(n), lambda), res.factors);
    return Factorization(lambda, n, std::move(res), std::move(lifted));
}

}  // namespace chaincodes
