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

#ifndef CHAINCODES_FACTOR_HPP
#define CHAINCODES_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "chaincodes/field.hpp"
#include "chaincodes/poly.hpp"

namespace chaincodes {

/// The q-cosets of {1, 1 + t, ..., 1 + (n-1)t} modulo tn. Each coset is sorted
/// and the cosets are ordered by their smallest element.
struct CosetPartition {
    int64_t q = 0;
    int64_t t = 1;
    int64_t n = 1;
    int64_t tn = 1;
    std::vector<std::vector<int64_t>> cosets;

    int size() const { return static_cast<int>(cosets.size()); }
    /// Index of the coset containing j (j taken mod tn), or -1.
    int index_of(int64_t j) const;
};

/// Requires gcd(q, tn) = 1.
CosetPartition coset_partition(int64_t q, int64_t t, int64_t n);
/// t is the order of lambda-bar; requires gcd(n, p) = 1.
CosetPartition coset_partition(const FieldElement& lambda_bar, int64_t n);

struct ResidueFactorization {
    CosetPartition partition;
    PrimaryRoot root;
    /// phi-bar_i = prod_{j in Q_i} (X - xi^j), monic irreducible over F.
    std::vector<Poly> factors;
};

/// Irreducible factors of X^n - lambda-bar over F, computed as orbit products
/// in the extension and pulled back to F after a Frobenius-fixed check.
ResidueFactorization factor_residue_detailed(const RingPtr& field, const FieldElement& lambda_bar, int64_t n);
std::vector<Poly> factor_residue(const RingPtr& field, const FieldElement& lambda_bar, int64_t n);

/// X^n - lambda = phi_1 ... phi_m over R with monic basic irreducible,
/// pairwise coprime phi_i; phi_i lifts the factor of coset Q_i.
class Factorization {
   public:
    Factorization(RingElement lambda, int64_t n, ResidueFactorization residue, std::vector<Poly> factors);

    const RingPtr& base() const { return lambda_.ring(); }
    const RingElement& lambda() const { return lambda_; }
    int64_t n() const { return n_; }
    const CosetPartition& partition() const { return residue_.partition; }
    const PrimaryRoot& root() const { return residue_.root; }
    const std::vector<Poly>& residue_factors() const { return residue_.factors; }
    const std::vector<Poly>& factors() const { return factors_; }
    int m() const { return static_cast<int>(factors_.size()); }
    int degree(int i) const { return factors_.at(static_cast<size_t>(i)).degree(); }
    std::vector<int> degrees() const;

    /// X^n - lambda.
    Poly modulus() const { return Poly::binomial(static_cast<int>(n_), lambda_); }
    /// prod_{i in indices} phi_i (1 for the empty set).
    Poly phi_subset(const std::vector<int>& indices) const;
    /// prod_{i not in indices} phi_i.
    Poly phi_hat(const std::vector<int>& indices) const;

    /// Re-checks the product identity, degrees and pairwise coprimality.
    bool verify() const;

   private:
    RingElement lambda_;
    int64_t n_;
    ResidueFactorization residue_;
    std::vector<Poly> factors_;
};

/// Requires gcd(n, p) = 1 and lambda a unit.
Factorization factor_over_ring(const RingElement& lambda, int64_t n);

}  // namespace chaincodes

#endif
