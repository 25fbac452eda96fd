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

#ifndef CHAINCODES_FIELD_HPP
#define CHAINCODES_FIELD_HPP

#include <cstdint>
#include <optional>

#include "chaincodes/ring.hpp"

namespace chaincodes {

/// GF(p^{r d}) for a field F = GF(p^r), with its own default modulus.
/// Returns F itself when d = 1.
RingPtr extension_field(const RingPtr& field, int d);

/// A field homomorphism F -> E fixing GF(p), determined by the image of the
/// class of x (a root of F's modulus in E).
class FieldEmbedding {
   public:
    /// Picks the root of F's modulus in E with the smallest integer code.
    /// Throws PreconditionError if F does not embed in E.
    FieldEmbedding(RingPtr from, RingPtr to);

    const RingPtr& source() const { return from_; }
    const RingPtr& target() const { return to_; }
    const FieldElement& generator_image() const { return image_; }

    FieldElement apply(const FieldElement& x) const;
    /// The unique preimage of y, if y lies in the image.
    std::optional<FieldElement> preimage(const FieldElement& y) const;

   private:
    RingPtr from_;
    RingPtr to_;
    FieldElement image_;
};

/// Smallest-code element generating the multiplicative group of a field.
FieldElement primitive_element(const RingPtr& field);

/// ord(x) for x != 0 in a field, computed from the factorization of |F^x|.
int64_t field_order(const FieldElement& x);

struct PrimaryRoot {
    int64_t t = 1;           // multiplicative order of lambda-bar
    int64_t tn = 1;          // t * n
    int degree = 1;          // [F~ : F] = ord_{tn}(q)
    RingPtr extension;       // F~ = GF(q^degree)
    FieldEmbedding embedding;  // F -> F~
    FieldElement xi;         // primitive tn-th root of unity with xi^n = lambda-bar
};

/// Searches the cyclic subgroup of order tn of F~ for the primitive tn-th roots
/// xi with xi^n = lambda-bar and returns the one with the smallest integer code.
/// Requires gcd(n, p) = 1 and lambda-bar != 0.
PrimaryRoot find_primary_root(const RingPtr& field, const FieldElement& lambda_bar, int64_t n);

}  // namespace chaincodes

#endif
