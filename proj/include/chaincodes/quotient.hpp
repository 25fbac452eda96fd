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

#ifndef CHAINCODES_QUOTIENT_HPP
#define CHAINCODES_QUOTIENT_HPP

#include <string>
#include <vector>

#include "chaincodes/poly.hpp"

namespace chaincodes {

class QuotientElement;

/// R[X] / <X^n - lambda> for a unit lambda of R.
class QuotientRing {
   public:
    QuotientRing(RingElement lambda, int n);

    const RingPtr& base() const { return lambda_.ring(); }
    int n() const { return n_; }
    const RingElement& lambda() const { return lambda_; }
    /// X^n - lambda.
    Poly modulus() const { return Poly::binomial(n_, lambda_); }

    /// Reduces f by folding X^{i+n} into lambda X^i.
    QuotientElement element(const Poly& f) const;
    /// The word (a_0, ..., a_{n-1}) as a_0 + a_1 X + ... .
    QuotientElement from_word(const std::vector<RingElement>& word) const;
    QuotientElement zero() const;
    QuotientElement one() const;
    /// The class of X.
    QuotientElement x() const;

    std::string to_string() const;
    friend bool operator==(const QuotientRing& a, const QuotientRing& b);

   private:
    RingElement lambda_;
    int n_;
};

class QuotientElement {
   public:
    const QuotientRing& ring() const { return ring_; }
    /// Representative of degree < n.
    const Poly& rep() const { return rep_; }
    /// Coefficient vector of length n.
    std::vector<RingElement> word() const;
    int weight() const { return rep_.weight(); }
    bool is_zero() const { return rep_.is_zero(); }
    std::string to_string() const { return rep_.to_string(); }

    QuotientElement operator-() const;
    QuotientElement& operator+=(const QuotientElement& o);
    QuotientElement& operator-=(const QuotientElement& o);
    QuotientElement& operator*=(const QuotientElement& o);
    QuotientElement& operator*=(const RingElement& c);
    friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
    friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
    friend QuotientElement operator*(QuotientElement a, const QuotientElement& b) { return a *= b; }
    friend QuotientElement operator*(QuotientElement a, const RingElement& c) { return a *= c; }
    friend QuotientElement operator*(const RingElement& c, QuotientElement a) { return a *= c; }
    friend bool operator==(const QuotientElement& a, const QuotientElement& b);

   private:
    friend class QuotientRing;
    QuotientElement(QuotientRing ring, Poly rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    QuotientRing ring_;
    Poly rep_;
};

/// Product in R[X]/<X^n - lambda>; throws PreconditionError on a modulus mismatch.
QuotientElement mulmod(const QuotientElement& a, const QuotientElement& b);

}  // namespace chaincodes

#endif
