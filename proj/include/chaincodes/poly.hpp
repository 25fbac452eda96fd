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

#ifndef CHAINCODES_POLY_HPP
#define CHAINCODES_POLY_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chaincodes/ring.hpp"

namespace chaincodes {

/// Parses `17`, `-3` or `[c0,c1,...]` into an element of ring.
RingElement parse_element(const RingPtr& ring, std::string_view text);

/// Dense univariate polynomial over a chain ring (or field). Coefficients are
/// kept flat, ascending, with no trailing zero coefficients.
class Poly {
   public:
    explicit Poly(RingPtr ring);
    Poly(RingPtr ring, const std::vector<RingElement>& coeffs);

    /// Each integer becomes the constant ring element of that value.
    static Poly from_ints(const RingPtr& ring, const std::vector<int64_t>& coeffs);
    static Poly constant(const RingElement& c);
    static Poly monomial(const RingElement& c, int degree);
    /// X^n - lambda.
    static Poly binomial(int n, const RingElement& lambda);
    /// Accepts `c0 + c1*X + c2*X^2 - ...` (terms in any order, `*` optional)
    /// and the list form `[c0,c1,...]`; coefficients are integers or `[..]`.
    static Poly parse(const RingPtr& ring, std::string_view text);
    /// Wraps a flat coefficient vector (width() entries per coefficient, each
    /// already in canonical range).
    static Poly from_raw(RingPtr ring, std::vector<int64_t> flat);

    const RingPtr& ring() const { return ring_; }
    int degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    RingElement coeff(int i) const;
    RingElement leading() const;
    std::vector<RingElement> coefficients() const;
    std::span<const int64_t> raw() const { return c_; }
    /// Number of nonzero coefficients.
    int weight() const;
    /// Human form with canonical residues, e.g. `2 + 18*X + 6*X^2 + X^3`.
    std::string to_string() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const RingElement& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const RingElement& c) { return a *= c; }
    friend Poly operator*(const RingElement& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    /// this * X^k.
    Poly shifted(int k) const;
    RingElement evaluate(const RingElement& x) const;

   private:
    void normalize();

    RingPtr ring_;
    std::vector<int64_t> c_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& f, const Poly& g, PolyOp op);

/// Coefficient-wise residue into F[X].
Poly residue(const Poly& f);
/// Coefficient-wise naive lift from F[X] into R[X].
Poly lift(const RingPtr& ring, const Poly& f);
/// Applies fn to every coefficient, producing a polynomial over target.
Poly map_coefficients(const Poly& f, const RingPtr& target, const std::function<RingElement(const RingElement&)>& fn);

Poly product(const RingPtr& ring, std::span<const Poly> factors);

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// f = q g + r with deg r < deg g. Throws PreconditionError unless g is monic.
DivMod divmod_monic(const Poly& f, const Poly& g);
/// As divmod_monic but for any divisor whose leading coefficient is a unit.
DivMod divmod(const Poly& f, const Poly& g);

struct ExtendedGcd {
    Poly gcd;  // monic, or zero when both inputs are zero
    Poly a;
    Poly b;
};

/// a f + b g = gcd over a field.
ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

struct Bezout {
    Poly a;
    Poly b;
};

/// a f + b g = 1 exactly in R[X]. The residues of f and g must be coprime;
/// the field identity is lifted by multiplying with 1 + e + ... + e^{ell-1}
/// where e = 1 - (a0 f + b0 g) lies in pi R[X].
Bezout bezout_coprime(const Poly& f, const Poly& g);

/// Lifts a factorization of residue(f) into pairwise coprime monic factors
/// over F to the unique monic factorization of f over R.
std::vector<Poly> hensel_lift(const Poly& f, const std::vector<Poly>& residue_factors);

}  // namespace chaincodes

#endif
