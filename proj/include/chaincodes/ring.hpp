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

#ifndef CHAINCODES_RING_HPP
#define CHAINCODES_RING_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaincodes/number_theory.hpp"

namespace chaincodes {

/*
 * Finite chain rings from the two families that are determined by their
 * invariants:
 *
 *   GaloisRing            GR(p^s, r) = Z_{p^s}[x]/<h(x)>,   uniformizer p, ell = s
 *   TruncatedPowerSeries  GF(p^r)[u]/<u^ell>,               uniformizer u, s = 1
 *
 * A finite field GF(p^r) is the Galois ring GR(p, r) (ell = 1), so fields and
 * their extensions share the element type with the chain rings.
 *
 * Elements are stored as flat coefficient vectors indexed by (b, i) -> b*r + i,
 * the coefficient of u^b x^i; b only ranges over 0 for Galois rings. Every
 * coefficient lives in [0, p^s).
 */

enum class Family { GaloisRing, TruncatedPowerSeries };

struct ChainRingSpec {
    Family family = Family::GaloisRing;
    int64_t p = 2;
    int r = 1;
    int s = 1;
    int ell = 1;
    /// Ascending coefficients of the monic degree-r polynomial h(x). Over
    /// Z_{p^s} for Galois rings, over GF(p) for truncated power series.
    std::vector<int64_t> modulus;

    /// GR(p^s, r); an empty modulus selects default_modulus(p, r).
    static ChainRingSpec galois_ring(int64_t p, int s, int r, std::vector<int64_t> modulus = {});
    /// GF(p^r)[u]/<u^ell>.
    static ChainRingSpec truncated_power_series(int64_t p, int r, int ell, std::vector<int64_t> modulus = {});
    /// GF(p^r), represented as GR(p, r).
    static ChainRingSpec galois_field(int64_t p, int r, std::vector<int64_t> modulus = {});

    /// Accepts `GR(p^s,r)`, `FPS(q,l)` and `GF(q)`; an optional trailing
    /// `,[h0,h1,...,1]` overrides the modulus.
    static ChainRingSpec parse(std::string_view input);

    /// Exponent k with p in J^k \ J^{k+1}: 1 for Galois rings, ell otherwise.
    int k() const { return family == Family::GaloisRing ? 1 : ell; }
    int64_t characteristic() const;
    /// |R / J(R)| = p^r.
    int64_t residue_size() const;
    std::string to_string() const;

    /// Throws PreconditionError when an invariant fails.
    void validate() const;

    bool operator==(const ChainRingSpec&) const = default;
};

/// Smallest monic irreducible polynomial of degree r over GF(p), ordering
/// candidates by the integer sum_{i<r} c_i p^i of their lower coefficients.
std::vector<int64_t> default_modulus(int64_t p, int r);

/// Irreducibility of a monic polynomial over GF(p) (Ben-Or test).
bool is_irreducible_mod_p(std::span<const int64_t> f, int64_t p);

class ChainRing;
class RingElement;
using RingPtr = std::shared_ptr<const ChainRing>;
/// Elements of a residue field or extension field are ring elements of an
/// ell = 1 ring.
using FieldElement = RingElement;

class ChainRing : public std::enable_shared_from_this<ChainRing> {
   public:
    static RingPtr make(const ChainRingSpec& spec);

    const ChainRingSpec& spec() const { return spec_; }
    int width() const { return width_; }
    /// Number of u-blocks (ell for truncated power series, 1 otherwise).
    int blocks() const { return blocks_; }
    /// p^s: every stored coefficient is a residue modulo this.
    int64_t coefficient_modulus() const { return m_; }
    bool is_field() const { return spec_.ell == 1; }
    int ell() const { return spec_.ell; }
    int64_t p() const { return spec_.p; }
    int64_t residue_size() const { return q_; }
    /// |R| = q^ell.
    BigInt size() const;

    /// GF(p^r) as GR(p, r) with the modulus reduced mod p; self for GR fields.
    RingPtr residue_field() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(int64_t v) const;
    RingElement element(std::vector<int64_t> coeffs) const;
    RingElement uniformizer() const;
    /// The class of x, generating R over its prime subring (with u).
    RingElement generator() const;

    /// Additive generators (g, order) of a transversal of R / R pi^depth:
    /// sum_k a_k g_k with 0 <= a_k < order_k runs over every class exactly once.
    std::vector<std::pair<RingElement, int64_t>> transversal_digits(int depth) const;

    // Raw arithmetic over canonical coefficient spans of length width().
    void add(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> out) const;
    void sub(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> out) const;
    void neg(std::span<const int64_t> a, std::span<int64_t> out) const;
    void mul(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> out) const;
    /// acc += a * b.
    void mul_add(std::span<const int64_t> a, std::span<const int64_t> b, std::span<int64_t> acc) const;
    bool is_zero(std::span<const int64_t> a) const;
    int valuation(std::span<const int64_t> a) const;
    /// Mixed-radix integer code of an element, in [0, |R|) when that fits.
    uint64_t encode(std::span<const int64_t> a) const;

    /// Human form: a bare integer for width-1 rings, otherwise `[c0,c1,...]`.
    std::string format(std::span<const int64_t> a) const;

    explicit ChainRing(ChainRingSpec spec);

   private:
    ChainRingSpec spec_;
    int width_;
    int blocks_;
    int64_t m_;  // p^s
    int64_t q_;  // p^r
    RingPtr residue_;
};

/// True when the rings are the same object or have equal specs.
bool same_ring(const ChainRing& a, const ChainRing& b);

class RingElement {
   public:
    /// Reduces every coefficient into [0, p^s); pads to the ring width.
    RingElement(RingPtr ring, std::vector<int64_t> coeffs);

    const RingPtr& ring() const { return ring_; }
    std::span<const int64_t> coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;
    uint64_t encode() const { return ring_->encode(coeffs_); }
    std::string to_string() const { return ring_->format(coeffs_); }

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend bool operator==(const RingElement& a, const RingElement& b);

   private:
    RingPtr ring_;
    std::vector<int64_t> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Throws PreconditionError if a and b live in different rings. For Neg, b is
/// only checked for ring agreement.
RingElement ring_arith(const RingElement& a, const RingElement& b, ArithOp op);

RingElement pow(const RingElement& a, uint64_t e);

/// Units are exactly the elements with nonzero residue.
bool is_unit(const RingElement& a);

/// Field inverse of the residue lifted and refined by Newton steps x <- x(2 - ax).
RingElement invert_unit(const RingElement& a);

/// Largest v with a in R pi^v; the zero element has valuation ell.
int valuation(const RingElement& a);

/// Image in the residue field R/J(R).
FieldElement residue(const RingElement& a);

/// Coefficient-wise (non-Teichmuller) lift of a residue-field element into R.
RingElement lift(const RingPtr& ring, const FieldElement& x);

/// Least t >= 1 with a^t = 1, by direct power iteration.
int64_t unit_order(const RingElement& a);

}  // namespace chaincodes

#endif
