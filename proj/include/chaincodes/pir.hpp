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

#ifndef CHAINCODES_PIR_HPP
#define CHAINCODES_PIR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaincodes/code.hpp"

namespace chaincodes {

/// R = R_1 + ... + R_k, a finite PIR written as a product of chain rings.
struct PirSpec {
    std::vector<ChainRingSpec> components;

    /// `GR(25,1)+FPS(4,1)`; a single chain ring is a one-component PIR.
    static PirSpec parse(std::string_view input);
    /// lcm of the component characteristics.
    int64_t characteristic() const;
    std::vector<RingPtr> rings() const;
    std::string to_string() const;
};

/// One lambda per component: `4,1` or `[1,2],3`.
std::vector<RingElement> parse_lambdas(const std::vector<RingPtr>& rings, std::string_view text);

struct ComponentInstance {
    RingPtr ring;
    RingElement lambda;
    int64_t n;
};

/// R[X]/<X^n - lambda> = sum_i R_i[X]/<X^n - lambda_i>.
std::vector<ComponentInstance> decompose_quotient(const PirSpec& spec, int64_t n, const std::vector<RingElement>& lambdas);

/// A code of the PIR quotient, given by one constacyclic code per component.
class PirCode {
   public:
    explicit PirCode(std::vector<ConstacyclicCode> components);
    static PirCode from_exponents(const std::vector<FactorizationPtr>& facts, const std::vector<std::vector<int>>& exponents);

    const std::vector<ConstacyclicCode>& components() const { return components_; }
    BigInt cardinality() const;
    bool contains(const std::vector<QuotientElement>& word, Membership method = Membership::Crt) const;
    /// (G_1, ..., G_k); their sum generates the code in the product ring.
    std::vector<QuotientElement> canonical_generator() const;
    /// Throws PreconditionError when every component is the zero code.
    int min_weight_exact(WeightStrategy strategy = WeightStrategy::Residue, uint64_t budget = kDefaultBudget) const;

   private:
    std::vector<ConstacyclicCode> components_;
};

enum class Verdict { Principal, NotPrincipal, Unknown };
std::string to_string(Verdict v);

struct ComponentCertificate {
    ChainRingSpec spec;
    int ell = 1;
    int64_t characteristic = 1;
    int64_t gcd_n_char = 1;
    /// min{ell_i, gcd(n, char R_i)} = 1.
    bool criterion = true;
    int64_t lambda_order = 1;
};

struct PrincipalityReport {
    Verdict verdict = Verdict::Unknown;
    /// ord of lambda in R^x (lcm of the component orders).
    int64_t lambda_order = 1;
    /// gcd(n, ord lambda) = 1: the criterion is then necessary as well as sufficient.
    bool exact = false;
    std::vector<ComponentCertificate> components;
    std::string reason;
};

/// Principal when every component satisfies min{ell_i, gcd(n, char R_i)} = 1;
/// otherwise NotPrincipal if gcd(n, ord lambda) = 1 and Unknown if not.
PrincipalityReport is_principal_quotient(const PirSpec& spec, int64_t n, const std::vector<RingElement>& lambdas);

/// f(X) -> f(lambda^alpha X) from R[X]/<X^n - lambda> onto R[X]/<X^n - 1>,
/// where n alpha + t beta = 1 and t = ord lambda.
struct Isometry {
    int64_t n = 1;
    int64_t t = 1;
    int64_t alpha = 0;
    int64_t beta = 0;
    std::vector<RingElement> lambdas;
    /// lambda_i^alpha.
    std::vector<RingElement> scalings;

    QuotientElement apply(const QuotientElement& f, size_t component = 0) const;
};

/// Throws PreconditionError unless gcd(n, t) = 1.
Isometry make_isometry(const std::vector<RingElement>& lambdas, int64_t n);
QuotientElement isometry_map(const QuotientElement& f);

struct ChainQuotientReport {
    bool is_chain = false;
    /// Least N with (X - lambda)^N = 0, if pi is nilpotent.
    std::optional<int> nilpotency;
    /// u with (X - lambda)^n = p u and u a unit, when one exists.
    std::optional<QuotientElement> eisenstein_unit;
    /// (X - lambda)^n.
    std::optional<QuotientElement> pi_power_n;
    /// valuation of lambda^n - lambda in R; R[X]/<X^n - lambda, X - lambda> = R/<lambda^n - lambda>.
    int residue_valuation = 0;
    std::string reason;
};

/// Exact check that GR(p^s, r)[X]/<X^n - lambda> is a chain ring with
/// uniformizer X - lambda.
ChainQuotientReport verify_chain_quotient(const RingElement& lambda, int64_t n);

/// Explicit tables for a quotient ring R[X]/<f> with f monic, up to 4096 elements.
/// Element 0 is zero; elements are indexed by the mixed-radix code of their
/// coefficient vector.
class SmallRingTable {
   public:
    static constexpr size_t kMaxElements = 4096;

    /// Throws BudgetExceeded above kMaxElements.
    static SmallRingTable from_quotient(const Poly& modulus);
    /// `Z4[X]/(X^2-1)`, `GF(5)[X]/(X)`, `GR(9,2)[X]/(X^2+1)`.
    static SmallRingTable parse(std::string_view input);

    int size() const { return size_; }
    int add(int a, int b) const { return add_[static_cast<size_t>(a) * size_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * size_ + b]; }
    int one() const { return one_; }
    Poly element(int a) const;
    std::string label(int a) const { return element(a).to_string(); }
    int index_of(const Poly& f) const;
    const Poly& modulus() const { return modulus_; }
    std::string description() const;

   private:
    SmallRingTable(Poly modulus, int size);

    Poly modulus_;
    int size_;
    int one_ = 0;
    std::vector<uint16_t> add_;
    std::vector<uint16_t> mul_;
};

struct LatticeIdeal {
    /// Sorted element indices.
    std::vector<int> elements;
    /// Generators found for it (one when principal).
    std::vector<int> generators;
    bool principal = false;
};

struct IdealLattice {
    std::vector<LatticeIdeal> ideals;  // sorted by size, then elements
    bool principal = true;
    bool chain = true;
    bool local = true;
    /// First non-principal ideal, if any.
    std::optional<size_t> witness;
};

/// The ideal generated by the given elements.
std::vector<int> ideal_generated(const SmallRingTable& table, const std::vector<int>& generators);

/// All ideals: principal ideals closed under pairwise sums until a fixed point.
IdealLattice brute_ideal_lattice(const SmallRingTable& table);

}  // namespace chaincodes

#endif
