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

#ifndef CHAINCODES_CODE_HPP
#define CHAINCODES_CODE_HPP

#include <cstdint>
#include <iterator>
#include <memory>
#include <vector>

#include "chaincodes/factor.hpp"
#include "chaincodes/quotient.hpp"

namespace chaincodes {

using FactorizationPtr = std::shared_ptr<const Factorization>;

/// Factor indices are 0-based throughout the library.
struct GeneratorTower {
    /// I_v = {i : e_i <= v} for v = 0 .. ell-1.
    std::vector<std::vector<int>> index_sets;
    /// g_v = prod_{i not in I_v} phi_i.
    std::vector<Poly> polys;
};

enum class Membership { Crt, Check };
enum class WeightStrategy { Direct, Residue };

inline constexpr uint64_t kDefaultBudget = 1'000'000;

/// Visits every word of the R-span of the given generators, where generator k
/// is added with multiplicity 0 .. order_k - 1 and order_k * generator_k = 0.
/// The visitor receives the flat coefficient vector of each word.
class WordOdometer {
   public:
    WordOdometer(RingPtr ring, int n, std::vector<std::vector<int64_t>> generators, std::vector<int64_t> orders);
    const RingPtr& ring() const { return ring_; }
    /// Total number of words (saturating at UINT64_MAX).
    uint64_t count() const;
    template <typename Visit>
    void run(Visit&& visit) const;

   private:
    RingPtr ring_;
    int n_;
    std::vector<std::vector<int64_t>> gens_;
    std::vector<int64_t> orders_;
};

/// The ideal of R[X]/<X^n - lambda> with CRT components R pi^{e_i} phi-hat_i.
class ConstacyclicCode {
   public:
    /// Requires 0 <= e_i <= ell and one exponent per factor.
    static ConstacyclicCode from_exponents(FactorizationPtr fact, std::vector<int> exponents);

    const Factorization& factorization() const { return *fact_; }
    const FactorizationPtr& factorization_ptr() const { return fact_; }
    const std::vector<int>& exponents() const { return e_; }
    int ell() const { return fact_->base()->ell(); }
    QuotientRing ambient() const;

    bool is_zero_code() const;
    bool is_whole_ring() const;
    /// p^{r sum_i d_i (ell - e_i)}.
    BigInt cardinality() const;
    /// log_q |C| = sum_i d_i (ell - e_i).
    int64_t log_size() const;

    GeneratorTower generator_tower() const;
    /// G = g_0 + pi g_1 + ... + pi^{ell-1} g_{ell-1}.
    QuotientElement canonical_generator() const;
    /// G with the repeated levels pi^v g_v (g_v = g_{v-1}) left out; still a
    /// generator, and 1 for the whole ring.
    QuotientElement reduced_generator() const;
    /// h_v = phi_{I_{ell-1-v}}.
    std::vector<Poly> check_tower() const;
    /// H = sum_v pi^v h_v; f is in C iff f H = 0.
    QuotientElement check_polynomial() const;

    bool contains(const QuotientElement& f, Membership method = Membership::Crt) const;
    QuotientElement encode(const Poly& message) const;
    /// The code with exponents ell - e_i.
    ConstacyclicCode annihilator() const;

    /// Union of the cosets Q_i with e_i = ell, sorted.
    std::vector<int64_t> residue_zero_set() const;
    /// d + 1 for the longest run 1+tk, 1+t(k+1), ... inside the residue zero
    /// set, k taken modulo n when wrap is set. Throws on the zero code.
    int64_t bch_bound(bool wrap = true) const;

    /// Exact minimum Hamming weight. Throws PreconditionError on the zero code
    /// and BudgetExceeded when the enumeration exceeds budget words.
    int min_weight_exact(WeightStrategy strategy = WeightStrategy::Residue, uint64_t budget = kDefaultBudget) const;
    /// Direct: every word of C, each exactly once. Residue: every word of the
    /// residue-field code generated by residue(g_{ell-1}).
    WordOdometer words(WeightStrategy strategy = WeightStrategy::Direct) const;

    friend bool operator==(const ConstacyclicCode& a, const ConstacyclicCode& b) {
        return a.fact_ == b.fact_ && a.e_ == b.e_;
    }

   private:
    ConstacyclicCode(FactorizationPtr fact, std::vector<int> e) : fact_(std::move(fact)), e_(std::move(e)) {}

    FactorizationPtr fact_;
    std::vector<int> e_;
};

/// Valuation of f modulo phi_i: the least pi-valuation among the coefficients
/// of the remainder (ell if it vanishes).
int component_valuation(const Poly& f, const Poly& phi);

/// The exponent vector of the ideal generated by G.
std::vector<int> exponents_from_generator(const Factorization& fact, const QuotientElement& g);

/// Orthogonal idempotents iota_i with sum 1 and iota_i R = R phi-hat_i.
std::vector<QuotientElement> idempotents(const Factorization& fact);

/// Iterates all (ell+1)^m codes of a factorization in lexicographic exponent order.
class CodeRange {
   public:
    class iterator {
       public:
        using value_type = ConstacyclicCode;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        ConstacyclicCode operator*() const;
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || e_ == o.e_); }

       private:
        friend class CodeRange;
        FactorizationPtr fact_;
        std::vector<int> e_;
        bool done_ = true;
    };

    explicit CodeRange(FactorizationPtr fact) : fact_(std::move(fact)) {}
    iterator begin() const;
    iterator end() const { return {}; }
    uint64_t size() const;

   private:
    FactorizationPtr fact_;
};

/// Throws BudgetExceeded when (ell+1)^m exceeds budget.
CodeRange enumerate_codes(FactorizationPtr fact, uint64_t budget = kDefaultBudget);

template <typename Visit>
void WordOdometer::run(Visit&& visit) const {
    const auto w = static_cast<size_t>(ring_->width());
    std::vector<int64_t> word(static_cast<size_t>(n_) * w, 0);
    std::vector<int64_t> digits(gens_.size(), 0);
    auto add = [&](const std::vector<int64_t>& g) {
        for (size_t i = 0; i < word.size(); i += w)
            ring_->add(std::span<const int64_t>(word).subspan(i, w), std::span<const int64_t>(g).subspan(i, w),
                       std::span<int64_t>(word).subspan(i, w));
    };
    for (;;) {
        visit(static_cast<const std::vector<int64_t>&>(word));
        size_t k = 0;
        for (; k < gens_.size(); ++k) {
            // Adding generator k once more; at its order the sum wraps to zero.
            add(gens_[k]);
            if (++digits[k] < orders_[k]) break;
            digits[k] = 0;
        }
        if (k == gens_.size()) return;
    }
}

}  // namespace chaincodes

#endif
