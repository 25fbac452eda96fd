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

#include "chaincodes/code.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "chaincodes/errors.hpp"

namespace chaincodes {

namespace {

uint64_t saturating_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) return std::numeric_limits<uint64_t>::max();
    return a * b;
}

// Flat length-n coefficient vector of a polynomial of degree < n.
std::vector<int64_t> flat_word(const Poly& f, int n) {
    const auto w = static_cast<size_t>(f.ring()->width());
    std::vector<int64_t> out(static_cast<size_t>(n) * w, 0);
    std::copy(f.raw().begin(), f.raw().end(), out.begin());
    return out;
}

int word_weight(const RingPtr& ring, const std::vector<int64_t>& word) {
    const auto w = static_cast<size_t>(ring->width());
    int count = 0;
    for (size_t i = 0; i < word.size(); i += w)
        if (!ring->is_zero(std::span<const int64_t>(word).subspan(i, w))) ++count;
    return count;
}

int min_weight_over(const WordOdometer& odo, const RingPtr& ring, uint64_t budget) {
    const uint64_t count = odo.count();
    if (count > budget)
        throw BudgetExceeded("min_weight_exact: " + std::to_string(count) + " codewords exceed the budget of " + std::to_string(budget));
    int best = std::numeric_limits<int>::max();
    odo.run([&](const std::vector<int64_t>& word) {
        const int wt = word_weight(ring, word);
        if (wt > 0) best = std::min(best, wt);
    });
    if (best == std::numeric_limits<int>::max()) throw std::logic_error("min_weight_exact: no nonzero codeword");
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConstacyclicCode

ConstacyclicCode ConstacyclicCode::from_exponents(FactorizationPtr fact, std::vector<int> exponents) {
    if (!fact) throw PreconditionError("from_exponents: missing factorization");
    if (exponents.size() != static_cast<size_t>(fact->m()))
        throw PreconditionError("from_exponents: expected " + std::to_string(fact->m()) + " exponents, got " +
                                std::to_string(exponents.size()));
    const int ell = fact->base()->ell();
    for (int e : exponents)
        if (e < 0 || e > ell) throw PreconditionError("from_exponents: exponent " + std::to_string(e) + " outside [0, " + std::to_string(ell) + "]");
    return ConstacyclicCode(std::move(fact), std::move(exponents));
}

QuotientRing ConstacyclicCode::ambient() const { return QuotientRing(fact_->lambda(), static_cast<int>(fact_->n())); }

bool ConstacyclicCode::is_zero_code() const {
    return std::all_of(e_.begin(), e_.end(), [&](int e) { return e == ell(); });
}

bool ConstacyclicCode::is_whole_ring() const {
    return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

int64_t ConstacyclicCode::log_size() const {
    int64_t total = 0;
    for (int i = 0; i < fact_->m(); ++i) total += int64_t{fact_->degree(i)} * (ell() - e_[static_cast<size_t>(i)]);
    return total;
}

BigInt ConstacyclicCode::cardinality() const {
    BigInt out = 1;
    const BigInt q = fact_->base()->residue_size();
    for (int64_t k = 0; k < log_size(); ++k) out *= q;
    return out;
}

GeneratorTower ConstacyclicCode::generator_tower() const {
    GeneratorTower tower;
    Poly previous = fact_->modulus();
    for (int v = 0; v < ell(); ++v) {
        std::vector<int> iv;
        for (int i = 0; i < fact_->m(); ++i)
            if (e_[static_cast<size_t>(i)] <= v) iv.push_back(i);
        Poly g = fact_->phi_hat(iv);
        if (!divmod_monic(previous, g).remainder.is_zero()) throw std::logic_error("generator_tower: divisibility chain broken");
        previous = g;
        tower.index_sets.push_back(std::move(iv));
        tower.polys.push_back(std::move(g));
    }
    return tower;
}

QuotientElement ConstacyclicCode::canonical_generator() const {
    const auto tower = generator_tower();
    const RingPtr& R = fact_->base();
    const QuotientRing Q = ambient();
    QuotientElement g = Q.zero();
    RingElement pi_v = R->one();
    for (const auto& gv : tower.polys) {
        g += Q.element(gv * pi_v);
        pi_v *= R->uniformizer();
    }
    return g;
}

QuotientElement ConstacyclicCode::reduced_generator() const {
    const auto tower = generator_tower();
    const RingPtr& R = fact_->base();
    const QuotientRing Q = ambient();
    QuotientElement g = Q.zero();
    RingElement pi_v = R->one();
    for (size_t v = 0; v < tower.polys.size(); ++v) {
        if (v == 0 || !(tower.polys[v] == tower.polys[v - 1])) g += Q.element(tower.polys[v] * pi_v);
        pi_v *= R->uniformizer();
    }
    return g;
}

std::vector<Poly> ConstacyclicCode::check_tower() const {
    const auto tower = generator_tower();
    std::vector<Poly> out;
    for (int v = 0; v < ell(); ++v) out.push_back(fact_->phi_subset(tower.index_sets[static_cast<size_t>(ell() - 1 - v)]));
    return out;
}

QuotientElement ConstacyclicCode::check_polynomial() const {
    const RingPtr& R = fact_->base();
    const QuotientRing Q = ambient();
    QuotientElement h = Q.zero();
    RingElement pi_v = R->one();
    for (const auto& hv : check_tower()) {
        h += Q.element(hv * pi_v);
        pi_v *= R->uniformizer();
    }
    return h;
}

bool ConstacyclicCode::contains(const QuotientElement& f, Membership method) const {
    if (!(f.ring() == ambient())) throw PreconditionError("contains: word from " + f.ring().to_string());
    if (method == Membership::Check) return mulmod(f, check_polynomial()).is_zero();
    for (int i = 0; i < fact_->m(); ++i)
        if (component_valuation(f.rep(), fact_->factors()[static_cast<size_t>(i)]) < e_[static_cast<size_t>(i)]) return false;
    return true;
}

QuotientElement ConstacyclicCode::encode(const Poly& message) const {
    const QuotientRing Q = ambient();
    return mulmod(Q.element(message), canonical_generator());
}

ConstacyclicCode ConstacyclicCode::annihilator() const {
    std::vector<int> e;
    for (int x : e_) e.push_back(ell() - x);
    return ConstacyclicCode(fact_, std::move(e));
}

std::vector<int64_t> ConstacyclicCode::residue_zero_set() const {
    std::vector<int64_t> q;
    const auto& cosets = fact_->partition().cosets;
    for (size_t i = 0; i < cosets.size(); ++i)
        if (e_[i] == ell()) q.insert(q.end(), cosets[i].begin(), cosets[i].end());
    std::sort(q.begin(), q.end());
    return q;
}

int64_t ConstacyclicCode::bch_bound(bool wrap) const {
    if (is_zero_code()) throw PreconditionError("bch_bound: the zero code has no minimum distance");
    const auto& part = fact_->partition();
    const int64_t n = part.n;
    const auto zeros = residue_zero_set();
    std::vector<bool> in(static_cast<size_t>(n), false);
    for (int64_t k = 0; k < n; ++k) in[static_cast<size_t>(k)] = std::binary_search(zeros.begin(), zeros.end(), (1 + part.t * k) % part.tn);
    int64_t best = 0;
    int64_t run = 0;
    const int64_t span = wrap ? 2 * n : n;
    for (int64_t k = 0; k < span; ++k) {
        run = in[static_cast<size_t>(k % n)] ? run + 1 : 0;
        best = std::max(best, std::min(run, n));
    }
    return best + 1;
}

int ConstacyclicCode::min_weight_exact(WeightStrategy strategy, uint64_t budget) const {
    if (is_zero_code()) throw PreconditionError("min_weight_exact: the zero code has no nonzero words");
    const WordOdometer odo = words(strategy);
    return min_weight_over(odo, odo.ring(), budget);
}

WordOdometer ConstacyclicCode::words(WeightStrategy strategy) const {
    const RingPtr& R = fact_->base();
    const int n = static_cast<int>(fact_->n());
    const auto tower = generator_tower();
    std::vector<std::vector<int64_t>> gens;
    std::vector<int64_t> orders;
    if (strategy == WeightStrategy::Residue) {
        const RingPtr F = R->residue_field();
        const Poly g = residue(tower.polys.back());
        for (int j = 0; j < n - g.degree(); ++j)
            for (const auto& [digit, order] : F->transversal_digits(1)) {
                gens.push_back(flat_word((g * digit).shifted(j), n));
                orders.push_back(order);
            }
        return WordOdometer(F, n, std::move(gens), std::move(orders));
    }
    // c = sum_v pi^v g_v a_v with deg a_v < deg g_{v-1} - deg g_v and the
    // coefficients of a_v running over R / R pi^{ell-v}.
    int previous_degree = n;
    RingElement pi_v = R->one();
    for (int v = 0; v < ell(); ++v) {
        const Poly& gv = tower.polys[static_cast<size_t>(v)];
        const Poly scaled = gv * pi_v;
        for (int j = 0; j < previous_degree - gv.degree(); ++j)
            for (const auto& [digit, order] : R->transversal_digits(ell() - v)) {
                gens.push_back(flat_word((scaled * digit).shifted(j), n));
                orders.push_back(order);
            }
        previous_degree = gv.degree();
        pi_v *= R->uniformizer();
    }
    return WordOdometer(R, n, std::move(gens), std::move(orders));
}

// ---------------------------------------------------------------------------

int component_valuation(const Poly& f, const Poly& phi) {
    const Poly rem = divmod_monic(f, phi).remainder;
    int v = f.ring()->ell();
    for (const auto& c : rem.coefficients()) v = std::min(v, valuation(c));
    return v;
}

std::vector<int> exponents_from_generator(const Factorization& fact, const QuotientElement& g) {
    std::vector<int> e;
    for (const auto& phi : fact.factors()) e.push_back(component_valuation(g.rep(), phi));
    return e;
}

std::vector<QuotientElement> idempotents(const Factorization& fact) {
    const QuotientRing Q(fact.lambda(), static_cast<int>(fact.n()));
    std::vector<QuotientElement> out;
    for (int i = 0; i < fact.m(); ++i) {
        std::vector<int> all_but_i;
        for (int j = 0; j < fact.m(); ++j)
            if (j != i) all_but_i.push_back(j);
        const Poly hat = fact.phi_subset(all_but_i);
        const auto [a, b] = bezout_coprime(hat, fact.factors()[static_cast<size_t>(i)]);
        out.push_back(Q.element(a * hat));
    }
    return out;
}

WordOdometer::WordOdometer(RingPtr ring, int n, std::vector<std::vector<int64_t>> generators, std::vector<int64_t> orders)
    : ring_(std::move(ring)), n_(n), gens_(std::move(generators)), orders_(std::move(orders)) {
    if (gens_.size() != orders_.size()) throw std::logic_error("WordOdometer: generator/order size mismatch");
    for (const auto& g : gens_)
        if (g.size() != static_cast<size_t>(n_ * ring_->width())) throw std::logic_error("WordOdometer: bad generator length");
}

uint64_t WordOdometer::count() const {
    uint64_t total = 1;
    for (int64_t o : orders_) total = saturating_mul(total, static_cast<uint64_t>(o));
    return total;
}

// ---------------------------------------------------------------------------
// Enumeration

ConstacyclicCode CodeRange::iterator::operator*() const { return ConstacyclicCode::from_exponents(fact_, e_); }

CodeRange::iterator& CodeRange::iterator::operator++() {
    const int ell = fact_->base()->ell();
    for (size_t i = e_.size(); i-- > 0;) {
        if (++e_[i] <= ell) return *this;
        e_[i] = 0;
    }
    done_ = true;
    return *this;
}

CodeRange::iterator CodeRange::begin() const {
    iterator it;
    it.fact_ = fact_;
    it.e_.assign(static_cast<size_t>(fact_->m()), 0);
    it.done_ = false;
    return it;
}

uint64_t CodeRange::size() const {
    uint64_t total = 1;
    for (int i = 0; i < fact_->m(); ++i) total = saturating_mul(total, static_cast<uint64_t>(fact_->base()->ell() + 1));
    return total;
}

CodeRange enumerate_codes(FactorizationPtr fact, uint64_t budget) {
    if (!fact) throw PreconditionError("enumerate_codes: missing factorization");
    CodeRange range(std::move(fact));
    if (range.size() > budget)
        throw BudgetExceeded("enumerate_codes: " + std::to_string(range.size()) + " codes exceed the budget of " + std::to_string(budget));
    return range;
}

}  // namespace chaincodes
