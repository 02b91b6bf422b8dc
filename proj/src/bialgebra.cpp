#include "pleth/bialgebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "pleth/errors.hpp"

namespace pleth {

// --- PElement -------------------------------------------------------------

PElement PElement::one() { return monomial(PMonomial{}); }

PElement PElement::generator(const PartitionVector& lambda) { return monomial(PMonomial{lambda}); }

PElement PElement::monomial(const PMonomial& m, const Rational& coeff) {
    PElement e;
    e.add_term(m, coeff);
    return e;
}

Rational PElement::coefficient(const PMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PElement::add_term(const PMonomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

PElement& PElement::operator+=(const PElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

PElement operator*(const PElement& a, const PElement& b) {
    PElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

PElement operator*(const Rational& q, const PElement& a) {
    PElement r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, q * c);
    return r;
}

// --- PTensor --------------------------------------------------------------

PTensor PTensor::one() { return pure(PMonomial{}, PMonomial{}); }

PTensor PTensor::pure(const PMonomial& left, const PMonomial& right, const Rational& coeff) {
    PTensor t;
    t.add_term(left, right, coeff);
    return t;
}

Rational PTensor::coefficient(const PMonomial& left, const PMonomial& right) const {
    auto it = terms_.find(Key{left, right});
    return it == terms_.end() ? Rational(0) : it->second;
}

void PTensor::add_term(const PMonomial& left, const PMonomial& right, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(Key{left, right}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

PTensor& PTensor::operator+=(const PTensor& other) {
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    return *this;
}

PTensor operator*(const PTensor& a, const PTensor& b) {
    PTensor r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

PTensor operator*(const Rational& q, const PTensor& a) {
    PTensor r;
    for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, q * c);
    return r;
}

// --- decompositions -------------------------------------------------------

VectorMultiset DecompositionTuple::as_multiset() const {
    std::vector<PartitionVector> elems;
    elems.reserve(cells.size());
    for (const auto& cell : cells) elems.push_back(cell.second);
    return VectorMultiset(std::move(elems));
}

namespace {

// Column index of every grid cell, column by column.
std::vector<std::uint32_t> grid_columns(const PartitionVector& lambda) {
    std::vector<std::uint32_t> cols;
    for (const auto& [k, m] : lambda.entries()) cols.insert(cols.end(), m, k);
    return cols;
}

}  // namespace

std::vector<DecompositionTuple> enumerate_decompositions(const PartitionVector& sigma, const PartitionVector& lambda) {
    std::vector<DecompositionTuple> out;
    if (lambda.is_zero() || lambda.weight() > sigma.weight()) return out;
    const auto cols = grid_columns(lambda);
    // tail_weight[c] = minimal weight still to be consumed by cells c.., each
    // cell in column i absorbing at least weight i.
    std::vector<std::uint64_t> tail_weight(cols.size() + 1, 0);
    for (std::size_t c = cols.size(); c-- > 0;) tail_weight[c] = tail_weight[c + 1] + cols[c];

    DecompositionTuple current;
    std::function<void(std::size_t, const PartitionVector&)> rec = [&](std::size_t c, const PartitionVector& rest) {
        if (c == cols.size()) {
            if (rest.is_zero()) out.push_back(current);
            return;
        }
        if (rest.weight() < tail_weight[c]) return;
        const std::uint32_t col = cols[c];
        for (const auto& mu : enumerate_subvectors(rest, col)) {
            if (mu.is_zero()) continue;
            current.cells.emplace_back(col, mu);
            rec(c + 1, vec_sub(rest, verschiebung(col, mu)));
            current.cells.pop_back();
        }
    };
    rec(0, sigma);
    return out;
}

Integer count_placements(const PartitionVector& sigma, const PartitionVector& lambda, const VectorMultiset& mu) {
    const auto cols = grid_columns(lambda);
    const auto& elems = mu.elements();
    if (cols.size() != elems.size()) return 0;
    std::vector<std::size_t> perm(cols.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Integer count = 0;
    do {
        PartitionVector total;
        for (std::size_t e = 0; e < elems.size(); ++e) total = total + verschiebung(cols[perm[e]], elems[e]);
        if (total == sigma) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace {

void require_nonzero(const PartitionVector& sigma) {
    if (sigma.is_zero()) throw PreconditionError("comultiplication is defined on generators A_sigma with sigma nonzero");
}

PTensor compute_delta_generator(const PartitionVector& sigma) {
    // Delta(a_sigma) = sum_lambda (sum_{T_{sigma,lambda}} prod a_mu) (x) a_lambda,
    // accumulated as integer counts per (multiset, lambda).
    std::map<std::pair<VectorMultiset, PartitionVector>, Integer> counts;
    for (const auto& lambda : enumerate_vectors(static_cast<std::uint32_t>(sigma.weight()), WeightMode::upto))
        for (const auto& tuple : enumerate_decompositions(sigma, lambda)) counts[{tuple.as_multiset(), lambda}] += 1;

    const Integer sigma_aut = autiv(sigma);
    PTensor result;
    for (const auto& [key, count] : counts) {
        const auto& [mu, lambda] = key;
        Integer denom = autiv(lambda);
        for (const auto& m : mu.elements()) denom *= autiv(m);
        Rational coeff(sigma_aut * count, denom);
        coeff.canonicalize();
        result.add_term(mu, PMonomial{lambda}, coeff);
    }
    return result;
}

}  // namespace

PTensor delta_generator(const PartitionVector& sigma) {
    require_nonzero(sigma);
    static std::shared_mutex mutex;
    static std::map<PartitionVector, PTensor> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(sigma); it != cache.end()) return it->second;
    }
    PTensor value = compute_delta_generator(sigma);
    std::unique_lock lock(mutex);
    return cache.emplace(sigma, std::move(value)).first->second;
}

PTensor delta_generator_multiset(const PartitionVector& sigma) {
    require_nonzero(sigma);
    const auto w = static_cast<std::uint32_t>(sigma.weight());
    const auto candidates = enumerate_vectors(w, WeightMode::upto);
    const Integer sigma_aut = autiv(sigma);

    PTensor result;
    for (const auto& lambda : candidates) {
        const std::size_t k = lambda.length();
        if (k > sigma.length()) continue;
        // Multisets of k nonzero vectors of total weight <= w.
        std::vector<PartitionVector> chosen;
        std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t used) {
            if (chosen.size() == k) {
                VectorMultiset mu(chosen);
                const Integer placements = count_placements(sigma, lambda, mu);
                if (placements == 0) return;
                Rational coeff(sigma_aut * placements, autiv(lambda) * multiset_autiv(mu));
                coeff.canonicalize();
                result.add_term(mu, PMonomial{lambda}, coeff);
                return;
            }
            for (std::size_t i = start; i < candidates.size(); ++i) {
                const auto wi = candidates[i].weight();
                if (used + wi * (k - chosen.size()) > w) break;  // candidates sorted by weight
                chosen.push_back(candidates[i]);
                rec(i, used + wi);
                chosen.pop_back();
            }
        };
        rec(0, 0);
    }
    return result;
}

PTensor delta(const PElement& x) {
    PTensor result;
    for (const auto& [m, c] : x.terms()) {
        PTensor term = PTensor::one();
        for (const auto& mu : m.elements()) term = term * delta_generator(mu);
        result += c * term;
    }
    return result;
}

namespace {

Rational counit_monomial(const PMonomial& m) {
    const PartitionVector x1 = PartitionVector::unit(1);
    for (const auto& mu : m.elements())
        if (mu != x1) return 0;
    return 1;
}

}  // namespace

Rational counit(const PElement& x) {
    Rational r = 0;
    for (const auto& [m, c] : x.terms()) r += c * counit_monomial(m);
    return r;
}

PElement bell(const PartitionVector& sigma, const PartitionVector& lambda) {
    PElement p;
    if (lambda.is_zero() || lambda.weight() > sigma.weight()) return p;
    const PMonomial right{lambda};
    for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms())
        if (key.second == right) p.add_term(key.first, c);
    return p;
}

Rational pair_element(const PElement& x, const TruncatedSeries& f) {
    Rational r = 0;
    for (const auto& [m, c] : x.terms()) r += c * pair_monomial(m, f);
    return r;
}

Rational pair_tensor(const PTensor& t, const TruncatedSeries& f, const TruncatedSeries& g) {
    Rational r = 0;
    for (const auto& [key, c] : t.terms()) r += c * pair_monomial(key.first, f) * pair_monomial(key.second, g);
    return r;
}

namespace {

void accumulate(PTripleTensor& acc, TripleKey key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

}  // namespace

PTripleTensor coassociator_left(const PartitionVector& sigma) {
    PTripleTensor acc;
    for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms())
        for (const PTensor e = delta(PElement::monomial(key.first)); const auto& [inner, ci] : e.terms())
            accumulate(acc, TripleKey{inner.first, inner.second, key.second}, c * ci);
    return acc;
}

PTripleTensor coassociator_right(const PartitionVector& sigma) {
    PTripleTensor acc;
    for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms())
        for (const PTensor e = delta(PElement::monomial(key.second)); const auto& [inner, ci] : e.terms())
            accumulate(acc, TripleKey{key.first, inner.first, inner.second}, c * ci);
    return acc;
}

PElement counit_left(const PartitionVector& sigma) {
    PElement r;
    for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms())
        r.add_term(key.second, c * counit_monomial(key.first));
    return r;
}

PElement counit_right(const PartitionVector& sigma) {
    PElement r;
    for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms())
        r.add_term(key.first, c * counit_monomial(key.second));
    return r;
}

PTensor classical_delta(std::uint32_t n) {
    if (n == 0) throw PreconditionError("classical_delta: n must be >= 1");
    return delta_generator(PartitionVector::unit(1, n));
}

std::uint64_t placement_weight_bound(const PMonomial& left, const PartitionVector& right) {
    auto cols = grid_columns(right);
    if (cols.size() != left.size())
        throw PreconditionError("placement_weight_bound: left monomial has " + std::to_string(left.size()) +
                                " factors but the right generator has " + std::to_string(cols.size()) + " cells");
    std::vector<std::uint64_t> weights;
    for (const auto& mu : left.elements()) weights.push_back(mu.weight());
    std::sort(weights.rbegin(), weights.rend());
    std::sort(cols.rbegin(), cols.rend());
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) s += weights[i] * cols[i];
    return s;
}

std::pair<PTensor, PTensor> green_delta(std::uint32_t truncation) {
    PTensor left, right;
    if (truncation == 0) return {left, right};
    const auto vectors = enumerate_vectors(truncation, WeightMode::upto);
    auto keep = [&](const PMonomial& l, const PMonomial& r) {
        return placement_weight_bound(l, r.elements().front()) <= truncation;
    };

    // Left: sum_sigma Delta(a_sigma).
    for (const auto& sigma : vectors) {
        const Rational inv(1, autiv(sigma));
        for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms())
            if (keep(key.first, key.second)) left.add_term(key.first, key.second, inv * c);
    }

    // Right: sum_k A^k (x) a_k, with A = sum a_mu in the A-basis.
    PElement green;
    for (const auto& mu : vectors) green.add_term(PMonomial{mu}, Rational(1, autiv(mu)));
    auto truncate = [truncation](const PElement& e) {
        PElement r;
        for (const auto& [m, c] : e.terms())
            if (m.weight() <= truncation) r.add_term(m, c);
        return r;
    };
    PElement power = green;
    for (std::uint32_t k = 1; k <= truncation; ++k) {
        if (k > 1) power = truncate(power * green);
        for (const auto& lambda : vectors) {
            if (lambda.length() != k) continue;
            const Rational a_lambda(1, autiv(lambda));
            const PMonomial r{lambda};
            for (const auto& [m, c] : power.terms())
                if (keep(m, r)) right.add_term(m, r, c * a_lambda);
        }
    }
    return {left, right};
}

}  // namespace pleth
