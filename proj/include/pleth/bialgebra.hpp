#pragma once

// The plethystic bialgebra: the free polynomial algebra on the coefficient
// functionals A_lambda (A_lambda(F) = f_lambda) with the comultiplication
// dual to plethysm, <Delta(A_sigma), F (x) G> = A_sigma(G o F).

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "pleth/lambda.hpp"
#include "pleth/rational.hpp"
#include "pleth/series.hpp"

namespace pleth {

/// prod_{mu in multiset} A_mu; the empty multiset is the unit.
using PMonomial = VectorMultiset;

class PElement {
public:
    using Terms = std::map<PMonomial, Rational>;

    PElement() = default;
    static PElement one();
    static PElement generator(const PartitionVector& lambda);  // A_lambda
    static PElement monomial(const PMonomial& m, const Rational& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const PMonomial& m) const;

    void add_term(const PMonomial& m, const Rational& coeff);
    PElement& operator+=(const PElement& other);

    friend PElement operator+(PElement a, const PElement& b) { return a += b; }
    friend PElement operator*(const PElement& a, const PElement& b);
    friend PElement operator*(const Rational& q, const PElement& a);
    friend bool operator==(const PElement&, const PElement&) = default;

private:
    Terms terms_;  // no zero coefficients
};

class PTensor {
public:
    using Key = std::pair<PMonomial, PMonomial>;
    using Terms = std::map<Key, Rational>;

    PTensor() = default;
    static PTensor one();  // 1 (x) 1
    static PTensor pure(const PMonomial& left, const PMonomial& right, const Rational& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const PMonomial& left, const PMonomial& right) const;

    void add_term(const PMonomial& left, const PMonomial& right, const Rational& coeff);
    PTensor& operator+=(const PTensor& other);

    friend PTensor operator+(PTensor a, const PTensor& b) { return a += b; }
    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend PTensor operator*(const PTensor& a, const PTensor& b);
    friend PTensor operator*(const Rational& q, const PTensor& a);
    friend bool operator==(const PTensor&, const PTensor&) = default;

private:
    Terms terms_;
};

// Triple tensors, for coassociativity.
using TripleKey = std::tuple<PMonomial, PMonomial, PMonomial>;
using PTripleTensor = std::map<TripleKey, Rational>;

// One element of T_{sigma,lambda}: the vectors mu_{i,j}, listed column by
// column (i ascending), j = 1..lambda_i within a column.
struct DecompositionTuple {
    std::vector<std::pair<std::uint32_t, PartitionVector>> cells;  // (column i, mu_{i,j})

    VectorMultiset as_multiset() const;
    friend bool operator==(const DecompositionTuple&, const DecompositionTuple&) = default;
};

/// All ordered tuples of nonzero vectors with sigma = sum_i sum_j V^i mu_{i,j}.
std::vector<DecompositionTuple> enumerate_decompositions(const PartitionVector& sigma, const PartitionVector& lambda);

/// |T_{sigma,lambda}^mu|: bijections from the labelled elements of mu to the
/// grid cells of lambda such that the Verschiebung-weighted sum is sigma.
Integer count_placements(const PartitionVector& sigma, const PartitionVector& lambda, const VectorMultiset& mu);

/// Delta(A_sigma), by enumerating T_{sigma,lambda} in the a-basis
/// (a_lambda = A_lambda / autiv(lambda)) and converting once. Memoized.
PTensor delta_generator(const PartitionVector& sigma);

/// Delta(A_sigma) from the multiset formula
/// autiv(sigma) |T^mu| / (autiv(lambda) autiv(mu)), with |T^mu| from
/// count_placements. Independent of delta_generator.
PTensor delta_generator_multiset(const PartitionVector& sigma);

/// Multiplicative, linear extension of delta_generator.
PTensor delta(const PElement& x);

Rational counit(const PElement& x);

/// P_{sigma,lambda}: the left leg of Delta(A_sigma) at right leg A_lambda.
PElement bell(const PartitionVector& sigma, const PartitionVector& lambda);

Rational pair_element(const PElement& x, const TruncatedSeries& f);
/// Left legs are evaluated on F, right legs on G.
Rational pair_tensor(const PTensor& t, const TruncatedSeries& f, const TruncatedSeries& g);

/// (Delta (x) id) Delta(A_sigma) and (id (x) Delta) Delta(A_sigma).
PTripleTensor coassociator_left(const PartitionVector& sigma);
PTripleTensor coassociator_right(const PartitionVector& sigma);

/// (eps (x) id) Delta(A_sigma) and (id (x) eps) Delta(A_sigma).
PElement counit_left(const PartitionVector& sigma);
PElement counit_right(const PartitionVector& sigma);

/// Delta(A_n) for ordinary composition, i.e. delta_generator((n)).
PTensor classical_delta(std::uint32_t n);

/// Grading used to truncate tensors in green_delta: the largest
/// sum_r q_r * wt(mu_r) over bijections between the left factors mu_r and the
/// grid cells (column q_r) of the single right generator. Every sigma whose
/// coproduct contains the term has weight <= this value.
std::uint64_t placement_weight_bound(const PMonomial& left, const PartitionVector& right);

/// Both sides of Delta(A) = sum_k A^k (x) a_k, A = sum_lambda a_lambda,
/// a_k = sum_{|lambda| = k} a_lambda, truncated to placement_weight_bound <= W
/// and written in the A-basis. The two must be equal.
std::pair<PTensor, PTensor> green_delta(std::uint32_t truncation);

}  // namespace pleth
