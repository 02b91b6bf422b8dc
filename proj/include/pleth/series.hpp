#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pleth/lambda.hpp"
#include "pleth/rational.hpp"

namespace pleth {

enum class ConstantTerm { allowed, forbidden };

// Power series in x_1, x_2, ... with rational coefficients, truncated to
// monomials of weight <= W (the weight of x^lambda is sum_k k * lambda_k, so
// x_k has weight k). Storage holds the raw coefficient c_lambda of x^lambda;
// the normalized coefficient f_lambda = autiv(lambda) * c_lambda is used at
// the API boundary.
class TruncatedSeries {
public:
    using Terms = std::map<PartitionVector, Rational>;

    /// The zero series at truncation W (W >= 1).
    explicit TruncatedSeries(std::uint32_t truncation);

    /// Builds from normalized coefficients f_lambda. Terms above W are
    /// dropped, duplicates summed. With ConstantTerm::forbidden a nonzero
    /// constant term is a PreconditionError.
    static TruncatedSeries from_f_coefficients(const std::vector<std::pair<PartitionVector, Rational>>& pairs,
                                               std::uint32_t truncation,
                                               ConstantTerm constant = ConstantTerm::allowed);
    /// Same, from raw monomial coefficients c_lambda.
    static TruncatedSeries from_raw_coefficients(const std::vector<std::pair<PartitionVector, Rational>>& pairs,
                                                 std::uint32_t truncation,
                                                 ConstantTerm constant = ConstantTerm::allowed);

    /// The series x_k.
    static TruncatedSeries variable(std::uint32_t k, std::uint32_t truncation);

    std::uint32_t truncation() const { return truncation_; }
    const Terms& raw_terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;

    Rational raw_coefficient(const PartitionVector& lambda) const;
    /// f_lambda; PreconditionError if weight(lambda) exceeds the truncation.
    Rational coefficient(const PartitionVector& lambda) const;

    /// (lambda, f_lambda) for every stored term, canonical order.
    std::vector<std::pair<PartitionVector, Rational>> f_terms() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void insert_raw(const PartitionVector& lambda, const Rational& c);

    std::uint32_t truncation_;
    Terms terms_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const Rational& q, const TruncatedSeries& f);
TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g);

/// F_k(x_1, x_2, ...) = F(x_k, x_{2k}, ...), truncated at the same W.
TruncatedSeries verschiebung_substitute(const TruncatedSeries& f, std::uint32_t k);

/// G(F_1, F_2, ...). F must be constant-free; G may carry a constant term.
TruncatedSeries plethysm(const TruncatedSeries& g, const TruncatedSeries& f);

/// f_(n) for n = 1..W: the exponential coefficients of F(x_1, 0, 0, ...).
std::vector<Rational> restrict_univariate(const TruncatedSeries& f);

/// One-variable composition g(f(x)) on exponential coefficient sequences
/// (element i is the coefficient of x^{i+1}/(i+1)!, no constant terms),
/// truncated to the common length. Dense univariate arithmetic only.
std::vector<Rational> compose_univariate(const std::vector<Rational>& outer, const std::vector<Rational>& inner);

/// prod_{mu in m} f_mu(F); 1 on the empty multiset.
Rational pair_monomial(const VectorMultiset& m, const TruncatedSeries& f);

}  // namespace pleth
