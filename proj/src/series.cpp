#include "pleth/series.hpp"

#include <string>

#include "pleth/errors.hpp"

namespace pleth {

TruncatedSeries::TruncatedSeries(std::uint32_t truncation) : truncation_(truncation) {
    if (truncation == 0) throw PreconditionError("series truncation must be >= 1");
}

void TruncatedSeries::insert_raw(const PartitionVector& lambda, const Rational& c) {
    if (lambda.weight() > truncation_ || c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::from_f_coefficients(const std::vector<std::pair<PartitionVector, Rational>>& pairs,
                                                     std::uint32_t truncation, ConstantTerm constant) {
    TruncatedSeries s(truncation);
    for (const auto& [lambda, f] : pairs) s.insert_raw(lambda, f / Rational(autiv(lambda)));
    if (constant == ConstantTerm::forbidden && s.has_constant_term())
        throw PreconditionError("series must have zero constant term");
    return s;
}

TruncatedSeries TruncatedSeries::from_raw_coefficients(const std::vector<std::pair<PartitionVector, Rational>>& pairs,
                                                       std::uint32_t truncation, ConstantTerm constant) {
    TruncatedSeries s(truncation);
    for (const auto& [lambda, c] : pairs) s.insert_raw(lambda, c);
    if (constant == ConstantTerm::forbidden && s.has_constant_term())
        throw PreconditionError("series must have zero constant term");
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::uint32_t k, std::uint32_t truncation) {
    TruncatedSeries s(truncation);
    s.insert_raw(PartitionVector::unit(k), 1);
    return s;
}

bool TruncatedSeries::has_constant_term() const {
    return !terms_.empty() && terms_.begin()->first.is_zero();
}

Rational TruncatedSeries::raw_coefficient(const PartitionVector& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coefficient(const PartitionVector& lambda) const {
    if (lambda.weight() > truncation_)
        throw PreconditionError("coefficient at weight " + std::to_string(lambda.weight()) +
                                " is undetermined at truncation " + std::to_string(truncation_));
    return Rational(autiv(lambda)) * raw_coefficient(lambda);
}

std::vector<std::pair<PartitionVector, Rational>> TruncatedSeries::f_terms() const {
    std::vector<std::pair<PartitionVector, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [lambda, c] : terms_) out.emplace_back(lambda, Rational(autiv(lambda)) * c);
    return out;
}

namespace {

void require_same_truncation(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.truncation() != g.truncation())
        throw PreconditionError("truncation mismatch: " + std::to_string(f.truncation()) + " vs " +
                                std::to_string(g.truncation()));
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_truncation(f, g);
    std::vector<std::pair<PartitionVector, Rational>> pairs(f.raw_terms().begin(), f.raw_terms().end());
    pairs.insert(pairs.end(), g.raw_terms().begin(), g.raw_terms().end());
    return TruncatedSeries::from_raw_coefficients(pairs, f.truncation());
}

TruncatedSeries scale(const Rational& q, const TruncatedSeries& f) {
    std::vector<std::pair<PartitionVector, Rational>> pairs;
    if (q != 0)
        for (const auto& [lambda, c] : f.raw_terms()) pairs.emplace_back(lambda, q * c);
    return TruncatedSeries::from_raw_coefficients(pairs, f.truncation());
}

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_truncation(f, g);
    const std::uint32_t w = f.truncation();
    std::map<PartitionVector, Rational> acc;
    for (const auto& [a, ca] : f.raw_terms()) {
        const auto wa = a.weight();
        for (const auto& [b, cb] : g.raw_terms()) {
            if (wa + b.weight() > w) continue;
            acc[a + b] += ca * cb;
        }
    }
    return TruncatedSeries::from_raw_coefficients({acc.begin(), acc.end()}, w);
}

TruncatedSeries verschiebung_substitute(const TruncatedSeries& f, std::uint32_t k) {
    if (k == 0) throw PreconditionError("substitution index must be >= 1");
    // x^mu becomes x^{V^k mu}; the raw coefficient is carried unchanged.
    std::vector<std::pair<PartitionVector, Rational>> pairs;
    for (const auto& [mu, c] : f.raw_terms()) pairs.emplace_back(verschiebung(k, mu), c);
    return TruncatedSeries::from_raw_coefficients(pairs, f.truncation());
}

TruncatedSeries plethysm(const TruncatedSeries& g, const TruncatedSeries& f) {
    require_same_truncation(g, f);
    if (f.has_constant_term()) throw PreconditionError("plethysm: inner series has a nonzero constant term");
    const std::uint32_t w = f.truncation();

    // powers[k][j] = (F_k)^j; F_k has minimal weight >= k, so only k <= W and
    // j <= W / k are ever needed.
    std::vector<std::vector<TruncatedSeries>> powers(w + 1);
    auto power = [&](std::uint32_t k, std::uint32_t j) -> const TruncatedSeries& {
        auto& row = powers[k];
        if (row.empty()) {
            row.push_back(TruncatedSeries::from_raw_coefficients({{PartitionVector{}, 1}}, w));
            row.push_back(verschiebung_substitute(f, k));
        }
        while (row.size() <= j) row.push_back(multiply(row.back(), row[1]));
        return row[j];
    };

    TruncatedSeries result(w);
    for (const auto& [lambda, c] : g.raw_terms()) {
        // weight(lambda) <= W holds for every stored term of G.
        TruncatedSeries term = TruncatedSeries::from_raw_coefficients({{PartitionVector{}, c}}, w);
        for (const auto& [k, m] : lambda.entries()) {
            term = multiply(term, power(k, m));
            if (term.is_zero()) break;
        }
        result = add(result, term);
    }
    return result;
}

std::vector<Rational> restrict_univariate(const TruncatedSeries& f) {
    std::vector<Rational> out;
    out.reserve(f.truncation());
    for (std::uint32_t n = 1; n <= f.truncation(); ++n) out.push_back(f.coefficient(PartitionVector::unit(1, n)));
    return out;
}

std::vector<Rational> compose_univariate(const std::vector<Rational>& outer, const std::vector<Rational>& inner) {
    const std::size_t n = std::min(outer.size(), inner.size());
    // Ordinary coefficients, index = exponent.
    std::vector<Rational> g(n + 1), f(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        const Rational fact(factorial(static_cast<unsigned>(i)));
        g[i] = outer[i - 1] / fact;
        f[i] = inner[i - 1] / fact;
    }
    auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> c(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    // Horner: g(f) = f (g_1 + f (g_2 + ... )).
    std::vector<Rational> acc(n + 1);
    for (std::size_t i = n; i >= 1; --i) {
        acc[0] += g[i];
        acc = mul(acc, f);
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 1; i <= n; ++i) out[i - 1] = acc[i] * Rational(factorial(static_cast<unsigned>(i)));
    return out;
}

Rational pair_monomial(const VectorMultiset& m, const TruncatedSeries& f) {
    Rational r = 1;
    for (const auto& mu : m.elements()) r *= f.coefficient(mu);
    return r;
}

}  // namespace pleth
