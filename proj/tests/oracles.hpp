#pragma once

// Reference computations for the tests, written without the library's
// algorithms: dense exponent maps instead of PartitionVector, relation
// matrices instead of blocks, ordered compositions instead of decompositions.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Exponents = std::vector<std::uint32_t>;  // trailing zeros trimmed

/// Number of integer partitions of w, Euler's pentagonal recurrence.
Z partition_count(std::uint32_t w);

/// |aut(X ->> B)| for the surjection with profile lambda (dense), by
/// enumerating permutations of X that map fibres to fibres.
Z brute_automorphisms(const Exponents& lambda);

/// Raw-coefficient multivariate series truncated at weight W.
struct Series {
    std::uint32_t truncation;
    std::map<Exponents, Q> raw;
};
std::uint32_t weight(const Exponents& e);
Series multiply(const Series& a, const Series& b);
/// G(F_1, F_2, ...) term by term, F_k(x) = F(x_k, x_{2k}, ...).
Series plethysm(const Series& g, const Series& f);
/// prod_k (k!)^{e_k} e_k!
Z autiv(const Exponents& e);

/// Classical coproduct of A_n: sum over ordered compositions
/// n = n_1 + ... + n_k of multinomial(n; n_1..n_k) / k!, keyed by the sorted
/// parts and k.
std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, Q> faa_di_bruno(std::uint32_t n);

/// Partial Bell polynomial B_{n,k}(x_1, x_2, ...) as n! [t^n] (sum_j x_j
/// t^j / j!)^k / k!, expanded with polynomial coefficients. Keys are
/// exponent vectors of x_1, x_2, ...
std::map<Exponents, Q> bell(std::uint32_t n, std::uint32_t k);

/// Equivalence relations on {0..n-1} as boolean matrices.
using Relation = std::vector<std::vector<bool>>;
Relation relation_of_labels(const std::vector<std::uint32_t>& label);
Relation transitive_closure(Relation r);
Relation relation_join(const Relation& a, const Relation& b);
Relation relation_meet(const Relation& a, const Relation& b);
Relation compose(const Relation& a, const Relation& b);
/// Every labelling of {0..n-1} as a restricted growth string.
std::vector<std::vector<std::uint32_t>> all_labellings(std::uint32_t n);

}  // namespace oracle
