#pragma once

// Partition vectors: finitely supported sequences (lambda_1, lambda_2, ...) of
// nonnegative integers. A vector lambda is the isomorphism class of a
// surjection with lambda_k fibres of size k, so it indexes both monomials
// x^lambda of a series and the generators A_lambda of the bialgebra.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pleth/rational.hpp"

namespace pleth {

class PartitionVector {
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (index k >= 1, multiplicity > 0)

    PartitionVector() = default;

    /// Dense constructor: raw[0] is lambda_1. Zeros anywhere are dropped.
    static PartitionVector canonical(std::span<const std::uint32_t> raw);
    static PartitionVector canonical(std::initializer_list<std::uint32_t> raw) {
        return canonical(std::span<const std::uint32_t>(raw.begin(), raw.size()));
    }
    /// Single part: the vector with lambda_k = mult.
    static PartitionVector unit(std::uint32_t k, std::uint32_t mult = 1);

    std::uint32_t operator[](std::uint32_t k) const;
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::uint32_t max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

    /// Dense prefix lambda_1..lambda_{max_index}; empty for the zero vector.
    std::vector<std::uint32_t> dense() const;

    /// Sum of multiplicities, |lambda|.
    std::uint64_t length() const;
    /// Grading sum_k k * lambda_k.
    std::uint64_t weight() const;

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
    /// Canonical order: weight ascending, then the dense prefix compared
    /// lexicographically with larger entries first.
    friend std::strong_ordering operator<=>(const PartitionVector& a, const PartitionVector& b);

private:
    std::vector<Entry> entries_;  // sorted by index, no zero multiplicity
};

std::uint64_t length(const PartitionVector& v);
std::uint64_t weight(const PartitionVector& v);

/// prod_k (k!)^{lambda_k} * lambda_k!; 1 on the zero vector.
Integer autiv(const PartitionVector& v);

/// (V^n lambda)_{n k} = lambda_k, zero elsewhere. n >= 1.
PartitionVector verschiebung(std::uint32_t n, const PartitionVector& v);

PartitionVector vec_add(const PartitionVector& a, const PartitionVector& b);
inline PartitionVector operator+(const PartitionVector& a, const PartitionVector& b) { return vec_add(a, b); }

/// True iff a_k <= b_k for every k.
bool dominated_by(const PartitionVector& a, const PartitionVector& b);
/// b - a; requires dominated_by(a, b).
PartitionVector vec_sub(const PartitionVector& b, const PartitionVector& a);

/// "2,0,1,3"; the zero vector is "0".
std::string encode(const PartitionVector& v);
/// Inverse of encode. Also accepts trailing zeros and surrounding whitespace.
PartitionVector decode_vector(std::string_view text);

// A finite multiset of nonzero partition vectors, kept as a sorted sequence.
class VectorMultiset {
public:
    VectorMultiset() = default;
    /// Throws PreconditionError if any element is the zero vector.
    explicit VectorMultiset(std::vector<PartitionVector> elements);
    VectorMultiset(std::initializer_list<PartitionVector> elements)
        : VectorMultiset(std::vector<PartitionVector>(elements)) {}

    const std::vector<PartitionVector>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    /// Sum of the element weights.
    std::uint64_t weight() const;

    /// Distinct elements with their multiplicities, in canonical order.
    std::vector<std::pair<PartitionVector, std::uint32_t>> grouped() const;

    /// Multiset union.
    friend VectorMultiset operator+(const VectorMultiset& a, const VectorMultiset& b);

    friend bool operator==(const VectorMultiset&, const VectorMultiset&) = default;
    /// Total weight, then size, then lexicographic on the sorted elements.
    friend std::strong_ordering operator<=>(const VectorMultiset& a, const VectorMultiset& b);

private:
    std::vector<PartitionVector> elements_;
};

/// prod over distinct elements of (multiplicity)!.
Integer rep_count(const VectorMultiset& m);
/// prod_{mu in m} autiv(mu) * rep_count(m).
Integer multiset_autiv(const VectorMultiset& m);

enum class WeightMode { exact, upto };

/// Nonzero vectors with weight == w (exact) or 1 <= weight <= w (upto), in
/// canonical order.
std::vector<PartitionVector> enumerate_vectors(std::uint32_t w, WeightMode mode);

/// All (possibly zero) vectors v with V^n v dominated by bound, i.e.
/// v_k <= bound_{n k}. Canonical order.
std::vector<PartitionVector> enumerate_subvectors(const PartitionVector& bound, std::uint32_t n = 1);

}  // namespace pleth
