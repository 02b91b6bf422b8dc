#pragma once

// Set partitions of {0..n-1} and their dictionary with surjections. Every
// predicate has a block-level evaluation and one read off the diagram
//
//        E ---tau---> X
//        |            |
//       pi            |
//        v            v
//        S ---------> I
//
// where I is the pushout (components of the block-intersection graph) and
// phi : E -> S x_I X sends e to (pi(e), tau(e)).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pleth/setmodel.hpp"

namespace pleth {

class Partition {
public:
    Partition() = default;
    /// Blocks must be nonempty and cover {0..ground_size-1} exactly once;
    /// PreconditionError otherwise. Stored sorted, blocks ordered by least
    /// element.
    Partition(std::uint32_t ground_size, std::vector<std::vector<std::uint32_t>> blocks);

    static Partition from_surjection(const FinSurjection& s);
    static Partition discrete(std::uint32_t n);  // 0-hat
    static Partition indiscrete(std::uint32_t n);  // 1-hat

    std::uint32_t ground_size() const { return ground_size_; }
    const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
    std::uint32_t block_count() const { return static_cast<std::uint32_t>(blocks_.size()); }
    /// Index of the block containing x.
    std::uint32_t block_of(std::uint32_t x) const { return block_index_[x]; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.ground_size_ == b.ground_size_ && a.blocks_ == b.blocks_;
    }

private:
    std::uint32_t ground_size_ = 0;
    std::vector<std::vector<std::uint32_t>> blocks_;
    std::vector<std::uint32_t> block_index_;
};

/// E ->> S, block labels in canonical block order.
FinSurjection partition_to_surjection(const Partition& p);

struct PartitionDiagram {
    FinSurjection pi, tau;          // E ->> S, E ->> X
    FinSurjection s_to_i, x_to_i;   // the pushout legs
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber_product;  // S x_I X, lexicographic
    std::vector<std::uint32_t> phi;  // E -> index into fiber_product
};

/// Throws PreconditionError on a ground-set mismatch.
PartitionDiagram partition_diagram(const Partition& pi, const Partition& tau);

/// Routes of evaluation, exposed so that they can be compared.
namespace blockwise {
Partition join(const Partition& pi, const Partition& tau);
Partition meet(const Partition& pi, const Partition& tau);
bool refines(const Partition& finer, const Partition& coarser);
bool commute(const Partition& pi, const Partition& tau);
bool independent(const Partition& pi, const Partition& tau);
bool is_transversal(const Partition& sigma, const Partition& pi, const Partition& tau);
}  // namespace blockwise

namespace diagrammatic {
Partition join(const Partition& pi, const Partition& tau);
Partition meet(const Partition& pi, const Partition& tau);
bool refines(const Partition& finer, const Partition& coarser);
bool commute(const Partition& pi, const Partition& tau);
bool independent(const Partition& pi, const Partition& tau);
/// The connected 2-simplex B <<- S <<- E ->> X ->> 1 (apex E, t11 = I) if
/// (pi, tau) is a transversal of sigma, nothing otherwise.
std::optional<T2Cell> transversal_simplex(const Partition& sigma, const Partition& pi, const Partition& tau);
bool is_transversal(const Partition& sigma, const Partition& pi, const Partition& tau);
}  // namespace diagrammatic

/// Both routes, InvariantError if they disagree.
Partition join(const Partition& pi, const Partition& tau);
Partition meet(const Partition& pi, const Partition& tau);
bool refines(const Partition& finer, const Partition& coarser);
bool commute(const Partition& pi, const Partition& tau);
bool independent(const Partition& pi, const Partition& tau);
bool is_transversal(const Partition& sigma, const Partition& pi, const Partition& tau);

/// Every partition of {0..n-1}, in restricted-growth-string order.
std::vector<Partition> enumerate_partitions(std::uint32_t n);

}  // namespace pleth
