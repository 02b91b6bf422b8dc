#pragma once

// Explicit finite-set model of the simplicial groupoid of surjection pyramids.
// Every set is an initial segment {0, ..., n-1}; a map is its assignment
// array. Isomorphism and automorphism counts are obtained by exhaustive
// search over bijections, so sizes are expected to stay small (<= 6 or so).

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pleth/bialgebra.hpp"
#include "pleth/lambda.hpp"
#include "pleth/rational.hpp"

namespace pleth {

class FinSurjection {
public:
    FinSurjection() = default;
    /// Throws PreconditionError unless every value is < target_size and
    /// every target element is hit.
    FinSurjection(std::uint32_t target_size, std::vector<std::uint32_t> assignment);

    static FinSurjection identity(std::uint32_t n);
    /// n ->> 1 (n >= 1).
    static FinSurjection to_point(std::uint32_t n);

    std::uint32_t source_size() const { return static_cast<std::uint32_t>(assignment_.size()); }
    std::uint32_t target_size() const { return target_size_; }
    const std::vector<std::uint32_t>& assignment() const { return assignment_; }
    std::uint32_t operator()(std::uint32_t x) const { return assignment_[x]; }

    /// fibers()[y] lists the preimage of y in increasing order.
    std::vector<std::vector<std::uint32_t>> fibers() const;

    friend bool operator==(const FinSurjection&, const FinSurjection&) = default;

private:
    std::uint32_t target_size_ = 0;
    std::vector<std::uint32_t> assignment_;
};

/// outer . inner.
FinSurjection compose(const FinSurjection& outer, const FinSurjection& inner);
/// Disjoint union, the second summand shifted past the first.
FinSurjection disjoint_sum(const FinSurjection& a, const FinSurjection& b);
/// Relabels the source: result(x) = s(perm^{-1}(x)), i.e. x -> perm[x] is the
/// relabelling.
FinSurjection relabel_source(const FinSurjection& s, std::span<const std::uint32_t> perm);
/// Relabels the target: result = perm . s.
FinSurjection relabel_target(const FinSurjection& s, std::span<const std::uint32_t> perm);

/// lambda_k = number of fibres of size k.
PartitionVector fiber_profile(const FinSurjection& s);

// A commutative square
//     apex --to_right--> B
//      |                 |
//   to_left            right
//      v                 v
//      A  ----left---->  C
struct Square {
    FinSurjection to_left, to_right, left, right;
};

/// True iff the comparison map apex -> A x_C B is a bijection. Throws
/// PreconditionError if the square does not commute or the maps do not match.
bool is_pullback_square(const Square& sq);
bool is_pullback_square(const std::pair<FinSurjection, FinSurjection>& top,
                        const std::pair<FinSurjection, FinSurjection>& bottom);

/// The canonical pullback of left and right (pairs (a, b) with
/// left(a) = right(b), listed lexicographically), with its projections.
/// Surjective because surjections are stable under pullback.
Square pullback(const FinSurjection& left, const FinSurjection& right);

/// Disjoint union of two squares.
Square square_sum(const Square& a, const Square& b);

/// Number of bijections between the apexes of two squares over the same
/// cospan that commute with both legs (1 for two pullbacks).
std::uint64_t count_apex_isomorphisms(const Square& a, const Square& b);

// A 1-simplex t00 <<-down-- t01 --right->> t11. The horizontal t00 ->> t11 is
// determined by right = horizontal . down, which the constructor checks.
struct T1Cell {
    FinSurjection down, right;

    T1Cell() = default;
    T1Cell(FinSurjection down_map, FinSurjection right_map);

    std::uint32_t t00() const { return down.target_size(); }
    std::uint32_t t01() const { return down.source_size(); }
    std::uint32_t t11() const { return right.target_size(); }
    FinSurjection horizontal() const;
    bool connected() const { return t11() == 1; }

    friend bool operator==(const T1Cell&, const T1Cell&) = default;
};

/// The connected cell (down, n ->> 1).
T1Cell connected_cell(const FinSurjection& down);

/// For each r in t11, the fibre profile of down restricted to right^{-1}(r).
VectorMultiset t1_class(const T1Cell& c);

/// Brute-force count of automorphisms (bijections of t00, t01, t11 commuting
/// with both structure maps).
Integer aut_count(const T1Cell& c);

/// Brute-force isomorphism test.
bool is_isomorphic(const T1Cell& a, const T1Cell& b);

T1Cell monoidal_sum(const T1Cell& c, const T1Cell& d);

// An n-simplex: sets t_ij (0 <= i <= j <= n) with
//   left(i,j):   t_ij ->> t_{i,j-1}        (i < j)
//   right(i,j):  t_ij ->> t_{i+1,j}        (i < j)
//   horizontal(i): t_ii ->> t_{i+1,i+1}
// every triangle commuting and every elementary square a pullback of sets.
class Simplex {
public:
    /// A 0-simplex: a single set.
    explicit Simplex(std::uint32_t t00 = 0);
    static Simplex from_t1(const T1Cell& c);

    std::uint32_t dim() const { return dim_; }
    std::uint32_t size(std::uint32_t i, std::uint32_t j) const { return sizes_[i][j]; }
    const FinSurjection& left(std::uint32_t i, std::uint32_t j) const { return left_[i][j]; }
    const FinSurjection& right(std::uint32_t i, std::uint32_t j) const { return right_[i][j]; }
    const FinSurjection& horizontal(std::uint32_t i) const { return horizontal_[i]; }
    bool connected() const { return sizes_[dim_][dim_] == 1; }

    /// Composite t_ij ->> t_kl for i <= k <= l <= j (right steps, then left).
    FinSurjection path(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) const;
    /// Composite of horizontals t_ii ->> t_kk.
    FinSurjection horizontal_path(std::uint32_t i, std::uint32_t k) const;

    /// Throws PreconditionError describing the first violated condition.
    void validate() const;
    bool is_valid() const;

    Simplex face(std::uint32_t k) const;
    Simplex degeneracy(std::uint32_t k) const;

    /// Requires dim() == 1.
    T1Cell to_t1() const;

    /// Glues a 1-simplex onto the last vertex, filling the new diagonal of
    /// apexes by canonical pullbacks. Requires next.t00() == size(n, n).
    Simplex extend(const T1Cell& next) const;

    /// Assembles a 2-simplex from its nine structure maps, then validates.
    static Simplex make_t2(const FinSurjection& l01, const FinSurjection& r01, const FinSurjection& l12,
                           const FinSurjection& r12, const FinSurjection& l02, const FinSurjection& r02,
                           const FinSurjection& h0, const FinSurjection& h1);

    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::uint32_t dim_ = 0;
    std::vector<std::vector<std::uint32_t>> sizes_;
    std::vector<std::vector<FinSurjection>> left_, right_;
    std::vector<FinSurjection> horizontal_;
};

using T2Cell = Simplex;

/// (d2, d1, d0) of a 2-simplex.
std::array<T1Cell, 3> faces(const T2Cell& t);
/// (s0, s1) of a 1-cell.
std::array<T2Cell, 2> degeneracies(const T1Cell& c);

/// Fills the apex of left and right by the canonical pullback. Requires
/// left.t11() == right.t00() (the shared vertex).
T2Cell segal_completion(const T1Cell& left, const T1Cell& right);

struct VerschiebungTerm {
    PartitionVector mu;  // profile of (t01)_r ->> (t00)_r
    std::uint32_t k;     // |(t12)_r|
    friend bool operator==(const VerschiebungTerm&, const VerschiebungTerm&) = default;
};

/// Per r in t11, the pair (mu_r, |(t12)_r|). Requires a connected 2-simplex.
std::vector<VerschiebungTerm> objective_verschiebung(const T2Cell& t);
/// sum_r V^{k_r} mu_r.
PartitionVector verschiebung_sum(std::span<const VerschiebungTerm> terms);

/// |iso(d0 tau, d1 lambda)_sigma| by brute force: bijections phi from tau's
/// t11 to lambda's t00 whose glued d1 is isomorphic to sigma, times
/// |aut(sigma)|. lambda_cell and sigma must be connected.
Integer iso_fiber_count(const T1Cell& tau, const T1Cell& lambda_cell, const T1Cell& sigma);

/// Delta(delta_sigma) computed on explicit finite sets: iso classes of
/// (tau, lambda) found by exhaustive search, coefficients
/// |iso(d0 tau, d1 lambda)_sigma| / (|aut lambda| |aut tau|), written in the
/// A-basis through delta_tau -> prod A_mu, delta_lambda -> A_lambda.
PTensor objective_delta(const T1Cell& sigma);

/// sum 1/|aut(x)|; PreconditionError on a nonpositive count.
Rational homotopy_cardinality(std::span<const Integer> aut_counts);

// --- enumeration helpers --------------------------------------------------

/// Restricted growth strings of length n, as surjections onto their block
/// count: one representative per set partition of {0..n-1}.
std::vector<FinSurjection> enumerate_set_partitions(std::uint32_t n);
/// Every surjection n ->> m.
std::vector<FinSurjection> enumerate_surjections(std::uint32_t n, std::uint32_t m);
/// One cell per (set partition of t01, set partition of its blocks), for
/// 0 <= t01 <= max_t01. Covers every isomorphism class.
std::vector<T1Cell> enumerate_t1_cells(std::uint32_t max_t01);
/// Representatives of the isomorphism classes of cells with t01 <= max_t01,
/// grouped by brute-force isomorphism search.
std::vector<T1Cell> t1_iso_classes(std::uint32_t max_t01);

}  // namespace pleth
