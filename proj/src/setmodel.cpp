#include "pleth/setmodel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "pleth/errors.hpp"

namespace pleth {

// --- FinSurjection --------------------------------------------------------

FinSurjection::FinSurjection(std::uint32_t target_size, std::vector<std::uint32_t> assignment)
    : target_size_(target_size), assignment_(std::move(assignment)) {
    std::vector<bool> hit(target_size, false);
    for (std::uint32_t y : assignment_) {
        if (y >= target_size)
            throw PreconditionError("map value " + std::to_string(y) + " outside target of size " +
                                    std::to_string(target_size));
        hit[y] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw PreconditionError("map is not surjective");
}

FinSurjection FinSurjection::identity(std::uint32_t n) {
    std::vector<std::uint32_t> a(n);
    std::iota(a.begin(), a.end(), 0u);
    return FinSurjection(n, std::move(a));
}

FinSurjection FinSurjection::to_point(std::uint32_t n) {
    if (n == 0) throw PreconditionError("the empty set has no surjection onto a point");
    return FinSurjection(1, std::vector<std::uint32_t>(n, 0));
}

std::vector<std::vector<std::uint32_t>> FinSurjection::fibers() const {
    std::vector<std::vector<std::uint32_t>> out(target_size_);
    for (std::uint32_t x = 0; x < source_size(); ++x) out[assignment_[x]].push_back(x);
    return out;
}

FinSurjection compose(const FinSurjection& outer, const FinSurjection& inner) {
    if (inner.target_size() != outer.source_size())
        throw PreconditionError("compose: inner target size " + std::to_string(inner.target_size()) +
                                " != outer source size " + std::to_string(outer.source_size()));
    std::vector<std::uint32_t> a(inner.source_size());
    for (std::uint32_t x = 0; x < a.size(); ++x) a[x] = outer(inner(x));
    return FinSurjection(outer.target_size(), std::move(a));
}

FinSurjection disjoint_sum(const FinSurjection& a, const FinSurjection& b) {
    std::vector<std::uint32_t> out = a.assignment();
    for (std::uint32_t y : b.assignment()) out.push_back(y + a.target_size());
    return FinSurjection(a.target_size() + b.target_size(), std::move(out));
}

FinSurjection relabel_source(const FinSurjection& s, std::span<const std::uint32_t> perm) {
    std::vector<std::uint32_t> out(s.source_size());
    for (std::uint32_t x = 0; x < out.size(); ++x) out[perm[x]] = s(x);
    return FinSurjection(s.target_size(), std::move(out));
}

FinSurjection relabel_target(const FinSurjection& s, std::span<const std::uint32_t> perm) {
    std::vector<std::uint32_t> out(s.source_size());
    for (std::uint32_t x = 0; x < out.size(); ++x) out[x] = perm[s(x)];
    return FinSurjection(s.target_size(), std::move(out));
}

PartitionVector fiber_profile(const FinSurjection& s) {
    std::vector<std::uint32_t> dense(s.source_size(), 0);
    for (const auto& fiber : s.fibers()) ++dense[fiber.size() - 1];
    return PartitionVector::canonical(dense);
}

// --- squares --------------------------------------------------------------

namespace {

void check_square_shape(const Square& sq) {
    if (sq.to_left.source_size() != sq.to_right.source_size() || sq.to_left.target_size() != sq.left.source_size() ||
        sq.to_right.target_size() != sq.right.source_size() || sq.left.target_size() != sq.right.target_size())
        throw PreconditionError("square maps do not fit together");
    for (std::uint32_t p = 0; p < sq.to_left.source_size(); ++p)
        if (sq.left(sq.to_left(p)) != sq.right(sq.to_right(p))) throw PreconditionError("square does not commute");
}

}  // namespace

bool is_pullback_square(const Square& sq) {
    check_square_shape(sq);
    std::set<std::pair<std::uint32_t, std::uint32_t>> image;
    for (std::uint32_t p = 0; p < sq.to_left.source_size(); ++p)
        if (!image.emplace(sq.to_left(p), sq.to_right(p)).second) return false;
    const auto lf = sq.left.fibers();
    const auto rf = sq.right.fibers();
    std::size_t fiber_product = 0;
    for (std::size_t c = 0; c < lf.size(); ++c) fiber_product += lf[c].size() * rf[c].size();
    return image.size() == fiber_product;
}

bool is_pullback_square(const std::pair<FinSurjection, FinSurjection>& top,
                        const std::pair<FinSurjection, FinSurjection>& bottom) {
    return is_pullback_square(Square{top.first, top.second, bottom.first, bottom.second});
}

Square pullback(const FinSurjection& left, const FinSurjection& right) {
    if (left.target_size() != right.target_size()) throw PreconditionError("pullback: maps have different targets");
    std::vector<std::uint32_t> pa, pb;
    for (std::uint32_t a = 0; a < left.source_size(); ++a)
        for (std::uint32_t b = 0; b < right.source_size(); ++b)
            if (left(a) == right(b)) {
                pa.push_back(a);
                pb.push_back(b);
            }
    return Square{FinSurjection(left.source_size(), std::move(pa)), FinSurjection(right.source_size(), std::move(pb)),
                  left, right};
}

Square square_sum(const Square& a, const Square& b) {
    return Square{disjoint_sum(a.to_left, b.to_left), disjoint_sum(a.to_right, b.to_right),
                  disjoint_sum(a.left, b.left), disjoint_sum(a.right, b.right)};
}

std::uint64_t count_apex_isomorphisms(const Square& a, const Square& b) {
    if (!(a.left == b.left) || !(a.right == b.right)) throw PreconditionError("squares over different cospans");
    const std::uint32_t n = a.to_left.source_size();
    if (b.to_left.source_size() != n) return 0;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::uint32_t p = 0; p < n && ok; ++p)
            ok = b.to_left(perm[p]) == a.to_left(p) && b.to_right(perm[p]) == a.to_right(p);
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// --- T1 cells -------------------------------------------------------------

T1Cell::T1Cell(FinSurjection down_map, FinSurjection right_map)
    : down(std::move(down_map)), right(std::move(right_map)) {
    if (down.source_size() != right.source_size()) throw PreconditionError("T1 cell maps have different sources");
    (void)horizontal();
}

FinSurjection T1Cell::horizontal() const {
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> h(down.target_size(), unset);
    for (std::uint32_t x = 0; x < down.source_size(); ++x) {
        auto& slot = h[down(x)];
        if (slot == unset)
            slot = right(x);
        else if (slot != right(x))
            throw PreconditionError("right map does not factor through down map");
    }
    return FinSurjection(right.target_size(), std::move(h));
}

T1Cell connected_cell(const FinSurjection& down) {
    return T1Cell(down, FinSurjection::to_point(down.source_size()));
}

VectorMultiset t1_class(const T1Cell& c) {
    const auto h = c.horizontal();
    const auto down_fibers = c.down.fibers();
    std::vector<std::vector<std::uint32_t>> dense(c.t11());
    for (std::uint32_t y = 0; y < c.t00(); ++y) {
        auto& d = dense[h(y)];
        const auto size = down_fibers[y].size();
        if (d.size() < size) d.resize(size, 0);
        ++d[size - 1];
    }
    std::vector<PartitionVector> elems;
    for (const auto& d : dense) elems.push_back(PartitionVector::canonical(d));
    return VectorMultiset(std::move(elems));
}

namespace {

// Counts bijections beta of t01 for which alpha . a.down = b.down . beta and
// gamma . a.right = b.right . beta define maps alpha, gamma; stops at the
// first one when first_only is set.
std::uint64_t count_cell_isomorphisms(const T1Cell& a, const T1Cell& b, bool first_only) {
    if (a.t00() != b.t00() || a.t01() != b.t01() || a.t11() != b.t11()) return 0;
    const std::uint32_t n = a.t01();
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> beta(n), alpha, gamma;
    std::iota(beta.begin(), beta.end(), 0u);
    std::uint64_t count = 0;
    do {
        alpha.assign(a.t00(), unset);
        gamma.assign(a.t11(), unset);
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x) {
            auto& al = alpha[a.down(x)];
            const auto target_down = b.down(beta[x]);
            if (al == unset)
                al = target_down;
            else
                ok = al == target_down;
            auto& ga = gamma[a.right(x)];
            const auto target_right = b.right(beta[x]);
            if (ga == unset)
                ga = target_right;
            else
                ok = ok && ga == target_right;
        }
        if (ok) {
            ++count;
            if (first_only) return count;
        }
    } while (std::next_permutation(beta.begin(), beta.end()));
    return count;
}

}  // namespace

Integer aut_count(const T1Cell& c) {
    return Integer(static_cast<unsigned long>(count_cell_isomorphisms(c, c, false)));
}

bool is_isomorphic(const T1Cell& a, const T1Cell& b) { return count_cell_isomorphisms(a, b, true) > 0; }

T1Cell monoidal_sum(const T1Cell& c, const T1Cell& d) {
    return T1Cell(disjoint_sum(c.down, d.down), disjoint_sum(c.right, d.right));
}

// --- Simplex --------------------------------------------------------------

Simplex::Simplex(std::uint32_t t00)
    : dim_(0), sizes_{{t00}}, left_{{FinSurjection{}}}, right_{{FinSurjection{}}} {}

Simplex Simplex::from_t1(const T1Cell& c) { return Simplex(c.t00()).extend(c); }

FinSurjection Simplex::path(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) const {
    if (!(i <= k && k <= l && l <= j && j <= dim_)) throw PreconditionError("Simplex::path: no such arrow");
    FinSurjection m = FinSurjection::identity(sizes_[i][j]);
    for (std::uint32_t a = i; a < k; ++a) m = compose(right_[a][j], m);
    for (std::uint32_t b = j; b > l; --b) m = compose(left_[k][b], m);
    return m;
}

FinSurjection Simplex::horizontal_path(std::uint32_t i, std::uint32_t k) const {
    if (!(i <= k && k <= dim_)) throw PreconditionError("Simplex::horizontal_path: no such arrow");
    FinSurjection m = FinSurjection::identity(sizes_[i][i]);
    for (std::uint32_t a = i; a < k; ++a) m = compose(horizontal_[a], m);
    return m;
}

void Simplex::validate() const {
    const auto where = [](const char* what, std::uint32_t i, std::uint32_t j) {
        return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (std::uint32_t i = 0; i < dim_; ++i) {
        const auto& h = horizontal_[i];
        if (h.source_size() != sizes_[i][i] || h.target_size() != sizes_[i + 1][i + 1])
            throw PreconditionError(where("horizontal has wrong shape", i, i));
    }
    for (std::uint32_t i = 0; i <= dim_; ++i)
        for (std::uint32_t j = i + 1; j <= dim_; ++j) {
            const auto& l = left_[i][j];
            const auto& r = right_[i][j];
            if (l.source_size() != sizes_[i][j] || l.target_size() != sizes_[i][j - 1])
                throw PreconditionError(where("left map has wrong shape", i, j));
            if (r.source_size() != sizes_[i][j] || r.target_size() != sizes_[i + 1][j])
                throw PreconditionError(where("right map has wrong shape", i, j));
        }
    for (std::uint32_t i = 0; i < dim_; ++i)
        if (!(compose(horizontal_[i], left_[i][i + 1]) == right_[i][i + 1]))
            throw PreconditionError(where("triangle does not commute", i, i + 1));
    for (std::uint32_t i = 0; i <= dim_; ++i)
        for (std::uint32_t j = i + 2; j <= dim_; ++j) {
            const Square sq{left_[i][j], right_[i][j], right_[i][j - 1], left_[i + 1][j]};
            bool pb = false;
            try {
                pb = is_pullback_square(sq);
            } catch (const PreconditionError&) {
                throw PreconditionError(where("square does not commute", i, j));
            }
            if (!pb) throw PreconditionError(where("square is not a pullback", i, j));
        }
}

bool Simplex::is_valid() const {
    try {
        validate();
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

Simplex Simplex::face(std::uint32_t k) const {
    if (dim_ == 0 || k > dim_) throw PreconditionError("face index out of range");
    const auto delta = [k](std::uint32_t a) { return a < k ? a : a + 1; };
    Simplex out;
    out.dim_ = dim_ - 1;
    const std::uint32_t n = out.dim_;
    out.sizes_.assign(n + 1, std::vector<std::uint32_t>(n + 1, 0));
    out.left_.assign(n + 1, std::vector<FinSurjection>(n + 1));
    out.right_.assign(n + 1, std::vector<FinSurjection>(n + 1));
    for (std::uint32_t a = 0; a <= n; ++a)
        for (std::uint32_t b = a; b <= n; ++b) {
            out.sizes_[a][b] = sizes_[delta(a)][delta(b)];
            if (b > a) {
                out.left_[a][b] = path(delta(a), delta(b), delta(a), delta(b - 1));
                out.right_[a][b] = path(delta(a), delta(b), delta(a + 1), delta(b));
            }
        }
    for (std::uint32_t a = 0; a < n; ++a) out.horizontal_.push_back(horizontal_path(delta(a), delta(a + 1)));
    return out;
}

Simplex Simplex::degeneracy(std::uint32_t k) const {
    if (k > dim_) throw PreconditionError("degeneracy index out of range");
    const auto sigma = [k](std::uint32_t a) { return a <= k ? a : a - 1; };
    Simplex out;
    out.dim_ = dim_ + 1;
    const std::uint32_t n = out.dim_;
    out.sizes_.assign(n + 1, std::vector<std::uint32_t>(n + 1, 0));
    out.left_.assign(n + 1, std::vector<FinSurjection>(n + 1));
    out.right_.assign(n + 1, std::vector<FinSurjection>(n + 1));
    for (std::uint32_t a = 0; a <= n; ++a)
        for (std::uint32_t b = a; b <= n; ++b) {
            out.sizes_[a][b] = sizes_[sigma(a)][sigma(b)];
            if (b > a) {
                out.left_[a][b] = path(sigma(a), sigma(b), sigma(a), sigma(b - 1));
                out.right_[a][b] = path(sigma(a), sigma(b), sigma(a + 1), sigma(b));
            }
        }
    for (std::uint32_t a = 0; a < n; ++a) out.horizontal_.push_back(horizontal_path(sigma(a), sigma(a + 1)));
    return out;
}

T1Cell Simplex::to_t1() const {
    if (dim_ != 1) throw PreconditionError("to_t1 requires a 1-simplex");
    return T1Cell(left_[0][1], right_[0][1]);
}

Simplex Simplex::extend(const T1Cell& next) const {
    const std::uint32_t n = dim_;
    if (next.t00() != sizes_[n][n])
        throw PreconditionError("gluing mismatch: last vertex has " + std::to_string(sizes_[n][n]) +
                                " elements, next cell starts at " + std::to_string(next.t00()));
    Simplex out;
    out.dim_ = n + 1;
    out.sizes_.assign(n + 2, std::vector<std::uint32_t>(n + 2, 0));
    out.left_.assign(n + 2, std::vector<FinSurjection>(n + 2));
    out.right_.assign(n + 2, std::vector<FinSurjection>(n + 2));
    for (std::uint32_t a = 0; a <= n; ++a)
        for (std::uint32_t b = a; b <= n; ++b) {
            out.sizes_[a][b] = sizes_[a][b];
            out.left_[a][b] = left_[a][b];
            out.right_[a][b] = right_[a][b];
        }
    out.horizontal_ = horizontal_;
    out.horizontal_.push_back(next.horizontal());
    out.sizes_[n + 1][n + 1] = next.t11();
    out.sizes_[n][n + 1] = next.t01();
    out.left_[n][n + 1] = next.down;
    out.right_[n][n + 1] = next.right;
    for (std::uint32_t i = n; i-- > 0;) {
        // t_{i,n+1} = t_{i,n} x_{t_{i+1,n}} t_{i+1,n+1}
        Square sq = pullback(right_[i][n], out.left_[i + 1][n + 1]);
        out.sizes_[i][n + 1] = sq.to_left.source_size();
        out.left_[i][n + 1] = std::move(sq.to_left);
        out.right_[i][n + 1] = std::move(sq.to_right);
    }
    return out;
}

Simplex Simplex::make_t2(const FinSurjection& l01, const FinSurjection& r01, const FinSurjection& l12,
                         const FinSurjection& r12, const FinSurjection& l02, const FinSurjection& r02,
                         const FinSurjection& h0, const FinSurjection& h1) {
    Simplex out;
    out.dim_ = 2;
    out.sizes_ = {{l01.target_size(), l01.source_size(), l02.source_size()},
                  {0, r01.target_size(), l12.source_size()},
                  {0, 0, r12.target_size()}};
    out.left_.assign(3, std::vector<FinSurjection>(3));
    out.right_.assign(3, std::vector<FinSurjection>(3));
    out.left_[0][1] = l01;
    out.right_[0][1] = r01;
    out.left_[1][2] = l12;
    out.right_[1][2] = r12;
    out.left_[0][2] = l02;
    out.right_[0][2] = r02;
    out.horizontal_ = {h0, h1};
    out.validate();
    return out;
}

std::array<T1Cell, 3> faces(const T2Cell& t) {
    if (t.dim() != 2) throw PreconditionError("faces: expected a 2-simplex");
    return {t.face(2).to_t1(), t.face(1).to_t1(), t.face(0).to_t1()};
}

std::array<T2Cell, 2> degeneracies(const T1Cell& c) {
    const Simplex s = Simplex::from_t1(c);
    return {s.degeneracy(0), s.degeneracy(1)};
}

T2Cell segal_completion(const T1Cell& left, const T1Cell& right) {
    if (left.t11() != right.t00())
        throw PreconditionError("gluing mismatch: left cell ends at " + std::to_string(left.t11()) +
                                " elements, right cell starts at " + std::to_string(right.t00()));
    return Simplex::from_t1(left).extend(right);
}

// --- objective comultiplication --------------------------------------------

std::vector<VerschiebungTerm> objective_verschiebung(const T2Cell& t) {
    if (t.dim() != 2 || !t.connected()) throw PreconditionError("objective_verschiebung needs a connected 2-simplex");
    const auto& down = t.left(0, 1);
    const auto& h0 = t.horizontal(0);
    const auto& t12_to_t11 = t.left(1, 2);
    const auto down_fibers = down.fibers();
    const auto t12_fibers = t12_to_t11.fibers();
    std::vector<std::vector<std::uint32_t>> dense(t.size(1, 1));
    for (std::uint32_t y = 0; y < t.size(0, 0); ++y) {
        auto& d = dense[h0(y)];
        const auto size = down_fibers[y].size();
        if (d.size() < size) d.resize(size, 0);
        ++d[size - 1];
    }
    std::vector<VerschiebungTerm> out;
    for (std::uint32_t r = 0; r < t.size(1, 1); ++r)
        out.push_back({PartitionVector::canonical(dense[r]), static_cast<std::uint32_t>(t12_fibers[r].size())});
    return out;
}

PartitionVector verschiebung_sum(std::span<const VerschiebungTerm> terms) {
    PartitionVector s;
    for (const auto& t : terms) s = s + verschiebung(t.k, t.mu);
    return s;
}

Integer iso_fiber_count(const T1Cell& tau, const T1Cell& lambda_cell, const T1Cell& sigma) {
    if (!lambda_cell.connected() || !sigma.connected())
        throw PreconditionError("iso_fiber_count: lambda and sigma must be connected");
    if (tau.t11() != lambda_cell.t00()) return 0;
    std::vector<std::uint32_t> phi(tau.t11());
    std::iota(phi.begin(), phi.end(), 0u);
    std::uint64_t hits = 0;
    do {
        const T1Cell glued_tau(tau.down, relabel_target(tau.right, phi));
        const T1Cell composite = segal_completion(glued_tau, lambda_cell).face(1).to_t1();
        if (is_isomorphic(composite, sigma)) ++hits;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return Integer(static_cast<unsigned long>(hits)) * aut_count(sigma);
}

PTensor objective_delta(const T1Cell& sigma) {
    if (!sigma.connected()) throw PreconditionError("objective_delta needs a connected cell");
    // d1 keeps t00, and |t01|, |t12| <= |t02| = sigma.t01().
    const auto classes = t1_iso_classes(sigma.t01());
    PTensor result;
    for (const auto& lambda_cell : classes) {
        if (!lambda_cell.connected()) continue;
        const Integer lambda_aut = aut_count(lambda_cell);
        const PMonomial right{fiber_profile(lambda_cell.down)};
        for (const auto& tau : classes) {
            if (tau.t00() != sigma.t00() || tau.t11() != lambda_cell.t00()) continue;
            const Integer count = iso_fiber_count(tau, lambda_cell, sigma);
            if (count == 0) continue;
            Rational coeff(count, lambda_aut * aut_count(tau));
            coeff.canonicalize();
            result.add_term(t1_class(tau), right, coeff);
        }
    }
    return result;
}

Rational homotopy_cardinality(std::span<const Integer> aut_counts) {
    Rational sum = 0;
    for (const auto& a : aut_counts) {
        if (a <= 0) throw PreconditionError("automorphism counts must be positive");
        sum += Rational(1, a);
    }
    sum.canonicalize();
    return sum;
}

// --- enumeration ----------------------------------------------------------

std::vector<FinSurjection> enumerate_set_partitions(std::uint32_t n) {
    std::vector<FinSurjection> out;
    std::vector<std::uint32_t> rgs(n, 0);
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t pos, std::uint32_t blocks) {
        if (pos == n) {
            out.emplace_back(blocks, rgs);
            return;
        }
        for (std::uint32_t b = 0; b <= blocks; ++b) {
            rgs[pos] = b;
            rec(pos + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

std::vector<FinSurjection> enumerate_surjections(std::uint32_t n, std::uint32_t m) {
    std::vector<FinSurjection> out;
    if (m > n || (m == 0 && n > 0)) return out;
    std::vector<std::uint32_t> a(n, 0);
    while (true) {
        std::vector<bool> hit(m, false);
        for (auto y : a) hit[y] = true;
        if (std::find(hit.begin(), hit.end(), false) == hit.end()) out.emplace_back(m, a);
        std::uint32_t i = 0;
        while (i < n && ++a[i] == m) a[i++] = 0;
        if (i == n) break;
    }
    return out;
}

std::vector<T1Cell> enumerate_t1_cells(std::uint32_t max_t01) {
    std::vector<T1Cell> out;
    for (std::uint32_t n = 0; n <= max_t01; ++n)
        for (const auto& down : enumerate_set_partitions(n))
            for (const auto& h : enumerate_set_partitions(down.target_size()))
                out.emplace_back(down, compose(h, down));
    return out;
}

std::vector<T1Cell> t1_iso_classes(std::uint32_t max_t01) {
    using Bucket = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, VectorMultiset>;
    std::map<Bucket, std::vector<T1Cell>> buckets;
    std::vector<T1Cell> reps;
    for (auto& cell : enumerate_t1_cells(max_t01)) {
        auto& bucket = buckets[Bucket{cell.t00(), cell.t01(), cell.t11(), t1_class(cell)}];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](const T1Cell& rep) { return is_isomorphic(rep, cell); });
        if (!seen) {
            bucket.push_back(cell);
            reps.push_back(cell);
        }
    }
    return reps;
}

}  // namespace pleth
