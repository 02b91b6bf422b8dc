#include "pleth/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "pleth/errors.hpp"

namespace pleth {

Partition::Partition(std::uint32_t ground_size, std::vector<std::vector<std::uint32_t>> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
    constexpr std::uint32_t unset = UINT32_MAX;
    block_index_.assign(ground_size, unset);
    for (auto& b : blocks_) {
        if (b.empty()) throw PreconditionError("partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
    for (std::uint32_t i = 0; i < blocks_.size(); ++i)
        for (std::uint32_t x : blocks_[i]) {
            if (x >= ground_size)
                throw PreconditionError("element " + std::to_string(x) + " outside ground set of size " +
                                        std::to_string(ground_size));
            if (block_index_[x] != unset) throw PreconditionError("element " + std::to_string(x) + " repeated");
            block_index_[x] = i;
        }
    for (std::uint32_t x = 0; x < ground_size; ++x)
        if (block_index_[x] == unset) throw PreconditionError("element " + std::to_string(x) + " in no block");
}

Partition Partition::from_surjection(const FinSurjection& s) {
    return Partition(s.source_size(), s.fibers());
}

Partition Partition::discrete(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> blocks;
    for (std::uint32_t x = 0; x < n; ++x) blocks.push_back({x});
    return Partition(n, std::move(blocks));
}

Partition Partition::indiscrete(std::uint32_t n) {
    if (n == 0) return Partition(0, {});
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    return Partition(n, {all});
}

FinSurjection partition_to_surjection(const Partition& p) {
    std::vector<std::uint32_t> a(p.ground_size());
    for (std::uint32_t x = 0; x < a.size(); ++x) a[x] = p.block_of(x);
    return FinSurjection(p.block_count(), std::move(a));
}

namespace {

void require_same_ground(const Partition& a, const Partition& b) {
    if (a.ground_size() != b.ground_size())
        throw PreconditionError("ground-set mismatch: " + std::to_string(a.ground_size()) + " vs " +
                                std::to_string(b.ground_size()));
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// Relabels arbitrary class keys to 0.. in order of first appearance.
FinSurjection classes_to_surjection(const std::vector<std::uint32_t>& keys) {
    std::map<std::uint32_t, std::uint32_t> label;
    std::vector<std::uint32_t> a(keys.size());
    for (std::size_t x = 0; x < keys.size(); ++x) {
        auto it = label.emplace(keys[x], static_cast<std::uint32_t>(label.size())).first;
        a[x] = it->second;
    }
    return FinSurjection(static_cast<std::uint32_t>(label.size()), std::move(a));
}

}  // namespace

PartitionDiagram partition_diagram(const Partition& pi, const Partition& tau) {
    require_same_ground(pi, tau);
    PartitionDiagram d;
    d.pi = partition_to_surjection(pi);
    d.tau = partition_to_surjection(tau);
    const std::uint32_t s = pi.block_count();
    const std::uint32_t x = tau.block_count();
    // Pushout: components of the bipartite graph on S + X with an edge
    // pi(e) -- tau(e) for every e.
    UnionFind uf(s + x);
    for (std::uint32_t e = 0; e < pi.ground_size(); ++e) uf.unite(d.pi(e), s + d.tau(e));
    std::vector<std::uint32_t> roots(s + x);
    for (std::uint32_t v = 0; v < s + x; ++v) roots[v] = uf.find(v);
    const FinSurjection comp = classes_to_surjection(roots);
    std::vector<std::uint32_t> si(comp.assignment().begin(), comp.assignment().begin() + s);
    std::vector<std::uint32_t> xi(comp.assignment().begin() + s, comp.assignment().end());
    d.s_to_i = FinSurjection(comp.target_size(), std::move(si));
    d.x_to_i = FinSurjection(comp.target_size(), std::move(xi));
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t a = 0; a < s; ++a)
        for (std::uint32_t b = 0; b < x; ++b)
            if (d.s_to_i(a) == d.x_to_i(b)) {
                index.emplace(std::pair{a, b}, static_cast<std::uint32_t>(d.fiber_product.size()));
                d.fiber_product.emplace_back(a, b);
            }
    for (std::uint32_t e = 0; e < pi.ground_size(); ++e) d.phi.push_back(index.at({d.pi(e), d.tau(e)}));
    return d;
}

// --- block level ----------------------------------------------------------

namespace blockwise {

Partition join(const Partition& pi, const Partition& tau) {
    require_same_ground(pi, tau);
    UnionFind uf(pi.ground_size());
    for (const auto* p : {&pi, &tau})
        for (const auto& b : p->blocks())
            for (std::uint32_t y : b) uf.unite(b.front(), y);
    std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t e = 0; e < pi.ground_size(); ++e) groups[uf.find(e)].push_back(e);
    std::vector<std::vector<std::uint32_t>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return Partition(pi.ground_size(), std::move(blocks));
}

Partition meet(const Partition& pi, const Partition& tau) {
    require_same_ground(pi, tau);
    std::vector<std::vector<std::uint32_t>> blocks;
    for (const auto& b : pi.blocks())
        for (const auto& c : tau.blocks()) {
            std::vector<std::uint32_t> both;
            std::set_intersection(b.begin(), b.end(), c.begin(), c.end(), std::back_inserter(both));
            if (!both.empty()) blocks.push_back(std::move(both));
        }
    return Partition(pi.ground_size(), std::move(blocks));
}

bool refines(const Partition& finer, const Partition& coarser) {
    require_same_ground(finer, coarser);
    for (const auto& b : finer.blocks()) {
        const auto& target = coarser.blocks()[coarser.block_of(b.front())];
        if (!std::includes(target.begin(), target.end(), b.begin(), b.end())) return false;
    }
    return true;
}

// The equivalence relations commute as relations: pi.tau = tau.pi.
bool commute(const Partition& pi, const Partition& tau) {
    require_same_ground(pi, tau);
    const std::uint32_t n = pi.ground_size();
    auto related = [n](const Partition& first, const Partition& second, std::uint32_t x, std::uint32_t z) {
        for (std::uint32_t y = 0; y < n; ++y)
            if (first.block_of(x) == first.block_of(y) && second.block_of(y) == second.block_of(z)) return true;
        return false;
    };
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t z = 0; z < n; ++z)
            if (related(pi, tau, x, z) != related(tau, pi, x, z)) return false;
    return true;
}

bool independent(const Partition& pi, const Partition& tau) {
    require_same_ground(pi, tau);
    for (const auto& b : pi.blocks())
        for (const auto& c : tau.blocks()) {
            std::vector<std::uint32_t> both;
            std::set_intersection(b.begin(), b.end(), c.begin(), c.end(), std::back_inserter(both));
            if (both.empty()) return false;
        }
    return true;
}

bool is_transversal(const Partition& sigma, const Partition& pi, const Partition& tau) {
    require_same_ground(sigma, pi);
    require_same_ground(pi, tau);
    if (sigma.ground_size() == 0) throw PreconditionError("transversals need a nonempty ground set");
    return blockwise::refines(pi, sigma) && blockwise::meet(pi, tau) == Partition::discrete(pi.ground_size()) &&
           blockwise::commute(pi, tau) && blockwise::join(pi, tau) == blockwise::join(sigma, tau);
}

}  // namespace blockwise

// --- diagram level --------------------------------------------------------

namespace diagrammatic {

namespace {

// g with g . finer = coarser, if it exists.
std::optional<FinSurjection> factor_through(const FinSurjection& coarser, const FinSurjection& finer) {
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> g(finer.target_size(), unset);
    for (std::uint32_t e = 0; e < finer.source_size(); ++e) {
        auto& slot = g[finer(e)];
        if (slot == unset)
            slot = coarser(e);
        else if (slot != coarser(e))
            return std::nullopt;
    }
    return FinSurjection(coarser.target_size(), std::move(g));
}

bool phi_surjective(const PartitionDiagram& d) {
    std::vector<bool> hit(d.fiber_product.size(), false);
    for (auto i : d.phi) hit[i] = true;
    return std::find(hit.begin(), hit.end(), false) == hit.end();
}

}  // namespace

Partition join(const Partition& pi, const Partition& tau) {
    const auto d = partition_diagram(pi, tau);
    return Partition::from_surjection(compose(d.s_to_i, d.pi));
}

Partition meet(const Partition& pi, const Partition& tau) {
    const auto d = partition_diagram(pi, tau);
    return Partition::from_surjection(classes_to_surjection(d.phi));
}

bool refines(const Partition& finer, const Partition& coarser) {
    require_same_ground(finer, coarser);
    return factor_through(partition_to_surjection(coarser), partition_to_surjection(finer)).has_value();
}

bool commute(const Partition& pi, const Partition& tau) { return phi_surjective(partition_diagram(pi, tau)); }

bool independent(const Partition& pi, const Partition& tau) {
    const auto d = partition_diagram(pi, tau);
    return phi_surjective(d) && d.s_to_i.target_size() == 1;
}

std::optional<T2Cell> transversal_simplex(const Partition& sigma, const Partition& pi, const Partition& tau) {
    require_same_ground(sigma, pi);
    if (sigma.ground_size() == 0) throw PreconditionError("transversals need a nonempty ground set");
    const auto d = partition_diagram(pi, tau);
    const auto g = factor_through(partition_to_surjection(sigma), d.pi);  // S ->> B
    if (!g) return std::nullopt;
    const auto h = factor_through(d.s_to_i, *g);  // B ->> I
    if (!h) return std::nullopt;
    try {
        return Simplex::make_t2(*g, d.s_to_i, d.x_to_i, FinSurjection::to_point(d.tau.target_size()), d.pi, d.tau, *h,
                                FinSurjection::to_point(d.s_to_i.target_size()));
    } catch (const PreconditionError&) {
        // the square E, S, X, I is not a pullback: phi is not injective
        return std::nullopt;
    }
}

bool is_transversal(const Partition& sigma, const Partition& pi, const Partition& tau) {
    return transversal_simplex(sigma, pi, tau).has_value();
}

}  // namespace diagrammatic

namespace {

template <class T>
T agree(const T& a, const T& b, const char* what) {
    if (!(a == b)) throw InvariantError(std::string(what) + ": block-level and diagram evaluations disagree");
    return a;
}

}  // namespace

Partition join(const Partition& pi, const Partition& tau) {
    return agree(blockwise::join(pi, tau), diagrammatic::join(pi, tau), "join");
}
Partition meet(const Partition& pi, const Partition& tau) {
    return agree(blockwise::meet(pi, tau), diagrammatic::meet(pi, tau), "meet");
}
bool refines(const Partition& finer, const Partition& coarser) {
    return agree(blockwise::refines(finer, coarser), diagrammatic::refines(finer, coarser), "refines");
}
bool commute(const Partition& pi, const Partition& tau) {
    return agree(blockwise::commute(pi, tau), diagrammatic::commute(pi, tau), "commute");
}
bool independent(const Partition& pi, const Partition& tau) {
    return agree(blockwise::independent(pi, tau), diagrammatic::independent(pi, tau), "independent");
}
bool is_transversal(const Partition& sigma, const Partition& pi, const Partition& tau) {
    return agree(blockwise::is_transversal(sigma, pi, tau), diagrammatic::is_transversal(sigma, pi, tau),
                 "is_transversal");
}

std::vector<Partition> enumerate_partitions(std::uint32_t n) {
    std::vector<Partition> out;
    for (const auto& s : enumerate_set_partitions(n)) out.push_back(Partition::from_surjection(s));
    return out;
}

}  // namespace pleth
