#include <doctest.h>

#include "oracles.hpp"
#include "pleth/errors.hpp"
#include "pleth/partition.hpp"

using namespace pleth;

namespace {

Partition part(std::uint32_t n, std::vector<std::vector<std::uint32_t>> blocks) { return Partition(n, std::move(blocks)); }

oracle::Relation relation(const Partition& p) {
    std::vector<std::uint32_t> labels(p.ground_size());
    for (std::uint32_t x = 0; x < p.ground_size(); ++x) labels[x] = p.block_of(x);
    return oracle::relation_of_labels(labels);
}

Partition from_labels(const std::vector<std::uint32_t>& labels) {
    std::uint32_t m = 0;
    for (auto l : labels) m = std::max(m, l + 1);
    return Partition::from_surjection(FinSurjection(m, labels));
}

}  // namespace

TEST_CASE("partition construction") {
    const auto p = part(3, {{2}, {1, 0}});
    CHECK(p.blocks() == std::vector<std::vector<std::uint32_t>>{{0, 1}, {2}});
    CHECK(p.block_of(2) == 1);
    CHECK_THROWS_AS(part(3, {{0, 1}}), PreconditionError);
    CHECK_THROWS_AS(part(2, {{0, 1}, {1}}), PreconditionError);
    CHECK_THROWS_AS(part(2, {{0, 1}, {}}), PreconditionError);
    CHECK_THROWS_AS(part(2, {{0, 2}}), PreconditionError);
    CHECK(partition_to_surjection(p) == FinSurjection(2, {0, 0, 1}));
    CHECK(Partition::from_surjection(partition_to_surjection(p)) == p);
    CHECK(enumerate_partitions(5).size() == 52);
}

TEST_CASE("dictionary examples") {
    // {{1,2},{3}} and {{1,3},{2}} relabelled onto 0..2
    const auto pi = part(3, {{0, 1}, {2}}), tau = part(3, {{0, 2}, {1}});
    CHECK(join(pi, tau) == Partition::indiscrete(3));
    CHECK(meet(pi, tau) == Partition::discrete(3));
    const auto d = partition_diagram(pi, tau);
    CHECK(d.fiber_product.size() == 4);
    CHECK(d.s_to_i.target_size() == 1);
    CHECK_FALSE(commute(pi, tau));

    CHECK(join(pi, pi) == pi);
    CHECK(meet(pi, pi) == pi);
    CHECK(partition_diagram(pi, pi).fiber_product.size() == pi.block_count());
    for (const auto& t : enumerate_partitions(4)) CHECK(meet(Partition::discrete(4), t) == Partition::discrete(4));

    const auto a = part(4, {{0, 1}, {2, 3}}), b = part(4, {{0, 2}, {1, 3}});
    CHECK(independent(a, b));
    CHECK(independent(Partition::discrete(1), Partition::discrete(1)));
    CHECK_FALSE(independent(a, a));
    CHECK(commute(a, a));

    CHECK(is_transversal(Partition::indiscrete(4), a, b));
    CHECK(is_transversal(a, a, Partition::discrete(4)));
    CHECK_FALSE(is_transversal(Partition::discrete(4), a, b));  // pi is not finer than sigma
    CHECK_THROWS_AS(join(a, pi), PreconditionError);
}

TEST_CASE("transversal gives a connected 2-simplex") {
    const auto a = part(4, {{0, 1}, {2, 3}}), b = part(4, {{0, 2}, {1, 3}});
    const auto t = diagrammatic::transversal_simplex(Partition::indiscrete(4), a, b);
    REQUIRE(t.has_value());
    CHECK(t->is_valid());
    CHECK(t->connected());
    CHECK(t->size(0, 2) == 4);
    CHECK(t->size(0, 0) == 1);
    CHECK_FALSE(diagrammatic::transversal_simplex(Partition::discrete(4), a, b).has_value());
}

TEST_CASE("library agrees with relation oracles, n <= 4") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        const auto labellings = oracle::all_labellings(n);
        for (const auto& lp : labellings)
            for (const auto& lt : labellings) {
                const auto pi = from_labels(lp), tau = from_labels(lt);
                const auto rp = oracle::relation_of_labels(lp), rt = oracle::relation_of_labels(lt);
                CHECK(relation(join(pi, tau)) == oracle::relation_join(rp, rt));
                CHECK(relation(meet(pi, tau)) == oracle::relation_meet(rp, rt));
                CHECK(commute(pi, tau) == (oracle::compose(rp, rt) == oracle::compose(rt, rp)));
                bool every_pair_meets = true;
                for (const auto& b : pi.blocks())
                    for (const auto& c : tau.blocks()) {
                        bool meets = false;
                        for (auto x : b) meets = meets || tau.block_of(x) == tau.block_of(c.front());
                        every_pair_meets = every_pair_meets && meets;
                    }
                CHECK(independent(pi, tau) == every_pair_meets);
            }
    }
}

TEST_CASE("both routes agree exhaustively, n <= 4") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& pi : all)
            for (const auto& tau : all) {
                CHECK(blockwise::commute(pi, tau) == diagrammatic::commute(pi, tau));
                CHECK(blockwise::independent(pi, tau) == diagrammatic::independent(pi, tau));
                CHECK(blockwise::refines(pi, tau) == diagrammatic::refines(pi, tau));
                for (const auto& sigma : all)
                    CHECK(blockwise::is_transversal(sigma, pi, tau) == diagrammatic::is_transversal(sigma, pi, tau));
            }
    }
}
