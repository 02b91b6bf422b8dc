#include <doctest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "pleth/bialgebra.hpp"
#include "pleth/errors.hpp"
#include "pleth/verify.hpp"

using namespace pleth;

namespace {

PartitionVector pv(std::initializer_list<std::uint32_t> raw) { return PartitionVector::canonical(raw); }
PMonomial mono(std::initializer_list<PartitionVector> v) { return PMonomial(std::vector(v)); }
PartitionVector n1(std::uint32_t n) { return PartitionVector::unit(1, n); }  // the vector (n)

PTensor tensor(std::initializer_list<std::tuple<PMonomial, PMonomial, Rational>> terms) {
    PTensor t;
    for (const auto& [l, r, c] : terms) t.add_term(l, r, c);
    return t;
}

}  // namespace

TEST_CASE("enumerate_decompositions") {
    const auto a = enumerate_decompositions(pv({2}), pv({2}));
    REQUIRE(a.size() == 1);
    CHECK(a[0].cells.size() == 2);
    CHECK(a[0].cells[0] == std::pair{1u, pv({1})});
    CHECK(a[0].cells[1] == std::pair{1u, pv({1})});
    const auto b = enumerate_decompositions(pv({0, 1}), pv({0, 1}));
    REQUIRE(b.size() == 1);
    CHECK(b[0].cells == std::vector{std::pair{2u, pv({1})}});
    CHECK(enumerate_decompositions(pv({1}), pv({0, 1})).empty());
    // every tuple satisfies the defining constraint
    for (const auto& sigma : enumerate_vectors(5, WeightMode::upto))
        for (const auto& lambda : enumerate_vectors(sigma.weight(), WeightMode::upto))
            for (const auto& t : enumerate_decompositions(sigma, lambda)) {
                PartitionVector s;
                PartitionVector cols;
                for (const auto& [i, mu] : t.cells) {
                    CHECK_FALSE(mu.is_zero());
                    s = s + verschiebung(i, mu);
                    cols = cols + PartitionVector::unit(i);
                }
                CHECK(s == sigma);
                CHECK(cols == lambda);
            }
}

TEST_CASE("count_placements") {
    CHECK(count_placements(pv({3}), pv({2}), mono({pv({1}), pv({2})})) == 2);
    CHECK(count_placements(pv({0, 1}), pv({1}), mono({pv({0, 1})})) == 1);
    CHECK(count_placements(pv({3}), pv({2}), mono({pv({3})})) == 0);
    CHECK(count_placements(pv({2}), pv({2}), mono({pv({1}), pv({1})})) == 2);
}

TEST_CASE("delta_generator examples") {
    const auto A1 = mono({pv({1})});
    CHECK(delta_generator(pv({1})) == tensor({{A1, A1, 1}}));
    CHECK(delta_generator(pv({0, 1})) ==
          tensor({{mono({pv({0, 1})}), A1, 1}, {A1, mono({pv({0, 1})}), 1}}));
    CHECK(delta_generator(pv({2})) == tensor({{mono({pv({2})}), A1, 1}, {mono({pv({1}), pv({1})}), mono({pv({2})}), 1}}));
    CHECK(classical_delta(3) == tensor({{mono({n1(3)}), A1, 1},
                                        {mono({n1(1), n1(2)}), mono({n1(2)}), 3},
                                        {mono({n1(1), n1(1), n1(1)}), mono({n1(3)}), 1}}));
    CHECK_THROWS_AS(delta_generator(pv({})), PreconditionError);
}

TEST_CASE("coproduct shape: positive coefficients, single right generators") {
    for (const auto& sigma : enumerate_vectors(5, WeightMode::upto))
        for (const PTensor d = delta_generator(sigma); const auto& [key, c] : d.terms()) {
            CHECK(c > 0);
            REQUIRE(key.second.size() == 1);
            CHECK(key.second.elements()[0].weight() <= sigma.weight());
        }
}

TEST_CASE("delta on products and sums") {
    const auto A1 = PElement::generator(pv({1}));
    CHECK(delta(PElement::one()) == PTensor::one());
    CHECK(delta(A1 * A1) == tensor({{mono({pv({1}), pv({1})}), mono({pv({1}), pv({1})}), 1}}));
    const auto B = PElement::generator(pv({0, 1}));
    CHECK(delta(A1 + B) == delta_generator(pv({1})) + delta_generator(pv({0, 1})));
    CHECK(delta(Rational(3) * B) == Rational(3) * delta_generator(pv({0, 1})));
}

TEST_CASE("counit") {
    CHECK(counit(PElement::generator(pv({1}))) == 1);
    CHECK(counit(PElement::generator(pv({0, 1}))) == 0);
    CHECK(counit(PElement::generator(pv({1})) * PElement::generator(pv({1}))) == 1);
    CHECK(counit(PElement::one()) == 1);
    for (const auto& sigma : enumerate_vectors(5, WeightMode::upto)) {
        CHECK(counit_left(sigma) == PElement::generator(sigma));
        CHECK(counit_right(sigma) == PElement::generator(sigma));
    }
}

TEST_CASE("bell") {
    CHECK(bell(n1(3), n1(2)) == PElement::monomial(mono({n1(1), n1(2)}), 3));
    CHECK(bell(pv({1}), pv({1})) == PElement::generator(pv({1})));
    CHECK(bell(pv({1}), pv({0, 1})).is_zero());
}

TEST_CASE("pairings") {
    const auto x1 = TruncatedSeries::variable(1, 3), x2 = TruncatedSeries::variable(2, 3);
    CHECK(pair_element(PElement::generator(pv({0, 1})), x2) == 2);
    CHECK(pair_tensor(PTensor::one(), x1, x2) == 1);
    CHECK(pair_tensor(delta_generator(pv({0, 1})), x2, x1) == 2);
    CHECK(plethysm(x1, x2).coefficient(pv({0, 1})) == 2);
    CHECK_THROWS_AS(pair_element(PElement::generator(pv({0, 0, 0, 1})), x1), PreconditionError);
}

TEST_CASE("duality with plethysm on random series") {
    std::mt19937_64 rng(99);
    for (std::uint32_t w = 1; w <= 4; ++w)
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = verify::random_series(rng, w, false);
            const auto g = verify::random_series(rng, w, true);
            const auto gf = plethysm(g, f);
            for (const auto& sigma : enumerate_vectors(w, WeightMode::upto))
                CHECK(pair_tensor(delta_generator(sigma), f, g) == gf.coefficient(sigma));
        }
}

TEST_CASE("tuple and multiset routes agree") {
    for (const auto& sigma : enumerate_vectors(5, WeightMode::upto))
        CHECK(delta_generator(sigma) == delta_generator_multiset(sigma));
}

TEST_CASE("coassociativity") {
    for (const auto& sigma : enumerate_vectors(4, WeightMode::upto))
        CHECK(coassociator_left(sigma) == coassociator_right(sigma));
}

TEST_CASE("classical coproduct matches the multinomial oracle") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const auto ref = oracle::faa_di_bruno(n);
        PTensor expected;
        for (const auto& [key, q] : ref) {
            std::vector<PartitionVector> left;
            for (auto p : key.first) left.push_back(n1(p));
            expected.add_term(PMonomial(left), mono({n1(key.second)}), q);
        }
        CHECK(classical_delta(n) == expected);
    }
}

TEST_CASE("Bell polynomials match the univariate oracle") {
    for (std::uint32_t n = 1; n <= 6; ++n)
        for (std::uint32_t k = 1; k <= n; ++k) {
            PElement expected;
            for (const auto& [e, q] : oracle::bell(n, k)) {
                std::vector<PartitionVector> m;
                for (std::size_t j = 0; j < e.size(); ++j)
                    for (std::uint32_t r = 0; r < e[j]; ++r) m.push_back(n1(static_cast<std::uint32_t>(j + 1)));
                expected.add_term(PMonomial(m), q);
            }
            CHECK(bell(n1(n), n1(k)) == expected);
        }
}

TEST_CASE("green function") {
    const auto [l0, r0] = green_delta(0);
    CHECK(l0.is_zero());
    CHECK(r0.is_zero());
    const auto [l1, r1] = green_delta(1);
    CHECK(l1 == tensor({{mono({pv({1})}), mono({pv({1})}), 1}}));
    CHECK(r1 == l1);
    for (std::uint32_t w = 2; w <= 5; ++w) {
        const auto [l, r] = green_delta(w);
        CHECK(l == r);
    }
}

TEST_CASE("placement_weight_bound") {
    // two cells in column 1 and one in column 2: heaviest factor goes to column 2
    CHECK(placement_weight_bound(mono({pv({1}), pv({2}), pv({0, 1})}), pv({2, 1})) == 1 + 2 + 2 * 2);
    CHECK_THROWS_AS(placement_weight_bound(mono({pv({1})}), pv({2})), PreconditionError);
}

TEST_CASE("memoized delta_generator is safe under concurrent use") {
    std::vector<std::thread> threads;
    std::vector<PTensor> results(8);
    for (int i = 0; i < 8; ++i) threads.emplace_back([&, i] { results[i] = delta_generator(pv({1, 1, 1})); });
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == delta_generator_multiset(pv({1, 1, 1})));
}
