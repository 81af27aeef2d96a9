#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "apll/group.hpp"

using namespace apll;

namespace {

GroupElement el(std::vector<std::int64_t> r) { return GroupElement{std::move(r)}; }

// p(e): number of partitions, small-e table
int partition_count(int e) {
    static const int table[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    return table[e];
}

}  // namespace

TEST_CASE("group enumeration covers each isomorphism class once") {
    CHECK(enumerate_abelian_groups(3).size() == 1);
    auto g4 = enumerate_abelian_groups(4);
    REQUIRE(g4.size() == 2);
    CHECK(g4[0].invariant_factors() == std::vector<std::int64_t>{2, 2});
    CHECK(g4[1].invariant_factors() == std::vector<std::int64_t>{4});
    auto g133 = enumerate_abelian_groups(133);
    REQUIRE(g133.size() == 1);
    CHECK(g133[0].invariant_factors() == std::vector<std::int64_t>{133});
    CHECK(enumerate_abelian_groups(1).size() == 1);
    CHECK(enumerate_abelian_groups(1)[0].order() == 1);
}

TEST_CASE("group count equals the product of exponent partition numbers") {
    for (std::int64_t m = 1; m <= 200; ++m) {
        std::size_t expected = 1;
        for (const auto& pp : factor(m).factors)
            expected *= static_cast<std::size_t>(partition_count(pp.exponent));
        CHECK(enumerate_abelian_groups(m).size() == expected);
    }
}

TEST_CASE("squarefree orders force a single cyclic group") {
    for (std::int64_t m = 2; m <= 300; ++m) {
        bool squarefree = true;
        for (const auto& pp : factor(m).factors)
            if (pp.exponent > 1) squarefree = false;
        if (!squarefree) continue;
        auto gs = enumerate_abelian_groups(m);
        REQUIRE(gs.size() == 1);
        CHECK(gs[0].invariant_factors() == std::vector<std::int64_t>{m});
    }
}

TEST_CASE("componentwise arithmetic in a cyclic group") {
    auto g = make_group({7});
    CHECK(g->compose(el({2}), el({5})) == el({0}));
    CHECK(g->inverse(el({3})) == el({4}));
    CHECK(g->power(el({2}), 3) == el({6}));
    CHECK(g->power(el({2}), -1) == el({5}));
    CHECK(g->power(el({2}), 0) == g->identity());
}

TEST_CASE("arithmetic in a two-factor group") {
    auto g = make_group({3, 9});
    CHECK(g->order() == 27);
    CHECK(g->compose(el({2, 7}), el({2, 5})) == el({1, 3}));
    CHECK(g->inverse(el({1, 4})) == el({2, 5}));
    CHECK(g->power(el({1, 2}), 5) == el({2, 1}));
}

TEST_CASE("elements of a foreign group are rejected") {
    auto g = make_group({7});
    CHECK_THROWS_AS(g->compose(el({2, 1}), el({5})), std::invalid_argument);
    CHECK_THROWS_AS(g->rank_of(el({9})), std::invalid_argument);
}

TEST_CASE("rank and unrank roundtrip in canonical order") {
    for (auto factors : std::vector<std::vector<std::int64_t>>{{12}, {2, 6}, {3, 3, 3}}) {
        auto g = make_group(factors);
        GroupElement prev;
        for (std::int64_t r = 0; r < g->order(); ++r) {
            GroupElement e = g->element_at(r);
            CHECK(g->rank_of(e) == r);
            if (r > 0) CHECK(prev < e);  // rank order is lexicographic
            prev = e;
        }
    }
}

TEST_CASE("rank-level arithmetic agrees with element arithmetic") {
    auto g = make_group({3, 9});
    for (std::int64_t a = 0; a < g->order(); ++a)
        for (std::int64_t b = 0; b < g->order(); ++b) {
            CHECK(g->compose_ranks(a, b) ==
                  g->rank_of(g->compose(g->element_at(a), g->element_at(b))));
        }
    for (std::int64_t a = 0; a < g->order(); ++a) {
        CHECK(g->inverse_rank(a) == g->rank_of(g->inverse(g->element_at(a))));
        for (std::int64_t t = -5; t <= 5; ++t)
            CHECK(g->power_rank(a, t) == g->rank_of(g->power(g->element_at(a), t)));
    }
}

TEST_CASE("invalid invariant factors are rejected") {
    CHECK_THROWS_AS(make_group({1}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({4, 6}), std::invalid_argument);  // 4 does not divide 6
}
