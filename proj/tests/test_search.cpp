#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "apll/profile.hpp"
#include "apll/search.hpp"

using namespace apll;

namespace {

GroupElement el(std::vector<std::int64_t> r) { return GroupElement{std::move(r)}; }

SearchConfig config(std::int64_t n) {
    SearchConfig cfg;
    cfg.n = n;
    return cfg;
}

std::set<std::vector<std::int64_t>> keys(const std::vector<Certificate>& cs) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& c : cs) out.insert(detail::cert_rank_key(c));
    return out;
}

}  // namespace

TEST_CASE("dimension 1 has exactly one certificate") {
    auto out = search_dimension(1, config(1));
    REQUIRE(out.size() == 1);
    const auto& [group, outcome] = out[0];
    CHECK(group->order() == 3);
    CHECK(outcome.exhausted);
    REQUIRE(outcome.certificates.size() == 1);
    const auto& c = outcome.certificates[0];
    CHECK(c.t0 == std::vector<GroupElement>{el({0})});
    CHECK(c.t1 == std::vector<GroupElement>{el({1}), el({2})});
}

TEST_CASE("dimension 2 finds the order-7 witness up to automorphism") {
    auto group = make_group({7});
    auto outcome = enumerate_certificates(group, 2, config(2));
    CHECK(outcome.exhausted);
    REQUIRE(outcome.certificates.size() == 3);
    // the known witness appears verbatim
    bool found = false;
    for (const auto& c : outcome.certificates)
        if (c.t0 == std::vector<GroupElement>{el({0}), el({1}), el({6})} &&
            c.t1 == std::vector<GroupElement>{el({2}), el({5})})
            found = true;
    CHECK(found);
    // and the three copies form one orbit under the power maps
    std::set<std::vector<std::int64_t>> orbit_keys;
    for (const auto& c : outcome.certificates)
        orbit_keys.insert(detail::automorphism_canonical_key(c));
    CHECK(orbit_keys.size() == 1);
}

TEST_CASE("structure of found certificates matches the forced sizes") {
    auto outcome = enumerate_certificates(make_group({7}), 2, config(2));
    for (const auto& c : outcome.certificates) {
        CHECK(c.k0() == 3);  // even n: identity plus n/2 pairs
        CHECK(c.k1() == 2);
        CHECK(is_inverse_closed(*c.group, c.t0));
        CHECK(is_inverse_closed(*c.group, c.t1));
    }
}

TEST_CASE("dimensions 3 through 5 are exhaustively empty") {
    for (std::int64_t n : {3, 4, 5}) {
        auto out = search_dimension(n, config(n));
        for (const auto& [group, outcome] : out) {
            CHECK(outcome.exhausted);
            CHECK(outcome.certificates.empty());
        }
    }
}

TEST_CASE("dimension 4 covers the single order-21 group") {
    auto out = search_dimension(4, config(4));
    REQUIRE(out.size() == 1);
    CHECK(out[0].first->invariant_factors() == std::vector<std::int64_t>{21});
}

TEST_CASE("pruning never changes the certificate set") {
    for (std::int64_t n : {1, 2}) {
        auto group = make_group({n * n + n + 1});
        auto pruned_cfg = config(n);
        auto unpruned_cfg = config(n);
        unpruned_cfg.pruning = false;
        auto pruned = enumerate_certificates(group, n, pruned_cfg);
        auto unpruned = enumerate_certificates(group, n, unpruned_cfg);
        CHECK(pruned.exhausted);
        CHECK(unpruned.exhausted);
        CHECK(keys(pruned.certificates) == keys(unpruned.certificates));
        CHECK(unpruned.nodes_visited >= pruned.nodes_visited);
    }
}

TEST_CASE("outcomes and node counts are identical across worker counts") {
    for (std::int64_t n : {2, 5}) {
        auto group = make_group({n * n + n + 1});
        auto base = enumerate_certificates(group, n, config(n));
        for (int jobs : {2, 4}) {
            auto cfg = config(n);
            cfg.parallel_width = jobs;
            auto par = enumerate_certificates(group, n, cfg);
            CHECK(par.exhausted == base.exhausted);
            CHECK(par.nodes_visited == base.nodes_visited);
            CHECK(keys(par.certificates) == keys(base.certificates));
        }
    }
}

TEST_CASE("repeated runs are deterministic") {
    auto group = make_group({31});
    auto a = enumerate_certificates(group, 5, config(5));
    auto b = enumerate_certificates(group, 5, config(5));
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(a.exhausted == b.exhausted);
    CHECK(keys(a.certificates) == keys(b.certificates));
}

TEST_CASE("a starved budget withdraws the absence claim") {
    auto cfg = config(2);
    cfg.work_budget = 2;
    auto outcome = enumerate_certificates(make_group({7}), 2, cfg);
    CHECK_FALSE(outcome.exhausted);
    CHECK(outcome.nodes_visited <= 2);
}

TEST_CASE("deduplication changes multiplicity only") {
    auto cfg = config(2);
    cfg.dedupe_by_automorphism = true;
    auto deduped = enumerate_certificates(make_group({7}), 2, cfg);
    auto raw = enumerate_certificates(make_group({7}), 2, config(2));
    CHECK(deduped.certificates.size() == 1);
    CHECK(raw.certificates.size() == 3);
    CHECK(deduped.certificates.empty() == raw.certificates.empty());
    // empty stays empty
    auto cfg3 = config(3);
    cfg3.dedupe_by_automorphism = true;
    CHECK(enumerate_certificates(make_group({13}), 3, cfg3).certificates.empty());
}

TEST_CASE("every found certificate passes the full diagnostic battery") {
    for (std::int64_t n : {1, 2}) {
        for (const auto& [group, outcome] : search_dimension(n, config(n))) {
            CHECK_FALSE(outcome.certificates.empty());
            for (const auto& c : outcome.certificates) {
                auto rep = analyze_certificate(c);
                CHECK(rep.all_passed());
            }
        }
    }
}

TEST_CASE("a mismatched group order is rejected") {
    CHECK_THROWS_AS(enumerate_certificates(make_group({7}), 3, config(3)),
                    std::invalid_argument);
    auto cfg = config(2);
    cfg.work_budget = 0;
    CHECK_THROWS_AS(enumerate_certificates(make_group({7}), 2, cfg),
                    std::invalid_argument);
}
