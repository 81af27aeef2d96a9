#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "apll/geometry.hpp"

using namespace apll;

namespace {

std::int64_t lee(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    return lee_distance(a, b);
}

// independent sphere oracle: count points of the box [-r,r]^n with weight <= r
std::int64_t count_ball_points(std::int64_t n, std::int64_t r) {
    std::int64_t count = 0;
    std::vector<std::int64_t> x(static_cast<std::size_t>(n), -r);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
        if (i == x.size()) { ++count; return; }
        for (std::int64_t v = -(r - used); v <= r - used; ++v)
            self(self, i + 1, used + (v < 0 ? -v : v));
    };
    rec(rec, 0, 0);
    return count;
}

// independent covering-radius oracle for small 2x2 bases: scan one period
std::int64_t covering_oracle_2d(const LatticeBasis& b, std::int64_t index) {
    std::int64_t worst = 0;
    for (std::int64_t wx = 0; wx < index; ++wx)
        for (std::int64_t wy = 0; wy < index; ++wy) {
            std::int64_t best = INT64_MAX;
            for (std::int64_t a = -40; a <= 40; ++a)
                for (std::int64_t c = -40; c <= 40; ++c) {
                    std::int64_t vx = a * b.rows[0][0] + c * b.rows[1][0];
                    std::int64_t vy = a * b.rows[0][1] + c * b.rows[1][1];
                    best = std::min(best, std::abs(wx - vx) + std::abs(wy - vy));
                }
            worst = std::max(worst, best);
        }
    return worst;
}

}  // namespace

TEST_CASE("lee distance basics") {
    CHECK(lee({0, 0}, {1, -2}) == 3);
    CHECK(lee({4, -1, 7}, {4, -1, 7}) == 0);
    CHECK(lee({3}, {-2}) == 5);
    CHECK_THROWS_AS(lee({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("sphere size formula") {
    CHECK(sphere_size(2, 2) == 13);
    CHECK(sphere_size(5, 0) == 1);
    CHECK(sphere_size(3, 2) == 25);
    CHECK(sphere_size(3, 2) == count_ball_points(3, 2));
}

TEST_CASE("sphere size matches enumeration for all small parameters") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t r = 0; r <= 4; ++r) {
            CHECK(sphere_size(n, r) == count_ball_points(n, r));
            CHECK(static_cast<std::int64_t>(sphere_points(n, r).size()) ==
                  sphere_size(n, r));
        }
}

TEST_CASE("sphere size closed forms") {
    for (std::int64_t k = 1; k <= 50; ++k) {
        CHECK(sphere_size(k, 1) == 2 * k + 1);
        CHECK(sphere_size(1, k) == 2 * k + 1);
        CHECK(sphere_size(k, 2) == 2 * k * k + 2 * k + 1);
        // the group order of the algebraic reformulation
        CHECK(sphere_size(k, 2) + 1 == 2 * (k * k + k + 1));
    }
}

TEST_CASE("sphere points are lexicographic and deduplicated") {
    auto pts1 = sphere_points(1, 2);
    CHECK(pts1 == std::vector<std::vector<std::int64_t>>{{-2}, {-1}, {0}, {1}, {2}});
    auto pts2 = sphere_points(2, 1);
    CHECK(pts2.size() == 5);
    for (std::size_t i = 1; i < pts2.size(); ++i) CHECK(pts2[i - 1] < pts2[i]);
}

TEST_CASE("sphere enumeration respects its budget") {
    CHECK_THROWS_AS(sphere_points(8, 8, 1000), BudgetExceeded);
}

TEST_CASE("lattice index by exact elimination") {
    CHECK(lattice_index({2, {{1, 4}, {3, -2}}}) == 14);
    CHECK(lattice_index({1, {{6}}}) == 6);
    CHECK(lattice_index({3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == 1);
    CHECK_THROWS_AS(lattice_index({2, {{1, 2}, {2, 4}}}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_index({2, {{1, 2}}}), std::invalid_argument);
}

TEST_CASE("the order-14 planar lattice packs almost perfectly at radius 2") {
    LatticeBasis b{2, {{1, 4}, {3, -2}}};
    auto rep = classify_packing(b, 2);
    CHECK(rep.index == 14);
    CHECK(rep.min_lee_distance == 5);
    CHECK(rep.packing_radius == 2);
    CHECK(rep.covering_radius == 3);
    CHECK(rep.density == Rational(13, 14));
    CHECK(rep.classification == PackingClass::almost_perfect);
    CHECK(packing_class_str(rep.classification, rep.radius) == "almost_perfect(2)");
    CHECK(rep.covering_radius == covering_oracle_2d(b, rep.index));
}

TEST_CASE("the even-spacing line lattice is the unique 1-dimensional instance") {
    auto rep = classify_packing({1, {{6}}}, 2);
    CHECK(rep.index == 6);
    CHECK(rep.min_lee_distance == 6);
    CHECK(rep.packing_radius == 2);
    CHECK(rep.covering_radius == 3);
    CHECK(rep.density == Rational(5, 6));
    CHECK(rep.classification == PackingClass::almost_perfect);
}

TEST_CASE("the full lattice tiles itself") {
    auto rep = classify_packing({3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 0);
    CHECK(rep.index == 1);
    CHECK(rep.min_lee_distance == 1);
    CHECK(rep.packing_radius == 0);
    CHECK(rep.covering_radius == 0);
    CHECK(rep.density == Rational(1));
    CHECK(rep.classification == PackingClass::perfect);
}

TEST_CASE("a non-instance basis classifies as other") {
    auto rep = classify_packing({2, {{4, 0}, {0, 4}}}, 2);
    CHECK(rep.classification == PackingClass::other);
    CHECK(rep.packing_radius <= rep.covering_radius);
}

TEST_CASE("classification is invariant under unimodular row operations") {
    LatticeBasis base{2, {{1, 4}, {3, -2}}};
    auto reference = classify_packing(base, 2);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int rep = 0; rep < 20; ++rep) {
        LatticeBasis b = base;
        // random row swaps, negations and shear steps preserve the lattice
        for (int step = 0; step < 6; ++step) {
            switch (rng() % 3) {
                case 0: std::swap(b.rows[0], b.rows[1]); break;
                case 1:
                    for (auto& v : b.rows[0]) v = -v;
                    break;
                default: {
                    int c = coef(rng);
                    for (std::size_t j = 0; j < 2; ++j)
                        b.rows[0][j] += c * b.rows[1][j];
                }
            }
        }
        auto got = classify_packing(b, 2);
        CHECK(got.index == reference.index);
        CHECK(got.min_lee_distance == reference.min_lee_distance);
        CHECK(got.packing_radius == reference.packing_radius);
        CHECK(got.covering_radius == reference.covering_radius);
        CHECK(got.density == reference.density);
        CHECK(got.classification == reference.classification);
    }
}

TEST_CASE("packing reports respect the density and radius invariants") {
    for (auto basis : std::vector<LatticeBasis>{
             {2, {{1, 4}, {3, -2}}}, {1, {{6}}}, {2, {{2, 1}, {1, 3}}},
             {2, {{5, 0}, {0, 1}}}, {3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}}}) {
        auto rep = classify_packing(basis, 2);
        CHECK(rep.packing_radius <= rep.covering_radius);
        CHECK(rep.density <= Rational(1));
        bool perfect_at_measured = rep.density == Rational(1);
        CHECK(perfect_at_measured == (rep.packing_radius == rep.covering_radius &&
                                      rep.index == sphere_size(basis.n, rep.packing_radius)));
    }
}

TEST_CASE("classification respects the coset enumeration budget") {
    CHECK_THROWS_AS(classify_packing({2, {{100, 0}, {0, 100}}}, 2, 50), BudgetExceeded);
}
