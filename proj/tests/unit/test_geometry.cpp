#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "../support/test_seed.hpp"
#include "tactile/geometry.hpp"

using namespace tactile;

TEST_CASE("centroid of unit square and right triangle") {
    const Polygon square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const Point g = centroid(square);
    CHECK(g.x == doctest::Approx(0.5));
    CHECK(g.y == doctest::Approx(0.5));

    const Point t = centroid(Polygon{{0, 0}, {1, 0}, {0, 1}});
    CHECK(t.x == doctest::Approx(1.0 / 3.0));
    CHECK(t.y == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("centroid is orientation independent") {
    const Polygon cw{{0, 0}, {0, 1}, {2, 1}, {2, 0}};
    const Point g = centroid(cw);
    CHECK(g.x == doctest::Approx(1.0));
    CHECK(g.y == doctest::Approx(0.5));
}

TEST_CASE("degenerate polygon falls back to vertex mean") {
    const Polygon line{{0, 0}, {0.5, 0.5}, {1, 1}};
    const Point g = centroid(line);
    CHECK(g.x == doctest::Approx(0.5));
    CHECK(g.y == doctest::Approx(0.5));
}

TEST_CASE("centroid matches Monte-Carlo estimate on random polygons") {
    std::mt19937_64 rng(testing::seed());
    for (int i = 0; i < 5; ++i) {
        const Polygon poly = gen::random_polygon(rng);
        const Point expect = oracle::monte_carlo_centroid(poly, 1'000'000, rng);
        const Point got = centroid(poly);
        CHECK(std::abs(got.x - expect.x) < 1e-3);
        CHECK(std::abs(got.y - expect.y) < 1e-3);
    }
}

TEST_CASE("centroid of a convex polygon lies inside it") {
    std::mt19937_64 rng(testing::seed() + 1);
    for (int i = 0; i < 500; ++i) {
        // a star polygon with equal radii is convex
        const double r = 0.2;
        const Polygon poly = gen::star_polygon(rng, {0.5, 0.5}, r, r, 3 + i % 10);
        CHECK(contains(poly, centroid(poly)));
    }
}

TEST_CASE("containment: interior, exterior, boundary within tolerance") {
    const Polygon square{{0.2, 0.2}, {0.6, 0.2}, {0.6, 0.6}, {0.2, 0.6}};
    CHECK(contains(square, {0.4, 0.4}));
    CHECK_FALSE(contains(square, {0.7, 0.4}));
    CHECK(contains(square, {0.6, 0.4}));
    CHECK(contains(square, {0.2, 0.2}));
    CHECK(contains(square, {0.6 + 5e-10, 0.4}));
    CHECK_FALSE(contains(square, {0.6 + 1e-6, 0.4}));
}

TEST_CASE("containment uses the even-odd rule") {
    // concave "U": the notch is outside
    const Polygon u{{0.1, 0.1}, {0.3, 0.1}, {0.3, 0.7}, {0.5, 0.7}, {0.5, 0.1}, {0.7, 0.1}, {0.7, 0.9}, {0.1, 0.9}};
    CHECK_FALSE(contains(u, {0.4, 0.3}));
    CHECK(contains(u, {0.2, 0.3}));
    CHECK(contains(u, {0.4, 0.8}));
}

TEST_CASE("containment agrees with the ray-casting oracle") {
    std::mt19937_64 rng(testing::seed() + 2);
    for (int i = 0; i < 300; ++i) {
        const Polygon poly = gen::random_polygon(rng);
        for (int k = 0; k < 50; ++k) {
            const Point p = gen::random_point(rng);
            REQUIRE(contains(poly, p) == oracle::contains(poly, p));
        }
        // vertices and edge midpoints are on the boundary
        for (std::size_t v = 0; v < poly.size(); ++v) {
            const Point a = poly[v];
            const Point b = poly[(v + 1) % poly.size()];
            CHECK(contains(poly, a));
            CHECK(contains(poly, (a + b) * 0.5));
        }
    }
}

TEST_CASE("polygon simplicity") {
    CHECK(is_simple(Polygon{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK_FALSE(is_simple(Polygon{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
    std::mt19937_64 rng(testing::seed() + 3);
    for (int i = 0; i < 200; ++i) {
        CHECK(is_simple(gen::random_polygon(rng)));
    }
}

TEST_CASE("triangulation preserves area") {
    std::mt19937_64 rng(testing::seed() + 4);
    for (int i = 0; i < 200; ++i) {
        const Polygon poly = gen::random_polygon(rng);
        double sum = 0;
        for (const Triangle& t : triangulate(poly)) {
            sum += polygon_area(Polygon{t[0], t[1], t[2]});
        }
        CHECK(sum == doctest::Approx(oracle::abs_area(poly)).epsilon(1e-9));
    }
}

TEST_CASE("overlap detection agrees with grid sampling") {
    std::mt19937_64 rng(testing::seed() + 5);
    int agree = 0, total = 0;
    for (int i = 0; i < 150; ++i) {
        const Polygon a = gen::random_polygon(rng);
        const Polygon b = gen::random_polygon(rng);
        const double area = overlap_area(a, b);
        const bool sampled = oracle::grid_overlap(a, b, 150);
        // sampling can miss slivers; it must never see overlap that the exact area denies
        if (sampled) {
            CHECK(area > 0.0);
        }
        // large exact overlaps must be visible to the grid
        if (area > 1e-3) {
            CHECK(sampled);
        }
        agree += (sampled == (area > 1e-9)) ? 1 : 0;
        ++total;
    }
    CHECK(agree >= total * 95 / 100);
}

TEST_CASE("identical polygons overlap by their own area") {
    const Polygon sq{{0.1, 0.1}, {0.4, 0.1}, {0.4, 0.4}, {0.1, 0.4}};
    CHECK(overlap_area(sq, sq) == doctest::Approx(0.09));
    const Polygon far{{0.6, 0.6}, {0.9, 0.6}, {0.9, 0.9}, {0.6, 0.9}};
    CHECK(overlap_area(sq, far) == 0.0);
}
