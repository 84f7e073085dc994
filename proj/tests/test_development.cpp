#include <random>

#include "doctest.h"
#include "realsurf/development.hpp"
#include "realsurf/errors.hpp"
#include "test_support.hpp"

using namespace realsurf;

TEST_CASE("theta-graph surface: seam junctions develop straight") {
    // Geometric closure oracle: across every matched foot pair the seam arcs
    // of the two sides land on the same point and continue at angle pi.
    const FNSurface surface = test::theta_surface(1.7, 2.9, 4.1, Rational(0));
    const ClosureReport report = closure_residuals(surface);
    CHECK(report.crossings == 6);
    CHECK(report.max_point_gap < 1e-6);
    CHECK(report.max_angle_gap < 1e-6);
}

TEST_CASE("closure holds for mixed twists and self-gluings") {
    FNSurface surface = test::chain_surface(3, Rational(0));
    surface.twist[0] = Rational(1, 2);
    surface.twist[4] = Rational(1, 2);
    const ClosureReport report = closure_residuals(surface);
    CHECK(report.crossings == 2 * surface.graph.edge_count());
    CHECK(report.max_point_gap < 1e-6);
    CHECK(report.max_angle_gap < 1e-6);
}

TEST_CASE("random genus-2 closures") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        const FNSurface surface = test::random_real_surface(2, rng);
        const ClosureReport report = closure_residuals(surface);
        CHECK(report.max_point_gap < 1e-6);
        CHECK(report.max_angle_gap < 1e-6);
    }
}

TEST_CASE("development refuses non-real surfaces") {
    FNSurface surface = test::theta_surface(2.0, 2.0, 2.0, Rational(0));
    surface.twist[1] = Rational(1, 5);
    CHECK_THROWS_AS(closure_residuals(surface), NotRealError);
}

TEST_CASE("developed hexagon carries the pants boundary on the axis") {
    const FNSurface surface = test::theta_surface(2.0, 3.0, 4.0, Rational(0));
    const HexagonH2 hex = develop_pants_hexagon(surface, 0, 1);
    // Side 0 is half of boundary circle 1, placed symmetrically around i.
    CHECK(hex.side_length(0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(hex.vertex[0].x == doctest::Approx(0.0));
    CHECK(hex.vertex[0].y == doctest::Approx(std::exp(-0.75)).epsilon(1e-12));
    CHECK(hex.vertex[1].y == doctest::Approx(std::exp(0.75)).epsilon(1e-12));
}
