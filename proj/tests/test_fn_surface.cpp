#include <cmath>

#include "doctest.h"
#include "realsurf/errors.hpp"
#include "realsurf/fn_surface.hpp"
#include "test_support.hpp"

using namespace realsurf;

TEST_CASE("is_real accepts exactly twists 0 and 1/2") {
    auto surface = test::theta_surface(2.0, 2.0, 2.0, Rational(0));
    CHECK(is_real(surface));

    surface.twist = {Rational(0), Rational(1, 2), Rational(1, 2)};
    CHECK(is_real(surface));

    surface.twist[1] = Rational(1, 3);
    CHECK(!is_real(surface));

    // No tolerance: a twist within any epsilon of 1/2 but not equal fails.
    surface.twist[1] = Rational(499999999, 1000000000);
    CHECK(!is_real(surface));
}

TEST_CASE("validation rejects degenerate lengths") {
    auto surface = test::theta_surface(2.0, 2.0, 2.0, Rational(0));
    surface.length[0] = 1e-9;
    CHECK(!validate(surface).ok());
    surface.length[0] = 51.0;
    CHECK(!validate(surface).ok());
    surface.length[0] = 2.0;
    CHECK(validate(surface).ok());
    CHECK_THROWS_AS(is_real(FNSurface{}), InvalidSurfaceError);
}

TEST_CASE("seam lengths from the right-angled hexagon identity") {
    // All boundaries 2*arccosh(2): every seam is arccosh(2).
    const double l = 2.0 * std::acosh(2.0);
    const auto seams = seam_set(test::theta_surface(l, l, l, Rational(0)));
    for (const auto& pants : seams.pants)
        for (double s : pants.seam_length) CHECK(s == doctest::Approx(std::acosh(2.0)).epsilon(1e-12));

    // Boundaries (2,2,2): cosh(s) = (cosh 1 + cosh^2 1) / sinh^2 1.
    const auto seams222 = seam_set(test::theta_surface(2.0, 2.0, 2.0, Rational(0)));
    const double expected =
        std::acosh((std::cosh(1.0) + std::cosh(1.0) * std::cosh(1.0)) / (std::sinh(1.0) * std::sinh(1.0)));
    CHECK(expected == doctest::Approx(1.7049).epsilon(1e-4));
    for (const auto& pants : seams222.pants)
        for (double s : pants.seam_length) CHECK(s == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("equal boundary lengths give equal seam lengths") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> len(0.5, 6.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double l = len(rng);
        const auto seams = seam_set(test::chain_surface(3, Rational(0), l));
        for (const auto& pants : seams.pants) {
            CHECK(pants.seam_length[0] == doctest::Approx(pants.seam_length[1]).epsilon(1e-12));
            CHECK(pants.seam_length[1] == doctest::Approx(pants.seam_length[2]).epsilon(1e-12));
        }
    }
}

TEST_CASE("seam formula is stable at the validation extremes") {
    for (double l : {kMinLength, 1e-4, 1.0, 25.0, kMaxLength}) {
        const double s = pants_seam_length(l, l, l);
        CHECK(std::isfinite(s));
        CHECK(s > 0.0);
    }
    // Tiny boundaries give huge seams and vice versa; monotone sanity.
    CHECK(pants_seam_length(0.01, 0.01, 0.01) > pants_seam_length(1.0, 1.0, 1.0));
    CHECK(pants_seam_length(1.0, 1.0, 1.0) > pants_seam_length(10.0, 10.0, 10.0));
}

TEST_CASE("feet convention helpers") {
    CHECK(SeamSet::seam_at_origin(0) == 1);
    CHECK(SeamSet::seam_at_half(0) == 2);
    CHECK(SeamSet::seam_at_origin(2) == 0);
    CHECK(SeamSet::seam_at_half(2) == 1);
}
