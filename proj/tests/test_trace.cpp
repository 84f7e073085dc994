#include <algorithm>
#include <set>

#include "doctest.h"
#include "realsurf/errors.hpp"
#include "realsurf/multicurve.hpp"
#include "test_support.hpp"

using namespace realsurf;

namespace {

std::vector<int> crossings_per_edge(const FNSurface& surface, const Multicurve& curves) {
    std::vector<int> count(surface.graph.edge_count(), 0);
    for (const auto& curve : curves.curves)
        for (const auto& crossing : curve.crossings) ++count[crossing.edge];
    return count;
}

}  // namespace

TEST_CASE("chain surface reproduces the genus-g example counts") {
    for (int g = 2; g <= 6; ++g) {
        CHECK(trace_fixed_curves(test::chain_surface(g, Rational(0))).n() == g + 1);
        CHECK(trace_fixed_curves(test::chain_surface(g, Rational(1, 2))).n() == 1);
    }
}

TEST_CASE("trace refuses twists outside {0, 1/2}") {
    auto surface = test::chain_surface(2, Rational(0));
    surface.twist[1] = Rational(1, 4);
    CHECK_THROWS_AS(trace_fixed_curves(surface), NotRealError);
    surface.twist[1] = Rational(1, 3);
    CHECK_THROWS_AS(trace_fixed_curves(surface), NotRealError);
}

TEST_CASE("criterion soundness on random real surfaces") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 2 + trial % 4;
        const FNSurface surface = test::random_real_surface(g, rng);
        const Multicurve curves = trace_fixed_curves(surface);
        CHECK(curves.n() >= 1);
        CHECK(curves.n() <= g + 1);
        for (int c : crossings_per_edge(surface, curves)) CHECK(c == 2);

        // Disjointness: every seam arc appears in exactly one cycle.
        std::set<std::pair<int, int>> seen;
        for (const auto& curve : curves.curves)
            for (const auto& seam : curve.seams) CHECK(seen.insert({seam.vertex, seam.seam}).second);
        CHECK(static_cast<int>(seen.size()) == 3 * surface.graph.vertex_count);
    }
}

TEST_CASE("criterion completeness: one bad twist breaks the matching") {
    std::mt19937_64 rng(77);
    const Rational bad[] = {Rational(1, 4), Rational(1, 3), Rational(2, 3), Rational(9999, 20000)};
    for (int trial = 0; trial < 50; ++trial) {
        FNSurface surface = test::random_real_surface(2 + trial % 4, rng);
        const int e = static_cast<int>(rng() % surface.twist.size());
        surface.twist[e] = bad[trial % 4];
        CHECK(!is_real(surface));
        CHECK_THROWS_AS(trace_fixed_curves(surface), NotRealError);
    }
}

TEST_CASE("length additivity: curve lengths sum to the total seam length") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const FNSurface surface = test::random_real_surface(2 + trial % 4, rng);
        const Multicurve curves = trace_fixed_curves(surface);
        const SeamSet seams = seam_set(surface);
        CHECK(curves.total_length() == doctest::Approx(seams.total_seam_length()).epsilon(1e-12));
    }
}

TEST_CASE("side-0 flips do not change the geometry") {
    // Re-choosing the side-0 designation of any subset of edges leaves the
    // twist coordinate fixed under the symmetric gluing map, so is_real and
    // the traced curves are unchanged. Checked over all 2^E flip patterns.
    std::mt19937_64 rng(5);
    for (const FNSurface& base :
         {test::theta_surface(1.5, 2.5, 3.5, Rational(0)), test::chain_surface(2, Rational(1, 2))}) {
        const Multicurve reference = trace_fixed_curves(base);
        std::vector<double> ref_lengths;
        for (const auto& c : reference.curves) ref_lengths.push_back(c.length);
        std::sort(ref_lengths.begin(), ref_lengths.end());

        const int E = base.graph.edge_count();
        for (int mask = 0; mask < (1 << E); ++mask) {
            FNSurface flipped = base;
            for (int e = 0; e < E; ++e)
                if (mask & (1 << e)) std::swap(flipped.graph.edges[e].side0, flipped.graph.edges[e].side1);
            CHECK(is_real(flipped));
            const Multicurve curves = trace_fixed_curves(flipped);
            CHECK(curves.n() == reference.n());
            std::vector<double> lengths;
            for (const auto& c : curves.curves) lengths.push_back(c.length);
            std::sort(lengths.begin(), lengths.end());
            for (std::size_t i = 0; i < lengths.size(); ++i)
                CHECK(lengths[i] == doctest::Approx(ref_lengths[i]).epsilon(1e-12));
        }
    }
    // A non-real twist stays non-real under flips as well.
    FNSurface bad = test::theta_surface(2.0, 2.0, 2.0, Rational(0));
    bad.twist[2] = Rational(1, 3);
    for (int mask = 0; mask < 8; ++mask) {
        FNSurface flipped = bad;
        for (int e = 0; e < 3; ++e)
            if (mask & (1 << e)) std::swap(flipped.graph.edges[e].side0, flipped.graph.edges[e].side1);
        CHECK(!is_real(flipped));
    }
    (void)rng;
}

TEST_CASE("trace is deterministic and starts cycles at least seams") {
    const FNSurface surface = test::chain_surface(3, Rational(0));
    const Multicurve a = trace_fixed_curves(surface);
    const Multicurve b = trace_fixed_curves(surface);
    REQUIRE(a.n() == b.n());
    for (int i = 0; i < a.n(); ++i) {
        REQUIRE(a.curves[i].seams.size() == b.curves[i].seams.size());
        for (std::size_t k = 0; k < a.curves[i].seams.size(); ++k)
            CHECK(a.curves[i].seams[k] == b.curves[i].seams[k]);
        // First seam is the cycle's lexicographic minimum.
        const auto least = *std::min_element(a.curves[i].seams.begin(), a.curves[i].seams.end());
        CHECK(a.curves[i].seams.front() == least);
    }
}

TEST_CASE("seam arcs split evenly across a separating fixed set") {
    // Each partition geodesic is cut by its two crossings into two arcs; when
    // the fixed set separates, the two arcs of every edge lie on opposite
    // sides, giving 3g-3 arcs per side.
    const FNSurface surface = test::chain_surface(2, Rational(0));
    const Multicurve curves = trace_fixed_curves(surface);
    CHECK(curves.n() == 3);
    for (const auto& curve : curves.curves) CHECK(curve.seams.size() == curve.crossings.size());
}
