#include "realsurf/oracle_verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "realsurf/development.hpp"
#include "realsurf/fn_surface.hpp"
#include "realsurf/hexagon.hpp"

namespace realsurf {

namespace {

constexpr double kPi = 3.141592653589793;

Mobius random_isometry(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> shift(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(0.2, 5.0);
    Mobius m = Mobius::translation(shift(rng)).compose(Mobius::scaling(scale(rng)));
    if (rng() & 1) m = m.compose(Mobius{0.0, -1.0, 1.0, 0.0});  // z -> -1/z
    return m.compose(Mobius::translation(shift(rng)));
}

FNSurface theta_surface(std::mt19937_64& rng) {
    FNSurface s;
    s.graph.vertex_count = 2;
    s.graph.edges = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
    std::uniform_real_distribution<double> len(0.5, 6.0);
    for (int e = 0; e < 3; ++e) {
        s.length.push_back(len(rng));
        s.twist.push_back(rng() & 1 ? Rational(1, 2) : Rational(0));
    }
    return s;
}

}  // namespace

bool run_oracle_verify(std::ostream& out) {
    std::mt19937_64 rng(0x5eed0c7au);
    std::uniform_real_distribution<double> side(0.25, 3.0);

    double max_seam = 0.0, max_area = 0.0, max_boundary = 0.0, max_isometry = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double a = side(rng), b = side(rng), c = side(rng);
        const HexagonH2 hex = build_right_hexagon(a, b, c);

        // Alternating sides reproduce the requested half-lengths (this is also
        // the feet antipodality of the doubled pants).
        max_boundary = std::max({max_boundary, std::abs(hex.side_length(0) - a),
                                 std::abs(hex.side_length(2) - b), std::abs(hex.side_length(4) - c)});
        // Connecting sides against the closed-form seam lengths. Side 1 sits
        // between a and b, so its formula partner is the opposite side c.
        max_seam = std::max({max_seam,
                             std::abs(hex.side_length(1) - pants_seam_length(2 * c, 2 * a, 2 * b)),
                             std::abs(hex.side_length(3) - pants_seam_length(2 * a, 2 * b, 2 * c)),
                             std::abs(hex.side_length(5) - pants_seam_length(2 * b, 2 * c, 2 * a))});
        max_area = std::max(max_area, std::abs(hex.measured_area() - kPi));

        if (trial % 10 == 0) {
            const Mobius iso = random_isometry(rng);
            for (int i = 0; i < 6; ++i) {
                const double mapped =
                    distance(iso.apply(hex.vertex[i]), iso.apply(hex.vertex[(i + 1) % 6]));
                max_isometry = std::max(max_isometry, std::abs(mapped - hex.side_length(i)));
            }
        }
    }

    double max_gap = 0.0, max_angle = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const ClosureReport closure = closure_residuals(theta_surface(rng));
        max_gap = std::max(max_gap, closure.max_point_gap);
        max_angle = std::max(max_angle, closure.max_angle_gap);
    }

    out << "max_seam_residual " << max_seam << "\n";
    out << "max_boundary_residual " << max_boundary << "\n";
    out << "max_area_residual " << max_area << "\n";
    out << "max_isometry_residual " << max_isometry << "\n";
    out << "max_closure_point_gap " << max_gap << "\n";
    out << "max_closure_angle_gap " << max_angle << "\n";

    const bool ok = max_seam < 1e-9 && max_boundary < 1e-9 && max_area < 1e-6 &&
                    max_isometry < 1e-8 && max_gap < 1e-6 && max_angle < 1e-6;
    out << (ok ? "oracle-verify PASS" : "oracle-verify FAIL") << "\n";
    return ok;
}

}  // namespace realsurf
