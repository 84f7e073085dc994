#include "realsurf/hexagon.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "realsurf/errors.hpp"

namespace realsurf {

double HexagonH2::side_length(int i) const {
    return distance(vertex[i], vertex[(i + 1) % 6]);
}

double HexagonH2::interior_angle(int i) const {
    const int prev = (i + 5) % 6;
    // Wedge between the two sides meeting at vertex[i], both oriented away
    // from the corner.
    const H2Dir into_prev = direction_toward(geodesic[prev], vertex[i], vertex[prev]);
    const H2Dir into_next = direction_toward(geodesic[i], vertex[i], vertex[(i + 1) % 6]);
    return angle_between(into_prev, into_next);
}

double HexagonH2::measured_area() const {
    double angle_sum = 0.0;
    for (int i = 0; i < 6; ++i) angle_sum += interior_angle(i);
    return 4.0 * std::acos(-1.0) - angle_sum;
}

namespace {

struct Frame {
    H2Geodesic side_a_geo;   // imaginary axis
    H2Geodesic perp_at_base; // contains side 5 (seam c-a)
    H2Geodesic perp_at_top;  // contains side 1 (seam a-b)
    H2Point p0, p1;
};

// Partial construction for a trial length s of side 1. Returns the geodesic
// that must carry side 3 (the seam between b and c) plus the vertices reached.
struct Partial {
    H2Point p2, p3;
    H2Geodesic side_b_geo, side3_geo;
};

Partial extend(const Frame& f, double b, double s) {
    Partial part;
    // March from p1 along the top perpendicular into Re > 0 (decreasing theta).
    part.p2 = point_along(f.perp_at_top, f.p1, s, -1);
    part.side_b_geo = perpendicular_at(f.perp_at_top, part.p2);
    // Keep turning the same way (clockwise: cross(u, w) < 0).
    const H2Dir u = tangent_at(f.perp_at_top, part.p2, -1);
    const H2Dir w_plus = tangent_at(part.side_b_geo, part.p2, +1);
    const double cross = u.dx * w_plus.dy - u.dy * w_plus.dx;
    const int dir = cross < 0.0 ? +1 : -1;
    part.p3 = point_along(part.side_b_geo, part.p2, b, dir);
    part.side3_geo = perpendicular_at(part.side_b_geo, part.p3);
    return part;
}

}  // namespace

HexagonH2 build_right_hexagon(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw std::invalid_argument("hexagon sides must be positive");

    Frame f;
    f.side_a_geo = H2Geodesic::vertical(0.0);
    // Symmetric placement around i keeps every coordinate within e^{±(a+b)/2}
    // instead of e^{a+b}, which matters near the validation length cap.
    f.p0 = {0.0, std::exp(-a / 2.0)};
    f.p1 = {0.0, std::exp(a / 2.0)};
    f.perp_at_base = perpendicular_at(f.side_a_geo, f.p0);
    f.perp_at_top = perpendicular_at(f.side_a_geo, f.p1);

    // Measured length of side c as a function of the trial side-1 length: the
    // common perpendicular distance between the side-3 geodesic and the
    // side-5 geodesic. Monotone increasing past the tangency point; when the
    // geodesics still intersect there is no hexagon, reported as -1.
    const auto measured_c = [&](double s) -> double {
        const Partial part = extend(f, b, s);
        const auto cp = common_perpendicular(part.side3_geo, f.perp_at_base);
        return cp ? cp->dist : -1.0;
    };

    // Bracket: below s_min (where side c degenerates to zero) the target
    // geodesics intersect; seed the lower end at the tangency, evaluated in a
    // cancellation-free form (cosh(s_min) - 1 = (1 + cosh(a-b))/(sinh a sinh b)).
    const double u_min = (1.0 + std::cosh(a - b)) / (std::sinh(a) * std::sinh(b));
    double lo = std::log1p(u_min + std::sqrt(u_min * (u_min + 2.0)));
    if (measured_c(lo) >= c) {
        // The seed is only a locator; fall back to a downward scan.
        double probe = lo;
        for (int i = 0; i < 200 && measured_c(probe) >= c; ++i) probe *= 0.5;
        if (measured_c(probe) >= c) throw OptimizerError("hexagon closure: no lower bracket");
        lo = probe;
    }
    double hi = std::max(2.0 * lo, lo + 1.0);
    for (int i = 0; i < 200 && measured_c(hi) < c; ++i) {
        hi *= 2.0;
        if (hi > 1e4) throw OptimizerError("hexagon closure: no upper bracket");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (measured_c(mid) < c ? lo : hi) = mid;
    }
    const double s = 0.5 * (lo + hi);

    const Partial part = extend(f, b, s);
    const auto cp = common_perpendicular(part.side3_geo, f.perp_at_base);
    if (!cp) throw OptimizerError("hexagon closure: degenerate solution");

    HexagonH2 hex;
    hex.vertex = {f.p0, f.p1, part.p2, part.p3, cp->foot_a, cp->foot_b};
    hex.geodesic = {f.side_a_geo, f.perp_at_top,  part.side_b_geo,
                    part.side3_geo, cp->geodesic, f.perp_at_base};
    return hex;
}

namespace {

// Inward transversal data at a point of side 0.
struct Transversal {
    H2Geodesic geo;
    int dir = +1;      // marching direction into the hexagon
    double exit = 0.0; // distance to the first bounding geodesic
};

Transversal transversal_at(const HexagonH2& hex, H2Point q) {
    Transversal t;
    t.geo = perpendicular_at(hex.geodesic[0], q);
    // Inward direction: toward the Euclidean vertex centroid. The hexagon is
    // convex, so the first crossing of any side geodesic bounds it.
    double cx = 0.0, cy = 0.0;
    for (const auto& v : hex.vertex) {
        cx += v.x / 6.0;
        cy += v.y / 6.0;
    }
    const H2Dir plus = tangent_at(t.geo, q, +1);
    t.dir = (plus.dx * (cx - q.x) + plus.dy * (cy - q.y)) >= 0.0 ? +1 : -1;

    const double tau0 = geodesic_param(t.geo, q);
    double exit = std::numeric_limits<double>::infinity();
    for (int side = 1; side < 6; ++side) {
        const auto hit = intersect(t.geo, hex.geodesic[side]);
        if (!hit) continue;
        const double dtau = geodesic_param(t.geo, *hit) - tau0;
        if (t.dir * dtau <= 0.0) continue;
        exit = std::min(exit, distance(q, *hit));
    }
    if (!std::isfinite(exit)) exit = 0.0;
    t.exit = exit;
    return t;
}

constexpr double kGolden = 0.6180339887498949;  // 1/phi

}  // namespace

InradiusResult hexagon_inradius(const HexagonH2& hex, const std::array<int, 3>& sides) {
    const double len0 = hex.side_length(0);
    const H2Point v0 = hex.vertex[0];
    const int along = geodesic_param(hex.geodesic[0], hex.vertex[1]) >=
                              geodesic_param(hex.geodesic[0], v0)
                          ? +1
                          : -1;

    int evaluations = 0;
    constexpr int kBudget = 100000;
    constexpr double kTol = 1e-7;

    const auto objective = [&](double u, double v, H2Point* where) {
        ++evaluations;
        const H2Point q = point_along(hex.geodesic[0], v0, u * len0, along);
        const Transversal t = transversal_at(hex, q);
        const H2Point p = point_along(t.geo, q, v * t.exit, t.dir);
        if (where) *where = p;
        double best = std::numeric_limits<double>::infinity();
        for (int side : sides) best = std::min(best, distance_to_geodesic(hex.geodesic[side], p));
        return best;
    };

    // Golden-section maximization of a 1-D slice.
    const auto golden_max = [&](auto&& f) {
        double lo = 0.0, hi = 1.0;
        double m1 = hi - kGolden * (hi - lo), m2 = lo + kGolden * (hi - lo);
        double f1 = f(m1), f2 = f(m2);
        while (hi - lo > kTol && evaluations < kBudget) {
            if (f1 < f2) {
                lo = m1;
                m1 = m2;
                f1 = f2;
                m2 = lo + kGolden * (hi - lo);
                f2 = f(m2);
            } else {
                hi = m2;
                m2 = m1;
                f2 = f1;
                m1 = hi - kGolden * (hi - lo);
                f1 = f(m1);
            }
        }
        if (hi - lo > kTol && std::abs(f1 - f2) > 1e-6)
            throw OptimizerError("hexagon_inradius: budget exhausted while oscillating");
        struct {
            double arg, value;
        } r{0.5 * (lo + hi), std::max(f1, f2)};
        return r;
    };

    const auto best = golden_max([&](double u) { return golden_max([&](double v) {
                                                     return objective(u, v, nullptr);
                                                 }).value; });
    const double best_v = golden_max([&](double v) { return objective(best.arg, v, nullptr); }).arg;

    InradiusResult result;
    result.value = objective(best.arg, best_v, &result.argmax);
    result.evaluations = evaluations;
    result.certified = result.value;
    for (int side : HexagonH2::boundary_sides)
        result.certified = std::min(result.certified,
                                    distance_to_geodesic(hex.geodesic[side], result.argmax));
    for (int side : HexagonH2::seam_sides)
        result.certified = std::min(result.certified,
                                    distance_to_geodesic(hex.geodesic[side], result.argmax));
    return result;
}

}  // namespace realsurf
