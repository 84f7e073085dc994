#include "realsurf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "realsurf/development.hpp"
#include "realsurf/errors.hpp"
#include "realsurf/hexagon.hpp"
#include "realsurf/multicurve.hpp"

namespace realsurf {

double collar_halfwidth(double l) {
    if (!(l > 0.0)) throw std::invalid_argument("collar_halfwidth requires l > 0");
    return std::asinh(1.0 / std::sinh(l / 2.0));
}

DistanceBoundReport distance_lower_bound(const FNSurface& surface) {
    const Multicurve fixed = trace_fixed_curves(surface);  // validates realness

    DistanceBoundReport report;
    for (int v = 0; v < surface.graph.vertex_count; ++v) {
        const HexagonH2 hex = develop_pants_hexagon(surface, v, 0);
        const InradiusResult inr = hexagon_inradius(hex, HexagonH2::seam_sides);
        report.pants.push_back({v, inr.value, inr.certified, inr.argmax});
        report.hexagon_bound = std::max(report.hexagon_bound, inr.certified);
    }

    double collar = std::numeric_limits<double>::infinity();
    for (const Curve& curve : fixed.curves) {
        report.fixed_curve_lengths.push_back(curve.length);
        collar = std::min(collar, collar_halfwidth(curve.length));
    }
    report.collar_bound = collar;

    report.certified_lower_bound = std::max(report.hexagon_bound, report.collar_bound);
    report.clears_ln3_half = report.certified_lower_bound > DistanceBoundReport::kLn3Half;
    return report;
}

FNSurface unbounded_example(double C, int g) {
    if (!(C > 0.0)) throw std::invalid_argument("unbounded_example requires C > 0");
    if (g < 2) throw std::invalid_argument("unbounded_example requires genus >= 2");

    const PantsGraph graph = chain_graph(g);
    const auto surface_with = [&](double lambda) {
        FNSurface s;
        s.graph = graph;
        s.length.assign(graph.edge_count(), lambda);
        s.twist.assign(graph.edge_count(), Rational(0));
        return s;
    };
    const auto max_fixed_length = [&](double lambda) {
        const Multicurve curves = trace_fixed_curves(surface_with(lambda));
        double longest = 0.0;
        for (const Curve& c : curves.curves) longest = std::max(longest, c.length);
        return longest;
    };

    // Collar half-width above C + 0.01 needs every fixed curve shorter than:
    const double target = 2.0 * std::asinh(1.0 / std::sinh(C + 0.01));

    double lo = 0.05, hi = kMaxLength;
    if (max_fixed_length(hi) > target)
        throw InfeasibleError("partition length cap " + std::to_string(kMaxLength) +
                              " cannot make the fixed curves shorter than " +
                              std::to_string(target));
    if (max_fixed_length(lo) <= target) return surface_with(lo);
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (max_fixed_length(mid) > target ? lo : hi) = mid;
    }
    return surface_with(hi);
}

}  // namespace realsurf
