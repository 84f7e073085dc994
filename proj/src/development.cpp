#include "realsurf/development.hpp"

#include <cmath>

#include "realsurf/errors.hpp"

namespace realsurf {

HexagonH2 develop_pants_hexagon(const FNSurface& surface, int vertex, int slot) {
    std::array<double, 3> boundary;
    for (int j = 0; j < 3; ++j) {
        const PantsGraph::Slot s = surface.graph.at(vertex, (slot + j) % 3);
        boundary[j] = surface.length[s.edge];
    }
    return build_right_hexagon(boundary[0] / 2.0, boundary[1] / 2.0, boundary[2] / 2.0);
}

namespace {

// Seam side and its corner vertex for a foot at circle coordinate 0 or L/2 of
// the developed hexagon: vertex 0 ends side 5, vertex 1 starts side 1.
struct FootSite {
    int corner;
    int seam_side;
};

FootSite foot_site(bool at_origin) { return at_origin ? FootSite{0, 5} : FootSite{1, 1}; }

H2Dir seam_direction(const HexagonH2& hex, const FootSite& site) {
    const int other = site.seam_side == 5 ? 5 : 2;  // far endpoint of the seam side
    return direction_toward(hex.geodesic[site.seam_side], hex.vertex[site.corner],
                            hex.vertex[other]);
}

}  // namespace

std::array<CrossingResidual, 2> develop_edge(const FNSurface& surface, int edge) {
    if (!is_real(surface)) throw NotRealError("closure development requires twists in {0, 1/2}");

    const HalfEdge s0 = surface.graph.edges[edge].side0;
    const HalfEdge s1 = surface.graph.edges[edge].side1;
    const double L = surface.length[edge];
    const double t = surface.twist[edge].to_double();

    const HexagonH2 hex0 = develop_pants_hexagon(surface, s0.vertex, s0.slot);
    const HexagonH2 hex1 = develop_pants_hexagon(surface, s1.vertex, s1.slot);

    // Gluing isometry: side-1 axis coordinate x1 maps to side-0 coordinate
    // x0 = (t + 1/2)L - x1. In the symmetric frame, coordinate x sits at the
    // point (0, e^{x - L/4}), which turns the identification into z -> -E/z
    // with E = e^{tL}.
    const double E = std::exp(t * L);
    const Mobius glue{0.0, -E, 1.0, 0.0};

    std::array<CrossingResidual, 2> out;
    for (int pair = 0; pair < 2; ++pair) {
        const bool origin0 = pair == 0;  // side-0 foot at x0 = 0 or L/2
        const double x0 = origin0 ? 0.0 : L / 2.0;
        // The development unrolls the circle, so the gluing is only defined up
        // to the deck translation z -> e^L z; pick the lift landing on the
        // developed hexagon's own feet.
        const double x1_raw = (t + 0.5) * L - x0;  // in [0, L] for real twists
        const int deck = x1_raw > 0.75 * L ? 1 : 0;
        const double x1 = x1_raw - deck * L;
        const Mobius lifted = deck ? Mobius::scaling(std::exp(-static_cast<double>(deck) * L)).compose(glue)
                                   : glue;
        const bool origin1 = x1 < 0.25 * L;

        const FootSite site0 = foot_site(origin0);
        const FootSite site1 = foot_site(origin1);

        const H2Point p0 = hex0.vertex[site0.corner];
        const H2Point p1 = lifted.apply(hex1.vertex[site1.corner]);

        CrossingResidual r;
        r.point_gap = distance(p0, p1);

        const H2Dir d0 = seam_direction(hex0, site0);
        const H2Geodesic mapped_seam = lifted.apply(hex1.geodesic[site1.seam_side]);
        const int far = site1.seam_side == 5 ? 5 : 2;
        const H2Dir d1 = direction_toward(mapped_seam, p1, lifted.apply(hex1.vertex[far]));
        r.angle_gap = std::abs(std::acos(-1.0) - angle_between(d0, d1));
        out[pair] = r;
    }
    return out;
}

ClosureReport closure_residuals(const FNSurface& surface) {
    ClosureReport report;
    for (int e = 0; e < surface.graph.edge_count(); ++e) {
        for (const CrossingResidual& r : develop_edge(surface, e)) {
            report.max_point_gap = std::max(report.max_point_gap, r.point_gap);
            report.max_angle_gap = std::max(report.max_angle_gap, r.angle_gap);
            ++report.crossings;
        }
    }
    return report;
}

}  // namespace realsurf
