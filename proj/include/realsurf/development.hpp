#pragma once

#include "realsurf/fn_surface.hpp"
#include "realsurf/hexagon.hpp"

namespace realsurf {

// One-step development across a gluing: the hexagons on both sides of an edge
// are realized in the half-plane with the shared circle on the imaginary axis
// and the far side mapped across by the gluing isometry. At each matched foot
// pair the two seam arcs must meet at the same point with opposite tangents
// (angle pi): on a real surface the concatenated seams are smooth geodesics.
struct CrossingResidual {
    double point_gap = 0.0;  // hyperbolic distance between the two feet images
    double angle_gap = 0.0;  // |pi - angle between the seam tangents|
};

// Residuals for the two matched foot pairs of one edge. Requires a real
// surface (throws NotRealError otherwise).
std::array<CrossingResidual, 2> develop_edge(const FNSurface& surface, int edge);

struct ClosureReport {
    double max_point_gap = 0.0;
    double max_angle_gap = 0.0;
    int crossings = 0;
};

// Runs develop_edge over every edge of the surface.
ClosureReport closure_residuals(const FNSurface& surface);

// Hexagon of pants `vertex` developed with the circle of slot `slot` along the
// imaginary axis: side 0 covers the boundary arc [0, L/2], with the arc-length
// coordinate x corresponding to the point (0, e^x). Vertex 0 (x = 0) carries
// the foot of seam s_{slot+1}, vertex 1 (x = L/2) the foot of s_{slot+2}.
HexagonH2 develop_pants_hexagon(const FNSurface& surface, int vertex, int slot);

}  // namespace realsurf
