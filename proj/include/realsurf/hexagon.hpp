#pragma once

#include <array>

#include "realsurf/h2.hpp"

namespace realsurf {

// Right-angled hexagon realized in the upper half-plane. Vertices in cyclic
// order; side i joins vertex[i] to vertex[(i+1)%6] and lies on geodesic[i].
// Alternating sides: 0, 2, 4 carry the prescribed lengths (a, b, c); 1, 3, 5
// are the connecting perpendiculars (the seams, in pants language):
//   side 1 between a and b, side 3 between b and c, side 5 between c and a.
struct HexagonH2 {
    std::array<H2Point, 6> vertex;
    std::array<H2Geodesic, 6> geodesic;

    double side_length(int i) const;
    // Interior angle at vertex[i] (between sides i-1 and i).
    double interior_angle(int i) const;
    // Gauss-Bonnet: 4*pi minus the measured angle sum (pi for right angles).
    double measured_area() const;

    static constexpr std::array<int, 3> boundary_sides{0, 2, 4};
    static constexpr std::array<int, 3> seam_sides{1, 3, 5};
};

// Constructs the right-angled hexagon with alternating side lengths a, b, c by
// explicit perpendicular-at-distance constructions: side a is placed on the
// imaginary axis from i*e^{-a/2} to i*e^{a/2} and the figure is closed by a
// 1-D bisection on the length of the side between a and b (the common
// perpendicular of the two remaining perpendicular geodesics realizes side c).
// The connecting side lengths are measured geometrically, independent of any
// trigonometric identity. Throws std::invalid_argument for non-positive inputs
// and OptimizerError if the closure search fails to bracket.
HexagonH2 build_right_hexagon(double a, double b, double c);

struct InradiusResult {
    double value = 0.0;       // max over the hexagon of the min selected-side distance
    double certified = 0.0;   // same point, min distance over all six sides
    H2Point argmax;
    int evaluations = 0;
};

// max over points p of the closed hexagon of min_{i in sides} d(p, geodesic_i),
// by nested golden-section over a 2-D parameterization of the hexagon
// (parameter tolerance 1e-7, at most 1e5 evaluations). Deterministic.
// Throws OptimizerError if the budget is exhausted while still oscillating.
InradiusResult hexagon_inradius(const HexagonH2& hex, const std::array<int, 3>& sides);

}  // namespace realsurf
