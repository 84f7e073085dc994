#pragma once

#include <vector>

#include "realsurf/fn_surface.hpp"
#include "realsurf/h2.hpp"

namespace realsurf {

// Half-width of the standard embedded collar around a simple closed geodesic
// of length l: arcsinh(1 / sinh(l/2)). Strictly decreasing, blows up as l -> 0.
double collar_halfwidth(double l);

// Certified lower bounds on max_p d(Fix(sigma), p). Both constituents are
// honest lower bounds: a disk that embeds in an open hexagon avoids the fixed
// set, and a point on the boundary of the narrowest collar is at least the
// minimum collar half-width from every fixed curve (collars around disjoint
// geodesics are disjoint). No upper bound is ever produced.
struct DistanceBoundReport {
    double hexagon_bound = 0.0;  // max over hexagons of the certified inradius
    double collar_bound = 0.0;   // min over fixed curves of collar_halfwidth
    double certified_lower_bound = 0.0;
    bool clears_ln3_half = false;

    // Benchmark constant ln(3)/2 reported alongside every bound.
    static constexpr double kLn3Half = 0.5493061443340549;

    // Diagnostics: per-pants certified inradius (the two hexagons of a pants
    // are isometric and share the value) and the traced fixed-curve lengths.
    struct PantsDetail {
        int vertex = -1;
        double inradius = 0.0;   // maximin distance to the three seam sides
        double certified = 0.0;  // clamped by all six sides at the argmax
        H2Point argmax;
    };
    std::vector<PantsDetail> pants;
    std::vector<double> fixed_curve_lengths;
};

// Requires a real surface (throws NotRealError).
DistanceBoundReport distance_lower_bound(const FNSurface& surface);

// Chain surface (all twists 0) whose fixed curves are short enough that the
// collar bound exceeds C: every fixed-curve length is a seam sum, strictly
// decreasing in the common partition length, so a 1-D bisection (tolerance
// 1e-6) hits the target 2*arcsinh(1/sinh(C + 0.01)). Throws InfeasibleError
// when the validation length cap (50) blocks the needed shortness.
FNSurface unbounded_example(double C, int g);

}  // namespace realsurf
