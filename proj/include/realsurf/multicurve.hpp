#pragma once

#include <vector>

#include "realsurf/fn_surface.hpp"
#include "realsurf/rational.hpp"

namespace realsurf {

// Reference to one seam arc: pants vertex and seam index (s_0, s_1, s_2).
struct SeamRef {
    int vertex = -1;
    int seam = -1;

    bool operator==(const SeamRef& o) const { return vertex == o.vertex && seam == o.seam; }
    bool operator<(const SeamRef& o) const {
        return vertex != o.vertex ? vertex < o.vertex : seam < o.seam;
    }
};

// One transversal crossing of a partition geodesic: the edge and the side-0
// circle coordinate of the matched feet, as an exact fraction of the length
// (0 or 1/2 on a real surface).
struct Crossing {
    int edge = -1;
    Rational side0_coord;
};

// A closed curve assembled from seam arcs. seams[i] is followed by
// crossings[i], which leads into seams[(i+1) % size].
struct Curve {
    std::vector<SeamRef> seams;
    std::vector<Crossing> crossings;
    double length = 0.0;  // sum of member seam lengths
};

struct Multicurve {
    std::vector<Curve> curves;
    int n() const { return static_cast<int>(curves.size()); }
    double total_length() const;
};

// Traces the fixed-point multicurve of the mirror involution: matches seam
// feet across every edge under the gluing convention and extracts the cycles.
// On a real surface every foot matches a foot (degree 2), every edge is
// crossed exactly twice, and 1 <= n <= g+1.
//
// Deterministic: cycles start from the lexicographically least unused
// (vertex, seam) reference and leave through the coordinate-0 foot first.
//
// Throws NotRealError if any twist is not 0 or 1/2; FeetMismatchError on an
// internal convention inconsistency (never a valid output).
Multicurve trace_fixed_curves(const FNSurface& surface);

}  // namespace realsurf
