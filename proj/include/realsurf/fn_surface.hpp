#pragma once

#include <array>
#include <vector>

#include "realsurf/pants_graph.hpp"
#include "realsurf/rational.hpp"

namespace realsurf {

// Degenerate-input guards: lengths outside this window make the hexagon
// trigonometry ill-conditioned (cosh overflow / collar blowup), so validation
// rejects them.
inline constexpr double kMinLength = 1e-8;
inline constexpr double kMaxLength = 50.0;

// A marked hyperbolic surface in Fenchel-Nielsen coordinates: per-edge
// geodesic length and exact rational twist in [0,1).
//
// Gluing convention: along edge e, the side-0 circle coordinate x0 and the
// side-1 coordinate x1 (both arc length in [0, L), oriented by the respective
// pants) are identified by
//     x1 = ((t_e + 1/2) * L - x0)  mod L.
// The identification reverses the circle orientation, keeping the glued
// surface orientable; at t = 0 the coordinate-0 foot on one side meets the
// L/2 foot on the other, which is the mirror-symmetric gluing.
struct FNSurface {
    PantsGraph graph;
    std::vector<double> length;   // per edge, hyperbolic length of the curve
    std::vector<Rational> twist;  // per edge, normalized into [0,1)
};

ValidationReport validate(const FNSurface& surface);

// The real-surface criterion: true iff every twist is exactly 0 or 1/2.
// Exact rational comparison, no tolerance. Throws InvalidSurfaceError.
bool is_real(const FNSurface& surface);

// Seam data of every pants: seam s_k is the unique geodesic arc perpendicular
// to the boundaries at the two slots != k. The three seams cut the pants into
// two isometric right-angled hexagons. Feet coordinates follow the slot
// convention (see seam_at_origin / seam_at_half).
struct SeamSet {
    struct PantsSeams {
        std::array<double, 3> boundary_length;  // length of the circle at slot k
        std::array<double, 3> seam_length;      // length of seam s_k
    };
    std::vector<PantsSeams> pants;

    static int seam_at_origin(int slot) { return (slot + 1) % 3; }  // foot at x = 0
    static int seam_at_half(int slot) { return (slot + 2) % 3; }    // foot at x = L/2

    double total_seam_length() const;
};

SeamSet seam_set(const FNSurface& surface);

// Seam length opposite boundary k of a pants with boundary lengths L_k, L_i,
// L_j: cosh(s_k) = (cosh(L_k/2) + cosh(L_i/2)cosh(L_j/2)) / (sinh(L_i/2)sinh(L_j/2)).
// Evaluated in a cancellation-free form, stable over the whole validated range.
double pants_seam_length(double opposite, double adjacent1, double adjacent2);

}  // namespace realsurf
