#pragma once

#include <vector>

#include "realsurf/multicurve.hpp"

namespace realsurf {

// The anticonformal involution of a real surface, presented combinatorially.
// Every pants splits along its seams into two mirror-image right-angled
// hexagons: index 2v for the positively oriented hexagon of pants v (the
// boundary arcs [0, L/2)) and 2v+1 for its mirror (the arcs [L/2, L)).
// The involution swaps the two hexagons of each pants; its fixed set is the
// seam multicurve and every partition geodesic is invariant.
struct Involution {
    std::vector<int> hexagon_map;     // hexagon index -> image hexagon index
    Multicurve fixed_set;
    std::vector<int> invariant_edges; // every edge: sigma(gamma_e) = gamma_e
    int component_count = 0;          // components of the complement of the fixed set

    int hexagon_count() const { return static_cast<int>(hexagon_map.size()); }
    bool is_involution() const;
    // Orientation-reversing: every hexagon maps to the opposite-chirality
    // hexagon of the same pants, never a same-chirality one.
    bool reverses_orientation() const;
};

// Throws NotRealError when some twist is not 0 or 1/2. The boundary maps
// induced by the hexagon swap are checked for consistency across every gluing
// (they agree exactly when 2t is an integer).
Involution build_involution(const FNSurface& surface);

struct RealFormClass {
    int n = 0;              // number of fixed curves
    bool separating = false;
    int genus = 0;
    bool parity_ok = false; // separating implies g and n of different parity
};

RealFormClass classify_real_form(const FNSurface& surface);

}  // namespace realsurf
