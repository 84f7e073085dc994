#pragma once

#include <string>

#include "realsurf/fn_surface.hpp"

namespace realsurf {

// Schematic SVG 1.1 diagram of the pants graph: vertices on a circle, edges as
// curves labeled (length, twist). When the surface is real, the fixed curves
// are overlaid as closed colored polygons (exactly n of them), routed through
// per-seam markers and per-crossing markers. Purely combinatorial layout, no
// metric embedding.
std::string render_svg(const FNSurface& surface);

}  // namespace realsurf
