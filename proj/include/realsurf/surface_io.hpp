#pragma once

#include <string>
#include <string_view>

#include "realsurf/fn_surface.hpp"

namespace realsurf {

// Line-oriented surface file:
//
//   # comment
//   pants <V>
//   edge <id> <v0>.<slot0> <v1>.<slot1> len <decimal> twist <p>/<q>
//
// Edge ids must be exactly 0..E-1 (any line order); the first endpoint is the
// designated side 0. Twists are exact rationals, normalized into [0,1) on
// parse; lengths are decimals with at most 17 significant digits, emitted so
// that parse(emit(s)) reproduces the data model bit for bit.
FNSurface parse_surface(std::string_view text);
std::string emit_surface(const FNSurface& surface);

// Deterministic reports: fixed field order, lengths and bounds with 9 decimal
// places, byte-identical across runs for identical inputs.
std::string report_check(const FNSurface& surface);
std::string report_trace(const FNSurface& surface);     // genus, is_real, n, curves
std::string report_classify(const FNSurface& surface);  // + separating, parity
std::string report_bounds(const FNSurface& surface);    // + bound fields

}  // namespace realsurf
