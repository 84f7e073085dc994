#pragma once

#include <ostream>

namespace realsurf {

// Cross-validation suite of the half-plane oracle against the closed-form
// layer: seam formula vs measured hexagon sides, hexagon area vs pi, feet
// antipodality, isometry invariance, and one-step closure development on
// genus-2 surfaces. Prints one max-residual line per check and returns true
// when every residual is within its tolerance. Deterministic (fixed seeds).
bool run_oracle_verify(std::ostream& out);

}  // namespace realsurf
