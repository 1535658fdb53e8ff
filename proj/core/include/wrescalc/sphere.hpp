// Integration of polynomial densities over the boundary cosphere |xi'| = 1.
//
// Literal mode integrates monomials in xi_1..xi_{n-1} over the unit sphere
// of R^{n-1} exactly (Gamma-function formula).  PaperEmulation mode applies
// the substitution rules used throughout the source computations instead:
// a constant picks up the volume of S^{n-1} (one dimension up), and each
// quadratic xi_k^2 additionally contributes pi^2/6 (n = 4) or 1/2 (n = 3);
// mixed or odd monomials vanish, higher degrees are rejected.
#pragma once

#include "wrescalc/poly.hpp"

namespace wrescalc {

enum class SphereMode { PaperEmulation, Literal };

Poly sphere_integrate(const Poly& density, int n, SphereMode mode);

}  // namespace wrescalc
