// Boundary-point symbol data for the operators hc(V)-twisted Hodge-Dirac
// operators, the five boundary-case integrals, the 3-dimensional case, and
// the symbol-inverse consistency checks.
//
// All computations run at a fixed boundary point x0 in the collar metric
// h(x_n)^{-1} g' + dx_n^2 with normal coordinates on the boundary, so the
// only surviving metric datum is h1 = h'(0) (kept symbolic).  The vector
// field data (values and first derivatives at x0) are exact rationals.
#pragma once

#include "wrescalc/matrix_symbol.hpp"
#include "wrescalc/sphere.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wrescalc {

struct BoundaryData {
    int n = 4;
    std::vector<Rational> V;                    // unit vector, n entries
    std::vector<std::vector<Rational>> dV;      // (n-1) rows: dV[i][l] = d_{x_i} V_l, each row _|_ V
    std::vector<Rational> dnV;                  // W with d_{x_n} hc(V) = hc(W)
    std::vector<std::vector<Rational>> nablaV;  // n rows: nabla^L_{e_q} V, each _|_ V

    // Throws InvalidDataError when a constraint fails.
    void validate() const;
};

BoundaryData random_boundary_data(std::uint64_t seed, int n);

enum class OperatorSide { DV, DVstar };
enum class Pairing { StarPaired, SelfPaired };  // (DV, DVstar) vs (DV, DV)
enum class BoundaryCase { aI, aII, aIII, b, c };

// The symbol data of one operator at x0 (pre-restriction).
struct SymbolSet {
    int n = 4;
    RegistryPtr reg;
    HomogSymbol p1;                        // order-1 symbol (order 1, |xi|^0)
    CliffordOperator p0;                   // order-0 symbol at x0
    HomogSymbol s_m1;                      // sigma_{-1} of the inverse
    HomogSymbol s_m2;                      // sigma_{-2} of the inverse at x0
    HomogSymbol dx_n_s_m1;                 // d_{x_n} sigma_{-1} at x0
    std::vector<HomogSymbol> dx_i_s_m1;    // d_{x_i} sigma_{-1}, i = 1..n-1
};

SymbolSet build_symbol_set(OperatorSide which, const BoundaryData& bd, RegistryPtr reg);

struct PhiValue {
    Poly raw;                     // full result including volume factors (powers of pi)
    std::optional<Poly> value;    // coefficient of pi*Omega_3*dx' (raw / (2 pi^3)) when exact
    Poly target;                  // the reference coefficient for this case
    bool matches_target = false;
};

PhiValue compute_phi(BoundaryCase which, Pairing pair, const BoundaryData& bd, SphereMode mode);

struct PhiReport {
    SphereMode mode;
    Pairing pair;
    std::array<PhiValue, 5> cases;
    Poly recomputed_total;        // exact sum of the five case values (normalized)
    Poly stated_parts_total;      // sum of the five stated per-case values
    Poly stated_total;            // the printed grand total
    bool parts_match_stated;      // every case matches its stated value
    bool totals_agree;            // stated grand total == sum of stated parts
};

PhiReport compute_boundary_total(Pairing pair, const BoundaryData& bd, SphereMode mode);

// Interior integrand coefficient of the closed-manifold residue under the
// 32 pi^2 normalization: -4K/3, resp. -4K/3 - 8*gradV2.
enum class InteriorKind { T11, T12 };
Poly compute_interior(InteriorKind which, RegistryPtr reg);

// The n = 3 boundary term; returns the full coefficient of vol_{dM}
// (expected: 4*i*pi^2).
Poly compute_psi_3d(const BoundaryData& bd);

struct InverseResidual {
    HomogSymbol order1;   // p1*q_{-1} - 1
    HomogSymbol order0;   // p1*q_{-2} + p0*q_{-1} + sum_j d_{xi_j}(p1) D_{x_j}(q_{-1})
};

InverseResidual verify_symbol_inverse(const BoundaryData& bd);

// Reference per-case coefficients of pi*Omega_3*dx' and the reference
// grand total (same for both pairings).
Poly stated_phi_target(BoundaryCase which, RegistryPtr reg);
Poly stated_phi_total(RegistryPtr reg);

}  // namespace wrescalc
