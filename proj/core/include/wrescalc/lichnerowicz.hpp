// Trace identities for the endomorphism part of the squared twisted
// Hodge-Dirac operators, checked by explicit Clifford matrix arithmetic on
// randomly generated exact rational geometry data.
#pragma once

#include "wrescalc/clifford.hpp"
#include "wrescalc/poly.hpp"

#include <cstdint>
#include <vector>

namespace wrescalc {

// Pointwise first- and second-derivative data of a unit vector field V at a
// point, in an orthonormal frame, plus a curvature tensor with the usual
// antisymmetries.  The scalar curvature K stays a formal symbol.
struct GeometryData {
    int n = 4;
    RegistryPtr reg;
    std::vector<Rational> V;                      // unit vector, n entries
    std::vector<std::vector<Rational>> U;         // n rows: U_q = nabla_{e_q} V, each _|_ V
    std::vector<std::vector<std::vector<Rational>>> S;  // S[j][q] = nabla_{e_j} nabla_{e_q} V
    std::vector<Rational> R;                      // R[((i*n+j)*n+k)*n+l], rank-4

    Rational r(int i, int j, int k, int l) const {
        return R[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
    }

    // Checks shapes, |V| = 1, <U_q, V> = 0, <S_qq, V> = -|U_q|^2, and the
    // curvature antisymmetries R_ijkl = -R_jikl = -R_ijlk = R_klij.
    // Throws InvalidDataError on failure.
    void validate() const;
};

GeometryData gen_geometry(std::uint64_t seed, int n);

enum class IdentityId {
    CurvTraceZero,   // sum R_ijkl tr[hc_i hc_j c_k c_l] = 0
    SquareTrace,     // tr sum_i [hc(V) sum_q hc(U_q) c_q c_i]^2 = (n-2) sum|U_q|^2 tr[id]
    PartA,           // tr sum_j [hc(U_j) sum_q hc(U_q) c_q c_j] = -sum|U_q|^2 tr[id]
    PartB,           // sum_jq tr[hc(V) hc(S_jq) c_q c_j] = sum|U_q|^2 tr[id]
    PartC,           // tr[hc(V) hc(U_q) c_k c_j] = 0 for all q,k,j (checked as a sum of squares)
    TotalDerivZero,  // PartA lhs + PartB lhs = 0
    TraceE_star,     // tr E = -K/4 tr[id] for the adjoint-composed operator
    TraceE_square,   // tr E = (-K/4 - (n-2)/4 sum|U_q|^2) tr[id] for the square
};

// Returns LHS - RHS as an exact polynomial (in K only); the zero polynomial
// means the identity holds for this data.  Shapes are checked but the
// orthogonality constraints are not, so deliberately broken data can be used
// as a negative control.
Poly check_identity(IdentityId id, const GeometryData& g);

enum class WresKind { star, square };

// Full closed-manifold residue integrand coefficient for even n:
// (n-2)(4 pi)^{n/2}/((n/2-1)!) * 2^n * (K/6 + tr E / 2^n), with the
// gradient-square sum kept as the formal symbol gradV2.
// For n = 4: 32 pi^2 (-4K/3), resp. 32 pi^2 (-4K/3 - 8 gradV2).
Poly wres_interior(WresKind kind, int n, RegistryPtr reg);

}  // namespace wrescalc
