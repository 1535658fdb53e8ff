#include "wrescalc/lichnerowicz.hpp"

#include "wrescalc/errors.hpp"

#include <random>

namespace wrescalc {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(num(rng), den(rng));
}

struct Ops {
    const GeometryData& g;

    CliffordOperator c_frame(int j) const {
        return clifford_c(VectorExpr::frame(g.reg, g.n, j), g.reg);
    }
    CliffordOperator hc_frame(int j) const {
        return clifford_hatc(VectorExpr::frame(g.reg, g.n, j), g.reg);
    }
    CliffordOperator hc_vec(const std::vector<Rational>& v) const {
        return clifford_hatc(VectorExpr::from_rationals(g.reg, v), g.reg);
    }
    // sum_q hc(U_q) c(e_q)
    CliffordOperator hcU_c_sum() const {
        CliffordOperator out = CliffordOperator::zero(g.n, g.reg);
        for (int q = 1; q <= g.n; ++q)
            out += hc_vec(g.U[static_cast<std::size_t>(q - 1)]) * c_frame(q);
        return out;
    }
};

Poly const_poly(RegistryPtr reg, const Rational& r) {
    return Poly::constant(reg, GaussianRational(r));
}

Rational grad_sq(const GeometryData& g) {
    Rational s(0);
    for (const auto& row : g.U) s += dot(row, row);
    return s;
}

Poly curvature_trace(const GeometryData& g) {
    Ops o{g};
    Poly out = Poly::zero(g.reg);
    // Every entry of R is consumed, so deliberately broken tensors serve as
    // negative controls; for constrained data the repeated-index entries are
    // zero by antisymmetry.
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j) {
            CliffordOperator hh = o.hc_frame(i) * o.hc_frame(j);
            for (int k = 1; k <= g.n; ++k)
                for (int l = 1; l <= g.n; ++l) {
                    Rational r = g.r(i - 1, j - 1, k - 1, l - 1);
                    if (r == Rational(0)) continue;
                    out += (hh * o.c_frame(k) * o.c_frame(l)).trace().scaled(GaussianRational(r));
                }
        }
    return out;
}

}  // namespace

void GeometryData::validate() const {
    if (n < 3) throw InvalidDataError("dimension must be at least 3");
    const std::size_t un = static_cast<std::size_t>(n);
    if (!reg) throw InvalidDataError("missing symbol registry");
    if (V.size() != un || U.size() != un || S.size() != un)
        throw InvalidDataError("V, U, S must have n entries/rows");
    if (R.size() != un * un * un * un) throw InvalidDataError("R must have n^4 entries");
    if (dot(V, V) != Rational(1)) throw InvalidDataError("V must be a unit vector");
    for (std::size_t q = 0; q < un; ++q) {
        if (U[q].size() != un) throw InvalidDataError("U rows must have n entries");
        if (dot(U[q], V) != Rational(0))
            throw InvalidDataError("U rows must be orthogonal to V");
        if (S[q].size() != un) throw InvalidDataError("S must be n x n vectors");
        for (const auto& v : S[q])
            if (v.size() != un) throw InvalidDataError("S entries must have n components");
        if (dot(S[q][q], V) + dot(U[q], U[q]) != Rational(0))
            throw InvalidDataError("<S_qq, V> + |U_q|^2 must vanish");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (r(i, j, k, l) != -r(j, i, k, l) || r(i, j, k, l) != -r(i, j, l, k) ||
                        r(i, j, k, l) != r(k, l, i, j))
                        throw InvalidDataError("R must have the curvature antisymmetries");
                }
}

GeometryData gen_geometry(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    const std::size_t un = static_cast<std::size_t>(n);
    GeometryData g;
    g.n = n;
    g.reg = SymbolRegistry::standard(n);

    std::vector<Rational> t(un - 1);
    for (auto& v : t) v = small_rational(rng);
    Rational t2 = dot(t, t);
    Rational denom = t2 + Rational(1);
    g.V.resize(un);
    for (std::size_t k = 0; k + 1 < un; ++k) g.V[k] = Rational(2) * t[k] / denom;
    g.V[un - 1] = (Rational(1) - t2) / denom;

    auto random_vec = [&] {
        std::vector<Rational> r(un);
        for (auto& v : r) v = small_rational(rng);
        return r;
    };
    for (std::size_t q = 0; q < un; ++q) {
        auto u = random_vec();
        Rational p = dot(u, g.V);
        for (std::size_t k = 0; k < un; ++k) u[k] -= p * g.V[k];
        g.U.push_back(u);
    }
    for (std::size_t j = 0; j < un; ++j) {
        std::vector<std::vector<Rational>> row;
        for (std::size_t q = 0; q < un; ++q) row.push_back(random_vec());
        g.S.push_back(row);
    }
    // enforce <S_qq, V> = -|U_q|^2 by shifting S_qq along V
    for (std::size_t q = 0; q < un; ++q) {
        Rational shift = -dot(g.U[q], g.U[q]) - dot(g.S[q][q], g.V);
        for (std::size_t k = 0; k < un; ++k) g.S[q][q][k] += shift * g.V[k];
    }
    // antisymmetrize a random array into a tensor with
    // R_ijkl = -R_jikl = -R_ijlk = R_klij
    std::vector<Rational> a(un * un * un * un);
    for (auto& v : a) v = small_rational(rng);
    auto at = [&](int i, int j, int k, int l) -> Rational& {
        return a[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
    };
    g.R.assign(un * un * un * un, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational v = at(i, j, k, l) - at(j, i, k, l) - at(i, j, l, k) +
                                 at(j, i, l, k) + at(k, l, i, j) - at(l, k, i, j) -
                                 at(k, l, j, i) + at(l, k, j, i);
                    g.R[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)] = v;
                }
    g.validate();
    return g;
}

Poly check_identity(IdentityId id, const GeometryData& g) {
    const std::size_t un = static_cast<std::size_t>(g.n);
    if (g.V.size() != un || g.U.size() != un || g.S.size() != un ||
        g.R.size() != un * un * un * un || !g.reg)
        throw InvalidDataError("geometry data has wrong shape");
    Ops o{g};
    RegistryPtr reg = g.reg;
    const Rational trace_id(Rational(1) << g.n);  // 2^n
    const Poly zero = Poly::zero(reg);

    switch (id) {
        case IdentityId::CurvTraceZero:
            return curvature_trace(g);

        case IdentityId::SquareTrace: {
            CliffordOperator hcV = o.hc_vec(g.V);
            CliffordOperator inner = o.hcU_c_sum();
            Poly lhs = Poly::zero(reg);
            for (int i = 1; i <= g.n; ++i) {
                CliffordOperator a = hcV * inner * o.c_frame(i);
                lhs += (a * a).trace();
            }
            return lhs - const_poly(reg, Rational(g.n - 2) * grad_sq(g) * trace_id);
        }

        case IdentityId::PartA: {
            CliffordOperator inner = o.hcU_c_sum();
            Poly lhs = Poly::zero(reg);
            for (int j = 1; j <= g.n; ++j)
                lhs += (o.hc_vec(g.U[static_cast<std::size_t>(j - 1)]) * inner * o.c_frame(j))
                           .trace();
            return lhs + const_poly(reg, grad_sq(g) * trace_id);
        }

        case IdentityId::PartB: {
            CliffordOperator hcV = o.hc_vec(g.V);
            Poly lhs = Poly::zero(reg);
            for (int j = 1; j <= g.n; ++j)
                for (int q = 1; q <= g.n; ++q)
                    lhs += (hcV *
                            o.hc_vec(g.S[static_cast<std::size_t>(j - 1)]
                                        [static_cast<std::size_t>(q - 1)]) *
                            o.c_frame(q) * o.c_frame(j))
                               .trace();
            return lhs - const_poly(reg, grad_sq(g) * trace_id);
        }

        case IdentityId::PartC: {
            // each tr[hc(V) hc(U_q) c_k c_j] vanishes; sum the squares so one
            // nonzero entry cannot cancel another
            CliffordOperator hcV = o.hc_vec(g.V);
            Poly lhs = Poly::zero(reg);
            for (int q = 1; q <= g.n; ++q)
                for (int k = 1; k <= g.n; ++k)
                    for (int j = 1; j <= g.n; ++j) {
                        Poly t = (hcV * o.hc_vec(g.U[static_cast<std::size_t>(q - 1)]) *
                                  o.c_frame(k) * o.c_frame(j))
                                     .trace();
                        lhs += t * t;
                    }
            return lhs;
        }

        case IdentityId::TotalDerivZero: {
            Poly lhs = Poly::zero(reg);
            CliffordOperator inner = o.hcU_c_sum();
            CliffordOperator hcV = o.hc_vec(g.V);
            for (int j = 1; j <= g.n; ++j) {
                lhs += (o.hc_vec(g.U[static_cast<std::size_t>(j - 1)]) * inner * o.c_frame(j))
                           .trace();
                for (int q = 1; q <= g.n; ++q)
                    lhs += (hcV *
                            o.hc_vec(g.S[static_cast<std::size_t>(j - 1)]
                                        [static_cast<std::size_t>(q - 1)]) *
                            o.c_frame(q) * o.c_frame(j))
                               .trace();
            }
            return lhs;
        }

        case IdentityId::TraceE_star: {
            Poly K = Poly::symbol(reg, reg->require("K"));
            Poly lhs = curvature_trace(g).scaled(GaussianRational(rat(1, 8))) -
                       K.scaled(GaussianRational(rat(1, 4) * trace_id));
            Poly rhs = K.scaled(GaussianRational(rat(-1, 4) * trace_id));
            return lhs - rhs;
        }

        case IdentityId::TraceE_square: {
            Poly K = Poly::symbol(reg, reg->require("K"));
            CliffordOperator hcV = o.hc_vec(g.V);
            CliffordOperator inner = o.hcU_c_sum();
            Poly lhs = curvature_trace(g).scaled(GaussianRational(rat(1, 8))) -
                       K.scaled(GaussianRational(rat(1, 4) * trace_id));
            for (int i = 1; i <= g.n; ++i) {
                CliffordOperator a = hcV * inner * o.c_frame(i);
                lhs -= (a * a).trace().scaled(GaussianRational(rat(1, 4)));
            }
            for (int j = 1; j <= g.n; ++j) {
                // frame derivative of hc(V) * inner, with normal coordinates
                // (frame-derivative terms c(nabla e_q) vanish at the point)
                CliffordOperator dj =
                    o.hc_vec(g.U[static_cast<std::size_t>(j - 1)]) * inner;
                for (int q = 1; q <= g.n; ++q)
                    dj += hcV *
                          o.hc_vec(g.S[static_cast<std::size_t>(j - 1)]
                                      [static_cast<std::size_t>(q - 1)]) *
                          o.c_frame(q);
                lhs += (dj * o.c_frame(j)).trace().scaled(GaussianRational(rat(1, 2)));
            }
            Poly rhs =
                K.scaled(GaussianRational(rat(-1, 4) * trace_id)) +
                const_poly(reg, (Rational(-(g.n - 2)) / Rational(4)) * grad_sq(g) * trace_id);
            return lhs - rhs;
        }
    }
    return zero;
}

Poly wres_interior(WresKind kind, int n, RegistryPtr reg) {
    if (n % 2 != 0) throw UnsupportedError("closed-manifold residue needs even n");
    // (n-2) (4 pi)^{n/2} / ((n/2 - 1)!) * 2^n * (K/6 + tr E / 2^n)
    Rational fact(1);
    for (int k = 2; k <= n / 2 - 1; ++k) fact *= Rational(k);
    Rational pre = Rational(n - 2) * [&] {
        Rational p(1);
        for (int k = 0; k < n / 2; ++k) p *= Rational(4);
        return p;
    }() / fact;
    Poly K = Poly::symbol(reg, reg->require("K"));
    Poly pi_half = Poly::symbol(reg, reg->pi(), static_cast<unsigned>(n / 2));
    Rational two_n = Rational(1) << n;
    // K/6 + tr E / 2^n: tr E_star / 2^n = -K/4;
    // tr E_square / 2^n adds -(n-2)/4 gradV2
    Poly integrand = K.scaled(GaussianRational(rat(1, 6) - rat(1, 4)));
    if (kind == WresKind::square) {
        Poly g = Poly::symbol(reg, reg->require("gradV2"));
        integrand -= g.scaled(GaussianRational((Rational(n - 2) / Rational(4))));
    }
    return (pi_half * integrand).scaled(GaussianRational(pre * two_n));
}

}  // namespace wrescalc
