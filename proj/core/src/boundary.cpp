#include "wrescalc/boundary.hpp"

#include "wrescalc/errors.hpp"

#include <random>

namespace wrescalc {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

std::vector<Rational> project_off(const std::vector<Rational>& r,
                                  const std::vector<Rational>& unit) {
    Rational p = dot(r, unit);
    std::vector<Rational> out = r;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= p * unit[k];
    return out;
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(num(rng), den(rng));
}

}  // namespace

void BoundaryData::validate() const {
    if (n < 3) throw InvalidDataError("dimension must be at least 3");
    const std::size_t un = static_cast<std::size_t>(n);
    if (V.size() != un) throw InvalidDataError("V must have n entries");
    if (dV.size() != un - 1) throw InvalidDataError("dV must have n-1 rows");
    if (dnV.size() != un) throw InvalidDataError("dnV must have n entries");
    if (nablaV.size() != un) throw InvalidDataError("nablaV must have n rows");
    if (dot(V, V) != Rational(1)) throw InvalidDataError("V must be a unit vector");
    for (const auto& row : dV) {
        if (row.size() != un) throw InvalidDataError("dV rows must have n entries");
        if (dot(row, V) != Rational(0))
            throw InvalidDataError("dV rows must be orthogonal to V");
    }
    for (const auto& row : nablaV) {
        if (row.size() != un) throw InvalidDataError("nablaV rows must have n entries");
        if (dot(row, V) != Rational(0))
            throw InvalidDataError("nablaV rows must be orthogonal to V");
    }
}

BoundaryData random_boundary_data(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    const std::size_t un = static_cast<std::size_t>(n);
    BoundaryData bd;
    bd.n = n;

    // rational unit vector from the inverse stereographic map of t in Q^{n-1}
    std::vector<Rational> t(un - 1);
    for (auto& v : t) v = small_rational(rng);
    Rational t2 = dot(t, t);
    Rational denom = t2 + Rational(1);
    bd.V.resize(un);
    for (std::size_t k = 0; k + 1 < un; ++k) bd.V[k] = Rational(2) * t[k] / denom;
    bd.V[un - 1] = (Rational(1) - t2) / denom;

    auto tangent_row = [&] {
        std::vector<Rational> r(un);
        for (auto& v : r) v = small_rational(rng);
        return project_off(r, bd.V);
    };
    for (std::size_t i = 0; i + 1 < un; ++i) bd.dV.push_back(tangent_row());
    bd.dnV = tangent_row();
    for (std::size_t q = 0; q < un; ++q) bd.nablaV.push_back(tangent_row());
    bd.validate();
    return bd;
}

namespace {

// Shorthand builders over a fixed (n, reg, bd) context.
struct Ctx {
    int n;
    RegistryPtr reg;
    const BoundaryData& bd;

    CliffordOperator c_frame(int j) const {
        return clifford_c(VectorExpr::frame(reg, n, j), reg);
    }
    CliffordOperator hc_frame(int j) const {
        return clifford_hatc(VectorExpr::frame(reg, n, j), reg);
    }
    CliffordOperator hc_vec(const std::vector<Rational>& v) const {
        return clifford_hatc(VectorExpr::from_rationals(reg, v), reg);
    }
    CliffordOperator c_xi_prime() const {
        return clifford_c(VectorExpr::xi_prime(reg, n), reg);
    }
    Poly h1() const { return Poly::symbol(reg, reg->h1()); }

    // c(xi) = c(xi') + xi_n c(dx_n), homogeneous of order 1.
    HomogSymbol c_xi() const {
        return HomogSymbol::monomial(c_xi_prime(), 0, 0) +
               HomogSymbol::monomial(c_frame(n), 1, 0);
    }
    HomogSymbol inv_norm2(unsigned k = 1) const {
        return HomogSymbol::monomial(CliffordOperator::identity(n, reg), 0, k);
    }
    HomogSymbol op(const CliffordOperator& a) const { return HomogSymbol::from_operator(a); }
};

CliffordOperator sigma0(const Ctx& c, OperatorSide which) {
    const int n = c.n;
    // connection matrix at x0: omega_{n,i}(e_i) = h1/2, omega_{i,n}(e_i) = -h1/2
    CliffordOperator hat_sum = CliffordOperator::zero(n, c.reg);
    CliffordOperator cl_sum = CliffordOperator::zero(n, c.reg);
    for (int i = 1; i < n; ++i) {
        hat_sum += c.c_frame(i) * (c.hc_frame(n) * c.hc_frame(i) - c.hc_frame(i) * c.hc_frame(n));
        cl_sum += c.c_frame(i) * (c.c_frame(n) * c.c_frame(i) - c.c_frame(i) * c.c_frame(n));
    }
    Poly half_h1 = c.h1().scaled(GaussianRational(rat(1, 2)));
    CliffordOperator s0 = (c.hc_vec(c.bd.V) * (hat_sum - cl_sum))
                              .scaled(half_h1)
                              .scaled(GaussianRational::i() * GaussianRational(rat(1, 4)));
    if (which == OperatorSide::DVstar) {
        for (int q = 1; q <= n; ++q)
            s0 -= (c.c_frame(q) * c.hc_vec(c.bd.nablaV[static_cast<std::size_t>(q - 1)]))
                      .scaled(GaussianRational::i());
    }
    return s0;
}

}  // namespace

SymbolSet build_symbol_set(OperatorSide which, const BoundaryData& bd, RegistryPtr reg) {
    bd.validate();
    Ctx c{bd.n, reg, bd};
    const int n = bd.n;

    SymbolSet out;
    out.n = n;
    out.reg = reg;

    const CliffordOperator hcV = c.hc_vec(bd.V);
    const HomogSymbol c_xi = c.c_xi();
    const HomogSymbol inv2 = c.inv_norm2();

    out.p1 = (c.op(hcV) * c_xi).scaled(GaussianRational(Rational(-1)));
    out.p0 = sigma0(c, which);
    out.s_m1 = out.p1 * inv2;  // -hc(V)c(xi)/|xi|^2

    // d_{x_n} sigma_{-1} at x0, with |xi'|^2 = 1 on the boundary cosphere:
    //   -hc(W)c(xi)/|xi|^2 - (h1/2) hc(V)c(xi')/|xi|^2 + h1 hc(V)c(xi)/|xi|^4
    out.dx_n_s_m1 =
        (c.op(c.hc_vec(bd.dnV)) * c_xi * inv2).scaled(GaussianRational(Rational(-1))) +
        c.op(hcV * c.c_xi_prime())
            .scaled(c.h1().scaled(GaussianRational(rat(-1, 2)))) * inv2 +
        (c.op(hcV) * c_xi * c.inv_norm2(2)).scaled(c.h1());

    for (int i = 1; i < n; ++i)
        out.dx_i_s_m1.push_back(
            (c.op(c.hc_vec(bd.dV[static_cast<std::size_t>(i - 1)])) * c_xi * inv2)
                .scaled(GaussianRational(Rational(-1))));

    // sigma_{-2} at x0 (|xi'|^2 = 1 applied to the metric-derivative factor):
    //   c(xi) p0 c(xi)/|xi|^4
    //   + (h1/2) c(xi)c(dx_n)c(xi')/|xi|^4 - h1 c(xi)c(dx_n)c(xi)/|xi|^6
    const HomogSymbol cdxn = c.op(c.c_frame(n));
    out.s_m2 = c_xi * c.op(out.p0) * c_xi * c.inv_norm2(2) +
               (c_xi * cdxn * c.op(c.c_xi_prime()) * c.inv_norm2(2))
                   .scaled(c.h1().scaled(GaussianRational(rat(1, 2)))) -
               (c_xi * cdxn * c_xi * c.inv_norm2(3)).scaled(c.h1());
    return out;
}

namespace {

Poly pi_pow(RegistryPtr reg, unsigned k) { return Poly::symbol(reg, reg->pi(), k); }

GaussianRational case_prefactor(BoundaryCase which) {
    switch (which) {
        case BoundaryCase::aI: return GaussianRational(Rational(-1));
        case BoundaryCase::aII:
        case BoundaryCase::aIII: return GaussianRational(rat(-1, 2));
        case BoundaryCase::b:
        case BoundaryCase::c: return -GaussianRational::i();
    }
    return {};
}

}  // namespace

Poly stated_phi_target(BoundaryCase which, RegistryPtr reg) {
    Poly h1 = Poly::symbol(reg, reg->h1());
    Poly pi2 = pi_pow(reg, 2);
    switch (which) {
        case BoundaryCase::aI:
            return Poly::zero(reg);
        case BoundaryCase::aII:
            // (1-6i)h1/4 + (1-6i) pi^2 h1/8
            return h1.scaled(GaussianRational{rat(1, 4), rat(-6, 4)}) +
                   (pi2 * h1).scaled(GaussianRational{rat(1, 8), rat(-6, 8)});
        case BoundaryCase::aIII:
            // -(2pi^2 - pi^2 h1)/8 - h1
            return pi2.scaled(GaussianRational(rat(-1, 4))) +
                   (pi2 * h1).scaled(GaussianRational(rat(1, 8))) - h1;
        case BoundaryCase::b:
            // (6 - 9 pi^2) h1 / 8
            return h1.scaled(GaussianRational(rat(3, 4))) +
                   (pi2 * h1).scaled(GaussianRational(rat(-9, 8)));
        case BoundaryCase::c:
            // 3(i-2) pi^2 h1 / 4
            return (pi2 * h1).scaled(GaussianRational{rat(-6, 4), rat(3, 4)});
    }
    return Poly::zero(reg);
}

Poly stated_phi_total(RegistryPtr reg) {
    Poly h1 = Poly::symbol(reg, reg->h1());
    Poly pi2 = pi_pow(reg, 2);
    return h1.scaled(GaussianRational{Rational(0), rat(-3, 2)}) +
           (pi2 * h1).scaled(GaussianRational(rat(-27, 8))) +
           pi2.scaled(GaussianRational(rat(-1, 4)));
}

PhiValue compute_phi(BoundaryCase which, Pairing pair, const BoundaryData& bd, SphereMode mode) {
    if (bd.n != 4) throw InvalidDataError("boundary cases are defined for n = 4");
    RegistryPtr reg = SymbolRegistry::standard(bd.n);
    SymbolSet P = build_symbol_set(OperatorSide::DV, bd, reg);
    SymbolSet Q = build_symbol_set(
        pair == Pairing::StarPaired ? OperatorSide::DVstar : OperatorSide::DV, bd, reg);

    Poly density = Poly::zero(reg);
    auto add_piece = [&](const MatrixSymbol& left, const MatrixSymbol& right) {
        RationalFn tr = (left * right).trace();
        density += tr.integrate_line();
    };

    switch (which) {
        case BoundaryCase::aI:
            for (int i = 1; i < bd.n; ++i)
                add_piece(P.s_m1.d_xi(i).restrict_to_boundary().pi_plus(),
                          Q.dx_i_s_m1[static_cast<std::size_t>(i - 1)]
                              .d_xi_n()
                              .restrict_to_boundary());
            break;
        case BoundaryCase::aII:
            add_piece(P.dx_n_s_m1.restrict_to_boundary().pi_plus(),
                      Q.s_m1.d_xi_n().d_xi_n().restrict_to_boundary());
            break;
        case BoundaryCase::aIII:
            add_piece(P.s_m1.d_xi_n().restrict_to_boundary().pi_plus(),
                      Q.dx_n_s_m1.d_xi_n().restrict_to_boundary());
            break;
        case BoundaryCase::b:
            add_piece(P.s_m2.restrict_to_boundary().pi_plus(),
                      Q.s_m1.d_xi_n().restrict_to_boundary());
            break;
        case BoundaryCase::c:
            add_piece(P.s_m1.restrict_to_boundary().pi_plus(),
                      Q.s_m2.d_xi_n().restrict_to_boundary());
            break;
    }

    PhiValue out;
    out.raw = sphere_integrate(density, bd.n, mode).scaled(case_prefactor(which));
    out.target = stated_phi_target(which, reg);
    // coefficient of pi*Omega_3*dx' = raw / (2 pi^3)
    try {
        out.value = out.raw.div_pi_power(3).scaled(GaussianRational(rat(1, 2)));
    } catch (const IllFormedIntegrandError&) {
        out.value.reset();
    }
    out.matches_target = out.value.has_value() && *out.value == out.target;
    return out;
}

PhiReport compute_boundary_total(Pairing pair, const BoundaryData& bd, SphereMode mode) {
    RegistryPtr reg = SymbolRegistry::standard(bd.n);
    PhiReport report{mode, pair, {}, Poly::zero(reg), Poly::zero(reg), stated_phi_total(reg),
                     true, false};
    const BoundaryCase order[5] = {BoundaryCase::aI, BoundaryCase::aII, BoundaryCase::aIII,
                                   BoundaryCase::b, BoundaryCase::c};
    bool all_normalized = true;
    Poly raw_sum = Poly::zero(reg);
    for (int k = 0; k < 5; ++k) {
        report.cases[static_cast<std::size_t>(k)] = compute_phi(order[k], pair, bd, mode);
        const PhiValue& v = report.cases[static_cast<std::size_t>(k)];
        report.stated_parts_total += v.target;
        raw_sum += v.raw;
        all_normalized = all_normalized && v.value.has_value();
        report.parts_match_stated = report.parts_match_stated && v.matches_target;
    }
    if (all_normalized) {
        for (const auto& v : report.cases) report.recomputed_total += *v.value;
    } else {
        report.recomputed_total = raw_sum;
    }
    report.totals_agree = report.stated_total == report.stated_parts_total;
    return report;
}

Poly compute_interior(InteriorKind which, RegistryPtr reg) {
    // tr(K/6 + E) over the 2^n-dimensional fibre, n = 4, under the 32 pi^2
    // normalization: 16 (K/6 - K/4) = -4K/3, minus the gradient term for the
    // squared operator.
    Poly K = Poly::symbol(reg, reg->require("K"));
    Poly out = K.scaled(GaussianRational(rat(-4, 3)));
    if (which == InteriorKind::T12) {
        Poly g = Poly::symbol(reg, reg->require("gradV2"));
        out -= g.scaled(GaussianRational(Rational(8)));
    }
    return out;
}

Poly compute_psi_3d(const BoundaryData& bd) {
    if (bd.n != 3) throw InvalidDataError("the odd-dimensional boundary term is for n = 3");
    RegistryPtr reg = SymbolRegistry::standard(3);
    SymbolSet P = build_symbol_set(OperatorSide::DV, bd, reg);
    MatrixSymbol left = P.s_m1.restrict_to_boundary().pi_plus();
    MatrixSymbol right = P.s_m1.d_xi_n().restrict_to_boundary();
    Poly density = (left * right).trace().integrate_line();
    return sphere_integrate(density, 3, SphereMode::PaperEmulation);
}

InverseResidual verify_symbol_inverse(const BoundaryData& bd) {
    bd.validate();
    RegistryPtr reg = SymbolRegistry::standard(bd.n);
    Ctx c{bd.n, reg, bd};
    const int n = bd.n;

    const HomogSymbol c_xi = c.c_xi();
    const HomogSymbol inv2 = c.inv_norm2();
    const HomogSymbol p1 = (c.op(c.hc_vec(bd.V)) * c_xi).scaled(GaussianRational(Rational(-1)));
    const HomogSymbol q_m1 = p1 * inv2;
    const CliffordOperator p0 = sigma0(c, OperatorSide::DV);

    // exact d_{x_j} p1 at x0 (no |xi'| restriction anywhere here):
    //   j < n: -hc(dV_j) c(xi);  j = n: -hc(W)c(xi) - (h1/2) hc(V)c(xi')
    std::vector<HomogSymbol> dx_p1;
    for (int j = 1; j < n; ++j)
        dx_p1.push_back((c.op(c.hc_vec(bd.dV[static_cast<std::size_t>(j - 1)])) * c_xi)
                            .scaled(GaussianRational(Rational(-1))));
    dx_p1.push_back(
        (c.op(c.hc_vec(bd.dnV)) * c_xi).scaled(GaussianRational(Rational(-1))) +
        c.op(c.hc_vec(bd.V) * c.c_xi_prime())
            .scaled(c.h1().scaled(GaussianRational(rat(-1, 2)))));

    // D_{x_j} q_{-1} = -i d_{x_j}(p1^{-1}) = -i (-q_{-1} (d_{x_j} p1) q_{-1});
    // the metric contributes d_{x_n}|xi|^2 = h1 |xi'|^2 through
    // d_{x_n}(c(xi)) already, since |xi|^2 = -c(xi)^2.
    std::vector<HomogSymbol> Dx_q_m1;
    for (int j = 1; j <= n; ++j)
        Dx_q_m1.push_back((q_m1 * dx_p1[static_cast<std::size_t>(j - 1)] * q_m1)
                              .scaled(GaussianRational::i()));

    HomogSymbol bracket = c.op(p0) * q_m1;
    for (int j = 1; j < n; ++j)
        bracket += p1.d_xi(j) * Dx_q_m1[static_cast<std::size_t>(j - 1)];
    bracket += p1.d_xi_n() * Dx_q_m1[static_cast<std::size_t>(n - 1)];
    HomogSymbol q_m2 = (q_m1 * bracket).scaled(GaussianRational(Rational(-1)));

    InverseResidual res;
    res.order1 = p1 * q_m1 - c.op(CliffordOperator::identity(n, reg));
    res.order0 = p1 * q_m2 + c.op(p0) * q_m1;
    for (int j = 1; j < n; ++j)
        res.order0 += p1.d_xi(j) * Dx_q_m1[static_cast<std::size_t>(j - 1)];
    res.order0 += p1.d_xi_n() * Dx_q_m1[static_cast<std::size_t>(n - 1)];
    return res;
}

}  // namespace wrescalc
