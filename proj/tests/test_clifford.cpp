#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrescalc/clifford.hpp"

#include <random>

using namespace wrescalc;

namespace {

std::vector<Rational> random_vector(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rat(num(rng), den(rng));
    return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

CliffordOperator anticommutator(const CliffordOperator& a, const CliffordOperator& b) {
    return a * b + b * a;
}

}  // namespace

TEST_CASE("anticommutator relations on frame pairs and random vectors") {
    for (int n : {3, 4, 5}) {
        auto reg = SymbolRegistry::standard(n);
        CliffordOperator id = CliffordOperator::identity(n, reg);

        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                VectorExpr ei = VectorExpr::frame(reg, n, i);
                VectorExpr ej = VectorExpr::frame(reg, n, j);
                CliffordOperator ci = clifford_c(ei, reg), cj = clifford_c(ej, reg);
                CliffordOperator hi = clifford_hatc(ei, reg), hj = clifford_hatc(ej, reg);
                Poly delta = Poly::constant(reg, GaussianRational(Rational(i == j ? 2 : 0)));
                CHECK(anticommutator(ci, cj) == id.scaled(-delta));
                CHECK(anticommutator(hi, hj) == id.scaled(delta));
                CHECK(anticommutator(ci, hj).is_zero());
            }
        }

        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rational> a = random_vector(rng, n), b = random_vector(rng, n);
            VectorExpr va = VectorExpr::from_rationals(reg, a);
            VectorExpr vb = VectorExpr::from_rationals(reg, b);
            Poly ip = Poly::constant(reg, GaussianRational(Rational(2) * dot(a, b)));
            CHECK(anticommutator(clifford_c(va, reg), clifford_c(vb, reg)) == id.scaled(-ip));
            CHECK(anticommutator(clifford_hatc(va, reg), clifford_hatc(vb, reg)) ==
                  id.scaled(ip));
            CHECK(anticommutator(clifford_c(va, reg), clifford_hatc(vb, reg)).is_zero());
        }
    }
}

TEST_CASE("trace goldens") {
    // tr[id] = 16 in dimension 4.
    {
        auto reg = SymbolRegistry::standard(4);
        CHECK(CliffordOperator::identity(4, reg).trace() ==
              Poly::constant(reg, GaussianRational(Rational(16))));
    }
    // tr[c(dx_3)^2] = -8 in dimension 3.
    {
        auto reg = SymbolRegistry::standard(3);
        CliffordOperator c3 = clifford_c(VectorExpr::frame(reg, 3, 3), reg);
        CHECK((c3 * c3).trace() == Poly::constant(reg, GaussianRational(Rational(-8))));
    }
    // tr[hc(V) c(xi') hc(V) c(xi)] = 16 sum_k xi_k^2 with the full covariable
    // xi = xi' + xi_n dx_n (xi_n as an extra formal symbol): the xi_n cross
    // term cancels exactly.
    {
        auto reg = SymbolRegistry::standard(4, {"xi_n"});
        std::vector<Rational> vcoords = {rat(2, 3), rat(-1, 3), rat(2, 3), Rational(0)};
        VectorExpr V = VectorExpr::from_rationals(reg, vcoords);
        VectorExpr xi_prime = VectorExpr::xi_prime(reg, 4);
        VectorExpr xi = xi_prime +
                        VectorExpr::frame(reg, 4, 4).scaled(Poly::symbol(reg, reg->require("xi_n")));
        Poly tr = (clifford_hatc(V, reg) * clifford_c(xi_prime, reg) *
                   clifford_hatc(V, reg) * clifford_c(xi, reg))
                      .trace();
        Poly expect = Poly::zero(reg);
        for (int k = 1; k <= 3; ++k) expect += Poly::symbol(reg, reg->xi(k), 2);
        CHECK(tr == expect.scaled(GaussianRational(Rational(16))));
    }
    // tr[hc(V) d_{x_n}(c(xi')) hc(V) c(xi')] = 8 h'(0) sum_k xi_k^2, with
    // d_{x_n}(c(xi')) = (h'(0)/2) c(xi') in the collar frame.
    {
        auto reg = SymbolRegistry::standard(4);
        std::vector<Rational> vcoords = {rat(1, 3), rat(2, 3), rat(-2, 3), Rational(0)};
        VectorExpr V = VectorExpr::from_rationals(reg, vcoords);
        VectorExpr xi_prime = VectorExpr::xi_prime(reg, 4);
        Poly half_h1 = Poly::symbol(reg, reg->h1()).scaled(GaussianRational(rat(1, 2)));
        CliffordOperator d_xn_c = clifford_c(xi_prime, reg).scaled(half_h1);
        Poly tr = (clifford_hatc(V, reg) * d_xn_c * clifford_hatc(V, reg) *
                   clifford_c(xi_prime, reg))
                      .trace();
        Poly expect = Poly::zero(reg);
        for (int k = 1; k <= 3; ++k) expect += Poly::symbol(reg, reg->xi(k), 2);
        CHECK(tr == (Poly::symbol(reg, reg->h1()) * expect)
                        .scaled(GaussianRational(Rational(8))));
    }
}

TEST_CASE("exterior and interior multiplication are adjoint and compose to c, hc") {
    auto reg = SymbolRegistry::standard(3);
    for (int j = 1; j <= 3; ++j) {
        CliffordOperator eps = CliffordOperator::exterior_mult(3, reg, j);
        CliffordOperator iota = CliffordOperator::interior_mult(3, reg, j);
        CHECK(clifford_c(VectorExpr::frame(reg, 3, j), reg) == eps - iota);
        CHECK(clifford_hatc(VectorExpr::frame(reg, 3, j), reg) == eps + iota);
        // eps^2 = iota^2 = 0, eps iota + iota eps = id.
        CHECK((eps * eps).is_zero());
        CHECK((iota * iota).is_zero());
        CHECK(eps * iota + iota * eps == CliffordOperator::identity(3, reg));
    }
}
