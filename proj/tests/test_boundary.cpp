#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrescalc/boundary.hpp"
#include "wrescalc/lichnerowicz.hpp"

#include <array>

using namespace wrescalc;

namespace {

const std::array<BoundaryCase, 5> kCases = {BoundaryCase::aI, BoundaryCase::aII,
                                            BoundaryCase::aIII, BoundaryCase::b,
                                            BoundaryCase::c};

}  // namespace

TEST_CASE("generated boundary data satisfies every constraint") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        BoundaryData bd = random_boundary_data(seed, 4);
        CHECK_NOTHROW(bd.validate());
        // The normal derivative row is tangent as well.
        Rational ip;
        for (std::size_t k = 0; k < bd.V.size(); ++k) ip += bd.dnV[k] * bd.V[k];
        CHECK(ip == 0);
    }
    CHECK_NOTHROW(random_boundary_data(3, 3).validate());
}

TEST_CASE("symbol inverse: order-1 and order-0 residuals vanish for 20 random V") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        BoundaryData bd = random_boundary_data(seed, 4);
        InverseResidual res = verify_symbol_inverse(bd);
        CHECK(res.order1.is_zero());
        CHECK(res.order0.is_zero());
    }
}

TEST_CASE("case aI vanishes for 20 datasets and both pairings") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        BoundaryData bd = random_boundary_data(seed, 4);
        for (Pairing pair : {Pairing::StarPaired, Pairing::SelfPaired}) {
            PhiValue v = compute_phi(BoundaryCase::aI, pair, bd, SphereMode::PaperEmulation);
            REQUIRE(v.value.has_value());
            CHECK(v.value->is_zero());
            CHECK(v.matches_target);
        }
    }
}

TEST_CASE("per-case values are independent of the admissible data") {
    BoundaryData ref = random_boundary_data(1, 4);
    std::array<Poly, 5> baseline;
    for (std::size_t k = 0; k < kCases.size(); ++k) {
        PhiValue v = compute_phi(kCases[k], Pairing::StarPaired, ref,
                                 SphereMode::PaperEmulation);
        REQUIRE(v.value.has_value());
        baseline[k] = *v.value;
    }
    for (std::uint64_t seed = 2; seed <= 20; ++seed) {
        BoundaryData bd = random_boundary_data(seed, 4);
        for (std::size_t k = 0; k < kCases.size(); ++k) {
            PhiValue v = compute_phi(kCases[k], Pairing::StarPaired, bd,
                                     SphereMode::PaperEmulation);
            REQUIRE(v.value.has_value());
            CHECK(*v.value == baseline[k]);
        }
    }
}

TEST_CASE("the two pairings agree case by case") {
    for (std::uint64_t seed : {1ull, 5ull, 9ull}) {
        BoundaryData bd = random_boundary_data(seed, 4);
        for (BoundaryCase which : kCases) {
            PhiValue star = compute_phi(which, Pairing::StarPaired, bd,
                                        SphereMode::PaperEmulation);
            PhiValue self = compute_phi(which, Pairing::SelfPaired, bd,
                                        SphereMode::PaperEmulation);
            CHECK(star.raw == self.raw);
        }
    }
}

TEST_CASE("boundary report totals") {
    BoundaryData bd = random_boundary_data(7, 4);
    PhiReport report = compute_boundary_total(Pairing::StarPaired, bd,
                                              SphereMode::PaperEmulation);
    // The engine total is the exact sum of its parts.
    Poly sum = Poly::zero(report.recomputed_total.registry());
    for (const auto& v : report.cases) {
        REQUIRE(v.value.has_value());
        sum += *v.value;
    }
    CHECK(report.recomputed_total == sum);
    // The derived case values cancel exactly.
    CHECK(report.recomputed_total.is_zero());
    // The reference grand total and the sum of the reference parts disagree;
    // the report must flag that.
    CHECK_FALSE(report.totals_agree);
    CHECK(report.stated_parts_total != report.stated_total);
    // Difference is exactly the documented pi^2 h1 term: -27/8 - (-19/8) = -1.
    RegistryPtr reg = report.stated_total.registry();
    Poly diff = report.stated_total - report.stated_parts_total;
    Poly expected = Poly::symbol(reg, reg->pi(), 2) * Poly::symbol(reg, reg->h1());
    CHECK(diff == -expected);
}

TEST_CASE("negative control: breaking the normal-derivative tangency shifts case aII") {
    BoundaryData good = random_boundary_data(4, 4);
    PhiValue golden = compute_phi(BoundaryCase::aII, Pairing::StarPaired, good,
                                  SphereMode::PaperEmulation);
    REQUIRE(golden.value.has_value());

    BoundaryData bad = good;
    // dnV picks up a component along V, violating d_{x_n}|V|^2 = 0.
    for (std::size_t k = 0; k < bad.V.size(); ++k) bad.dnV[k] += bad.V[k];
    PhiValue broken = compute_phi(BoundaryCase::aII, Pairing::StarPaired, bad,
                                  SphereMode::PaperEmulation);
    Poly broken_value = broken.value ? *broken.value : broken.raw;
    CHECK(broken_value != *golden.value);
}

TEST_CASE("interior coefficients") {
    RegistryPtr reg = SymbolRegistry::standard(4);
    Poly k = Poly::symbol(reg, reg->require("K"));
    Poly g = Poly::symbol(reg, reg->require("gradV2"));
    Poly pi2 = Poly::symbol(reg, reg->pi(), 2);
    CHECK(compute_interior(InteriorKind::T11, reg) ==
          k.scaled(GaussianRational(rat(-4, 3))));
    CHECK(compute_interior(InteriorKind::T12, reg) ==
          k.scaled(GaussianRational(rat(-4, 3))) - g.scaled(GaussianRational(Rational(8))));
    CHECK(wres_interior(WresKind::star, 4, reg) ==
          pi2 * k.scaled(GaussianRational(rat(-128, 3))));
    CHECK(wres_interior(WresKind::square, 4, reg) ==
          pi2 * (k.scaled(GaussianRational(rat(-128, 3))) -
                 g.scaled(GaussianRational(Rational(256)))));
}

TEST_CASE("3-dimensional boundary term is 4 i pi^2 for every admissible V") {
    RegistryPtr reg3 = SymbolRegistry::standard(3);
    Poly expected = Poly::symbol(reg3, reg3->pi(), 2).scaled(gauss_i(4));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        BoundaryData bd = random_boundary_data(seed, 3);
        CHECK(compute_psi_3d(bd) == expected);
    }
}
