#include "wrescalc/boundary.hpp"

#include <benchmark/benchmark.h>

using namespace wrescalc;

namespace {

void bm_poly_multiply(benchmark::State& state) {
    auto reg = SymbolRegistry::standard(4);
    Poly p = Poly::one(reg);
    for (int k = 1; k <= 3; ++k)
        p += Poly::symbol(reg, reg->xi(k)) * Poly::symbol(reg, reg->h1());
    Poly q = p * p;
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(bm_poly_multiply);

void bm_clifford_compose(benchmark::State& state) {
    auto reg = SymbolRegistry::standard(4);
    BoundaryData bd = random_boundary_data(1, 4);
    CliffordOperator a =
        clifford_hatc(VectorExpr::from_rationals(reg, bd.V), reg);
    CliffordOperator b = clifford_c(VectorExpr::xi_prime(reg, 4), reg);
    for (auto _ : state) benchmark::DoNotOptimize(a * b * a * b);
}
BENCHMARK(bm_clifford_compose);

void bm_phi_case(benchmark::State& state) {
    BoundaryData bd = random_boundary_data(1, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_phi(BoundaryCase::aII, Pairing::StarPaired,
                                             bd, SphereMode::PaperEmulation));
}
BENCHMARK(bm_phi_case);

}  // namespace

BENCHMARK_MAIN();
