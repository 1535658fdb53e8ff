#include "wrescalc/sphere.hpp"

#include "wrescalc/errors.hpp"

namespace wrescalc {

namespace {

Rational factorial(long m) {
    Rational r(1);
    for (long j = 2; j <= m; ++j) r *= Rational(j);
    return r;
}

// Gamma(m/2) for positive integer m, as r * sqrt(pi)^s with s in {0,1}.
struct HalfGamma {
    Rational r;
    int sqrt_pi = 0;
};

HalfGamma gamma_half(long m) {
    if (m <= 0) throw IllFormedIntegrandError("gamma at a non-positive half-integer");
    if (m % 2 == 0) return {factorial(m / 2 - 1), 0};
    // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi), with k = (m-1)/2.
    long k = (m - 1) / 2;
    Rational num = factorial(2 * k);
    Rational den = factorial(k);
    for (long j = 0; j < k; ++j) den *= Rational(4);
    return {num / den, 1};
}

// integral over S^{d-1} of prod xi_k^{a_k}: rational * pi^{pi_pow}.
void sphere_monomial_literal(const std::vector<long>& a, int d, Rational& coeff,
                             unsigned& pi_pow) {
    long total = 0;
    Rational num(2);
    int sqrt_pis = 0;
    for (long ak : a) {
        total += ak;
        HalfGamma g = gamma_half(ak + 1);
        num *= g.r;
        sqrt_pis += g.sqrt_pi;
    }
    HalfGamma den = gamma_half(total + d);
    num /= den.r;
    sqrt_pis -= den.sqrt_pi;
    if (sqrt_pis < 0 || sqrt_pis % 2 != 0)
        throw IllFormedIntegrandError("sphere integral is not a rational multiple of a pi power");
    coeff = num;
    pi_pow = static_cast<unsigned>(sqrt_pis / 2);
}

}  // namespace

Poly sphere_integrate(const Poly& density, int n, SphereMode mode) {
    const RegistryPtr& reg = density.registry();
    if (!reg) return density;
    std::vector<int> xi_index;  // registry indices of xi_1..xi_{n-1}
    for (int k = 1; k < n; ++k) xi_index.push_back(reg->xi(k).index);

    Poly out = Poly::zero(reg);
    const SymbolId pi_sym = reg->pi();
    for (const auto& [expo, c] : density.terms()) {
        std::vector<long> a;
        a.reserve(xi_index.size());
        long total = 0;
        for (int idx : xi_index) {
            long e = (static_cast<std::size_t>(idx) < expo.size()) ? expo[static_cast<std::size_t>(idx)] : 0;
            a.push_back(e);
            total += e;
        }
        bool odd = false;
        for (long ak : a) odd = odd || (ak % 2 != 0);
        if (odd) continue;

        Rational coeff;
        unsigned pi_pow = 0;
        if (mode == SphereMode::Literal) {
            sphere_monomial_literal(a, n - 1, coeff, pi_pow);
        } else {
            if (total > 2)
                throw IllFormedIntegrandError(
                    "cosphere density of degree > 2 in the tangential covariables");
            if (n == 4) {
                // constant -> Omega_3 = 2 pi^2; xi_k^2 -> Omega_3 * pi^2/6.
                coeff = (total == 0) ? Rational(2) : Rational(1) / Rational(3);
                pi_pow = (total == 0) ? 2 : 4;
            } else if (n == 3) {
                // constant -> 2 pi; xi_k^2 -> pi.
                coeff = (total == 0) ? Rational(2) : Rational(1);
                pi_pow = 1;
            } else {
                throw IllFormedIntegrandError("emulation rules are defined for n = 3 and 4 only");
            }
        }

        // strip the xi exponents, multiply in the pi power
        ExponentVec e2(reg->size(), 0);
        for (std::size_t j = 0; j < expo.size() && j < e2.size(); ++j) e2[j] = expo[j];
        for (int idx : xi_index) e2[static_cast<std::size_t>(idx)] = 0;
        e2[static_cast<std::size_t>(pi_sym.index)] += pi_pow;

        Poly term = Poly::one(reg);
        for (std::size_t j = 0; j < e2.size(); ++j)
            if (e2[j]) term *= Poly::symbol(reg, SymbolId{static_cast<int>(j)}, e2[j]);
        out += term.scaled(c * GaussianRational(coeff));
    }
    return out;
}

}  // namespace wrescalc
