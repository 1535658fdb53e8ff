// Shared helpers for the test suites: the DSL corpus and the numeric
// quadrature oracle for the residue calculus.
#pragma once

#include "wrescalc/rational_fn.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace wrescalc_test {

using namespace wrescalc;
using Complex = std::complex<double>;

// 50 expressions covering every grammar production: signed sums, products,
// powers, grouping, traces, both Clifford atoms, all vector atoms, and all
// scalar atoms.
inline const std::array<const char*, 50> kExprCorpus = {
    "1",
    "-1",
    "3/2",
    "-5/4",
    "i",
    "h1",
    "pi",
    "xi1",
    "xi2",
    "xi3",
    "c(V)",
    "hc(V)",
    "c(xi')",
    "hc(xi')",
    "c(dxn)",
    "hc(dxn)",
    "c(e1)",
    "c(e4)",
    "hc(e2)",
    "c(W1)",
    "hc(W3)",
    "1 + 2",
    "1 - 2/3",
    "-h1 + pi",
    "xi1 + xi2 - xi3",
    "2*h1",
    "i*pi*h1",
    "3/4*xi1*xi1",
    "c(V)*c(V)",
    "hc(V)*c(dxn)",
    "c(e1)*c(e2) + c(e2)*c(e1)",
    "hc(e1)*hc(e2) + hc(e2)*hc(e1)",
    "c(e1)*hc(e2) + hc(e2)*c(e1)",
    "tr[c(V)*c(V)]",
    "tr[hc(V)*c(dxn)*hc(V)*c(dxn)]",
    "tr[hc(V)*c(xi')*hc(V)*c(xi')]",
    "tr[c(e1)*c(e2)*c(e3)*c(e4)]",
    "(h1 + pi)",
    "(1 - i)*(1 + i)",
    "(c(e1) + c(e2))*c(e3)",
    "h1^2",
    "xi1^3",
    "c(V)^2",
    "(c(e1)*c(e2))^2",
    "(h1 + pi)^2",
    "tr[hc(V)*c(e1)]*tr[hc(V)*c(e2)]",
    "2*tr[c(dxn)^2] - tr[c(dxn)*c(dxn)]",
    "-tr[hc(W2)*c(xi')]",
    "1/2*h1*tr[hc(V)*c(xi')*hc(V)*c(xi')]",
    "tr[(c(e1) + i*c(e2))*(c(e1) - i*c(e2))]",
};

inline Complex to_complex(const GaussianRational& c) {
    return {c.re.get_d(), c.im.get_d()};
}

// Numeric value of a polynomial in the formal symbol pi only.
inline Complex poly_value(const Poly& p) {
    const auto& reg = p.registry();
    Complex out = 0.0;
    for (const auto& [exps, coeff] : p.terms()) {
        Complex term = to_complex(coeff);
        for (std::size_t s = 0; s < exps.size(); ++s) {
            if (exps[s] == 0) continue;
            if (reg->name(static_cast<int>(s)) != "pi")
                throw std::runtime_error("numeric oracle: unexpected symbol");
            term *= std::pow(M_PI, static_cast<double>(exps[s]));
        }
        out += term;
    }
    return out;
}

inline Complex fn_value(const RationalFn& f, Complex z) {
    Complex num = 0.0;
    for (std::size_t k = f.num().size(); k-- > 0;)
        num = num * z + poly_value(f.num()[k]);
    Complex den = std::pow(z - Complex(0, 1), static_cast<double>(f.pole_minus())) *
                  std::pow(z + Complex(0, 1), static_cast<double>(f.pole_plus()));
    return num / den;
}

// Quadrature of g over the real line via x = tan(theta), using composite
// 4-point Gauss-Legendre panels (no endpoint evaluation, so integrands with
// a nonzero limit at infinity are handled exactly as well).
template <typename G>
Complex line_integral(G&& g) {
    static const double nodes[4] = {-0.8611363115940526, -0.3399810435848563,
                                    0.3399810435848563, 0.8611363115940526};
    static const double weights[4] = {0.3478548451374538, 0.6521451548625461,
                                      0.6521451548625461, 0.3478548451374538};
    const int kPanels = 4096;
    const double a = -M_PI / 2, b = M_PI / 2;
    const double h = (b - a) / kPanels;
    Complex acc = 0.0;
    for (int k = 0; k < kPanels; ++k) {
        double mid = a + h * (k + 0.5);
        for (int q = 0; q < 4; ++q) {
            double theta = mid + 0.5 * h * nodes[q];
            double c = std::cos(theta);
            acc += weights[q] * g(std::tan(theta)) / (c * c);
        }
    }
    return acc * (h / 2.0);
}

inline RationalFn random_decaying_fn(std::mt19937_64& rng, RegistryPtr reg) {
    std::uniform_int_distribution<unsigned> pole(1, 3);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    unsigned pm = pole(rng), pp = pole(rng);
    std::uniform_int_distribution<int> deg(0, static_cast<int>(pm + pp) - 2);
    int d = deg(rng);
    std::vector<Poly> coeffs;
    for (int k = 0; k <= d; ++k)
        coeffs.push_back(Poly::constant(
            reg, GaussianRational(rat(num(rng), den(rng)), rat(num(rng), den(rng)))));
    return RationalFn::make(reg, std::move(coeffs), pm, pp);
}

}  // namespace wrescalc_test
