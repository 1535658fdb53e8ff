// Scalar rational functions of xi_n restricted to the unit cosphere of the
// boundary: N(xi_n) / ((xi_n - i)^pm (xi_n + i)^pp), where the coefficients
// of N are exact polynomials in the remaining symbols.
#pragma once

#include "wrescalc/poly.hpp"

#include <string>
#include <vector>

namespace wrescalc {

class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(RegistryPtr reg) : reg_(std::move(reg)) {}

    static RationalFn zero(RegistryPtr reg);
    // A polynomial (in the remaining symbols), independent of xi_n.
    static RationalFn from_poly(const Poly& p);
    // num / ((xi_n - i)^pm (xi_n + i)^pp), num given as coefficients of
    // xi_n^k (index k).  Canonicalized on construction.
    static RationalFn make(RegistryPtr reg, std::vector<Poly> num, unsigned pm, unsigned pp);

    const RegistryPtr& registry() const { return reg_; }
    const std::vector<Poly>& num() const { return num_; }
    unsigned pole_minus() const { return pm_; }  // order at xi_n = +i
    unsigned pole_plus() const { return pp_; }   // order at xi_n = -i
    int num_degree() const { return static_cast<int>(num_.size()) - 1; }  // -1 if zero

    bool is_zero() const { return num_.empty(); }
    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
    RationalFn scaled(const GaussianRational& c) const;
    RationalFn scaled(const Poly& c) const;

    RationalFn d_xi_n() const;
    // Derivative in a non-normal symbol (acts on the numerator coefficients).
    RationalFn d_symbol(SymbolId s) const;

    // Projection onto the part with poles only at xi_n = +i (principal part
    // there); zero for functions holomorphic in the upper half-plane.
    RationalFn pi_plus() const;
    // Complementary projection: principal part at -i plus the polynomial
    // part, so that pi_plus() + pi_minus() == *this.
    RationalFn pi_minus() const;
    // Residue at xi_n = +i.
    Poly residue_at_i() const;
    // pi' f = i * res_{+i} f  (equals (1/2pi) * integral over R when f decays).
    Poly pi_prime() const;
    // Integral over the real line as an exact multiple of the formal symbol
    // "pi": 2*pi*i*res_{+i}.  Throws NotDecayingError unless
    // deg(num) <= pm + pp - 2.
    Poly integrate_line() const;
    // Value at xi_n = +i; requires pm == 0.
    Poly eval_at_i() const;

    std::string str() const;

private:
    void canonicalize();

    RegistryPtr reg_;
    std::vector<Poly> num_;
    unsigned pm_ = 0;
    unsigned pp_ = 0;
};

}  // namespace wrescalc
