// Sparse multivariate polynomials over the Gaussian rationals, the
// universal coefficient ring of the engine.  Terms are kept in graded-lex
// order; zero coefficients are never stored.
#pragma once

#include "wrescalc/errors.hpp"
#include "wrescalc/gaussian.hpp"
#include "wrescalc/symbols.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wrescalc {

using ExponentVec = std::vector<std::uint32_t>;

// Graded-lexicographic: higher total degree first, ties broken
// lexicographically on the exponent vector (first symbol major).
struct GradedLexGreater {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

class Poly {
public:
    using TermMap = std::map<ExponentVec, GaussianRational, GradedLexGreater>;

    Poly() = default;
    explicit Poly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static Poly constant(RegistryPtr reg, GaussianRational c);
    static Poly symbol(RegistryPtr reg, SymbolId s, unsigned exp = 1);
    static Poly zero(RegistryPtr reg) { return Poly(std::move(reg)); }
    static Poly one(RegistryPtr reg) { return constant(std::move(reg), GaussianRational(Rational(1))); }

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant coefficient (zero if absent).
    GaussianRational constant_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const GaussianRational& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly diff(SymbolId s) const;
    // Formal antiderivative in s (no constant of integration).
    Poly antidiff(SymbolId s) const;

    // Exact substitution; every symbol occurring in the polynomial must be
    // assigned or UnboundSymbolError is thrown.
    GaussianRational eval(const std::function<GaussianRational(SymbolId)>& assignment) const;

    // Substitutes a polynomial for one symbol.
    Poly substitute(SymbolId s, const Poly& value) const;

    unsigned degree_in(SymbolId s) const;
    unsigned total_degree() const;

    // Divides by pi^k; throws IllFormedIntegrandError when not divisible.
    Poly div_pi_power(unsigned k) const;

    // Normal form modulo (xi_1^2 + ... + xi_{n-1}^2 - 1): eliminates xi_1^2.
    Poly reduce_on_sphere(int n) const;

    std::string str() const;
    std::string latex() const;

    // Term-count guard for runaway intermediate products (default 1e6).
    static std::size_t term_limit;

private:
    void add_term(const ExponentVec& e, const GaussianRational& c);
    void check_same_registry(const Poly& o) const;

    RegistryPtr reg_;
    TermMap terms_;
};

inline Poly operator*(const GaussianRational& c, const Poly& p) { return p.scaled(c); }

}  // namespace wrescalc
