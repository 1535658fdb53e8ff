// Gaussian rationals a + b*i, the coefficient field for every polynomial
// in the engine.
#pragma once

#include "wrescalc/rational.hpp"

#include <string>

namespace wrescalc {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational real) : re(std::move(real)), im(0) {}
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    // Throws std::domain_error on division by zero.
    GaussianRational operator/(const GaussianRational& o) const;
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational pow(unsigned exp) const;

    // "-3/2", "i", "-i", "2*i", "(1-6*i)" style text; parenthesised iff both
    // parts are nonzero.
    std::string str() const;
    std::string latex() const;
};

inline GaussianRational gauss(long re_num, long re_den = 1) { return {rat(re_num, re_den)}; }
inline GaussianRational gauss_i(long im_num, long im_den = 1) { return {Rational(0), rat(im_num, im_den)}; }

}  // namespace wrescalc
