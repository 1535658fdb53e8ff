// Arbitrary-precision rationals. GMP's mpq_class already keeps the
// canonical form we need (gcd 1, positive denominator, 0 = 0/1).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wrescalc {

using Rational = mpq_class;

// Parses "p", "-p/q" or "p/q"; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

// Canonical rendering: "p" when q == 1, else "p/q".
std::string rational_str(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exp);

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace wrescalc
