#include "wrescalc/rational.hpp"

#include <stdexcept>

namespace wrescalc {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    for (unsigned k = 0; k < exp; ++k) acc *= base;
    return acc;
}

}  // namespace wrescalc
