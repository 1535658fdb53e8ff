#include "wrescalc/gaussian.hpp"

#include <stdexcept>

namespace wrescalc {

GaussianRational GaussianRational::inverse() const {
    Rational n = norm2();
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return {re / n, -im / n};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    return *this * o.inverse();
}

GaussianRational GaussianRational::pow(unsigned exp) const {
    GaussianRational acc{Rational(1)};
    for (unsigned k = 0; k < exp; ++k) acc *= *this;
    return acc;
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (im == 0) return rational_str(re);
    std::string imag;
    if (im == 1) {
        imag = "i";
    } else if (im == -1) {
        imag = "-i";
    } else {
        imag = rational_str(im) + "*i";
    }
    if (re == 0) return imag;
    std::string sep = (im > 0) ? "+" : "";
    return "(" + rational_str(re) + sep + imag + ")";
}

std::string GaussianRational::latex() const {
    auto rat_tex = [](const Rational& r) -> std::string {
        if (r.get_den() == 1) return r.get_num().get_str();
        std::string num = r.get_num().get_str();
        std::string sign;
        if (!num.empty() && num[0] == '-') {
            sign = "-";
            num = num.substr(1);
        }
        return sign + "\\frac{" + num + "}{" + r.get_den().get_str() + "}";
    };
    if (is_zero()) return "0";
    if (im == 0) return rat_tex(re);
    std::string imag;
    if (im == 1) imag = "i";
    else if (im == -1) imag = "-i";
    else imag = rat_tex(im) + "i";
    if (re == 0) return imag;
    std::string sep = (im > 0) ? "+" : "";
    return "\\left(" + rat_tex(re) + sep + imag + "\\right)";
}

}  // namespace wrescalc
