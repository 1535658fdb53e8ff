#include "wrescalc/poly.hpp"

#include <algorithm>
#include <numeric>

namespace wrescalc {

std::size_t Poly::term_limit = 1000000;

namespace {
unsigned vec_degree(const ExponentVec& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}
}  // namespace

bool GradedLexGreater::operator()(const ExponentVec& a, const ExponentVec& b) const {
    unsigned da = vec_degree(a), db = vec_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(RegistryPtr reg, GaussianRational c) {
    Poly p(std::move(reg));
    if (!c.is_zero()) p.terms_.emplace(ExponentVec(p.reg_->size(), 0), std::move(c));
    return p;
}

Poly Poly::symbol(RegistryPtr reg, SymbolId s, unsigned exp) {
    Poly p(std::move(reg));
    if (!s.valid() || static_cast<std::size_t>(s.index) >= p.reg_->size())
        throw UnboundSymbolError("symbol id out of range");
    if (exp == 0) return one(p.reg_);
    ExponentVec e(p.reg_->size(), 0);
    e[static_cast<std::size_t>(s.index)] = exp;
    p.terms_.emplace(std::move(e), GaussianRational(Rational(1)));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && vec_degree(terms_.begin()->first) == 0);
}

GaussianRational Poly::constant_term() const {
    if (terms_.empty()) return {};
    ExponentVec zero(reg_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

void Poly::check_same_registry(const Poly& o) const {
    if (reg_ != o.reg_)
        throw RegistryMismatchError("polynomials belong to distinct symbol registries");
}

void Poly::add_term(const ExponentVec& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(reg_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_registry(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_registry(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_registry(o);
    Poly r(reg_);
    const std::size_t w = reg_->size();
    ExponentVec e(w, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < w; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
            if (r.terms_.size() > term_limit)
                throw TermLimitError("polynomial term count exceeded limit");
        }
    }
    return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly r(reg_);
    if (c.is_zero()) return r;
    for (const auto& [e, tc] : terms_) r.terms_.emplace(e, tc * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_same_registry(o);
    return terms_ == o.terms_;
}

Poly Poly::diff(SymbolId s) const {
    if (!s.valid()) throw UnboundSymbolError("invalid symbol id in diff");
    const auto idx = static_cast<std::size_t>(s.index);
    Poly r(reg_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        ExponentVec d = e;
        GaussianRational coeff = c * GaussianRational(Rational(static_cast<long>(e[idx])));
        --d[idx];
        r.add_term(d, coeff);
    }
    return r;
}

Poly Poly::antidiff(SymbolId s) const {
    if (!s.valid()) throw UnboundSymbolError("invalid symbol id in antidiff");
    const auto idx = static_cast<std::size_t>(s.index);
    Poly r(reg_);
    for (const auto& [e, c] : terms_) {
        ExponentVec d = e;
        ++d[idx];
        Rational inv(1, static_cast<long>(d[idx]));
        inv.canonicalize();
        r.add_term(d, c * GaussianRational(inv));
    }
    return r;
}

GaussianRational Poly::eval(const std::function<GaussianRational(SymbolId)>& assignment) const {
    GaussianRational total;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            term *= assignment(SymbolId{static_cast<int>(k)}).pow(e[k]);
        }
        total += term;
    }
    return total;
}

Poly Poly::substitute(SymbolId s, const Poly& value) const {
    check_same_registry(value);
    if (!s.valid()) throw UnboundSymbolError("invalid symbol id in substitute");
    const auto idx = static_cast<std::size_t>(s.index);
    Poly r(reg_);
    for (const auto& [e, c] : terms_) {
        Poly term(reg_);
        ExponentVec rest = e;
        unsigned exp = rest[idx];
        rest[idx] = 0;
        term.add_term(rest, c);
        for (unsigned k = 0; k < exp; ++k) term *= value;
        r += term;
    }
    return r;
}

unsigned Poly::degree_in(SymbolId s) const {
    const auto idx = static_cast<std::size_t>(s.index);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, vec_degree(e));
    return d;
}

Poly Poly::div_pi_power(unsigned k) const {
    if (k == 0) return *this;
    const auto idx = static_cast<std::size_t>(reg_->pi().index);
    Poly r(reg_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] < k)
            throw IllFormedIntegrandError("polynomial not divisible by pi^" + std::to_string(k));
        ExponentVec d = e;
        d[idx] -= k;
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::reduce_on_sphere(int n) const {
    SymbolId x1 = reg_->find("xi_1");
    if (!x1.valid()) return *this;
    // xi_1^2 -> 1 - xi_2^2 - ... - xi_{n-1}^2
    Poly rhs = Poly::one(reg_);
    for (int k = 2; k < n; ++k) rhs -= Poly::symbol(reg_, reg_->xi(k), 2);
    Poly cur = *this;
    const auto idx = static_cast<std::size_t>(x1.index);
    for (;;) {
        bool found = false;
        Poly next(reg_);
        for (const auto& [e, c] : cur.terms_) {
            if (e[idx] >= 2) {
                found = true;
                ExponentVec d = e;
                d[idx] -= 2;
                Poly rest(reg_);
                rest.add_term(d, c);
                next += rest * rhs;
            } else {
                next.add_term(e, c);
            }
        }
        cur = std::move(next);
        if (!found) break;
    }
    return cur;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += reg_->name(static_cast<int>(k));
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coeff;
        if (mono.empty()) {
            coeff = c.str();
        } else {
            std::string inner;
            if (c.im == 0) {
                inner = rational_str(c.re);
            } else if (c.re == 0) {
                inner = (c.im == 1) ? "i" : (c.im == -1) ? "-i" : rational_str(c.im) + "*i";
            } else {
                inner = rational_str(c.re) + (c.im > 0 ? "+" : "") +
                        ((c.im == 1) ? "i" : (c.im == -1) ? "-i" : rational_str(c.im) + "*i");
            }
            coeff = "(" + inner + ")*" + mono;
        }
        if (!first) out += " + ";
        out += coeff;
        first = false;
    }
    return out;
}

std::string Poly::latex() const {
    if (terms_.empty()) return "0";
    auto sym_tex = [&](int k) -> std::string {
        const std::string& nm = reg_->name(k);
        if (nm == "h1") return "h'(0)";
        if (nm == "pi") return "\\pi";
        if (nm == "K") return "K";
        if (nm == "gradV2") return "\\sum_q|\\nabla^L_{e_q}V|^2";
        if (nm.rfind("xi_", 0) == 0) return "\\xi_{" + nm.substr(3) + "}";
        return nm;
    };
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            mono += sym_tex(static_cast<int>(k));
            if (e[k] > 1) mono += "^{" + std::to_string(e[k]) + "}";
        }
        std::string piece = c.latex();
        if (!mono.empty()) {
            if (c.is_one()) piece = mono;
            else piece += mono;
        }
        if (!first) out += " + ";
        out += piece;
        first = false;
    }
    return out;
}

}  // namespace wrescalc
