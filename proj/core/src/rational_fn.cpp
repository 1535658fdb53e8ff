#include "wrescalc/rational_fn.hpp"

#include "wrescalc/errors.hpp"

#include <sstream>
#include <utility>

namespace wrescalc {

namespace {

// Dense polynomials in xi_n with Poly coefficients, index = power.
using XnPoly = std::vector<Poly>;

void trim(XnPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

XnPoly xadd(const XnPoly& a, const XnPoly& b, RegistryPtr reg) {
    XnPoly r(std::max(a.size(), b.size()), Poly::zero(reg));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    trim(r);
    return r;
}

XnPoly xmul(const XnPoly& a, const XnPoly& b, RegistryPtr reg) {
    if (a.empty() || b.empty()) return {};
    XnPoly r(a.size() + b.size() - 1, Poly::zero(reg));
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k) r[j + k] += a[j] * b[k];
    trim(r);
    return r;
}

XnPoly xscale(const XnPoly& a, const GaussianRational& c) {
    if (c.is_zero()) return {};
    XnPoly r;
    r.reserve(a.size());
    for (const auto& p : a) r.push_back(p.scaled(c));
    trim(r);
    return r;
}

XnPoly xdiff(const XnPoly& a) {
    XnPoly r;
    for (std::size_t k = 1; k < a.size(); ++k)
        r.push_back(a[k].scaled(GaussianRational(Rational(static_cast<long>(k)))));
    trim(r);
    return r;
}

Poly xeval(const XnPoly& a, const GaussianRational& x, RegistryPtr reg) {
    Poly acc = Poly::zero(reg);
    for (std::size_t k = a.size(); k-- > 0;) acc = acc.scaled(x) + a[k];
    return acc;
}

// Synthetic division by (xi_n - r): a = q*(xi_n - r) + rem.
std::pair<XnPoly, Poly> xdivide_linear(const XnPoly& a, const GaussianRational& r,
                                       RegistryPtr reg) {
    if (a.empty()) return {{}, Poly::zero(reg)};
    XnPoly q(a.size() - 1, Poly::zero(reg));
    Poly carry = Poly::zero(reg);
    for (std::size_t k = a.size() - 1; k >= 1; --k) {
        carry = a[k] + carry.scaled(r);
        q[k - 1] = carry;
    }
    Poly rem = a[0] + carry.scaled(r);
    return {std::move(q), std::move(rem)};
}

const GaussianRational kI = GaussianRational::i();
const GaussianRational kMinusI = -GaussianRational::i();

// (xi_n - r)^k as a dense polynomial.
XnPoly xlinear_pow(const GaussianRational& r, unsigned k, RegistryPtr reg) {
    XnPoly acc{Poly::one(reg)};
    XnPoly lin{Poly::constant(reg, -r), Poly::one(reg)};
    for (unsigned j = 0; j < k; ++j) acc = xmul(acc, lin, reg);
    return acc;
}

}  // namespace

RationalFn RationalFn::zero(RegistryPtr reg) { return RationalFn(std::move(reg)); }

RationalFn RationalFn::from_poly(const Poly& p) {
    RationalFn f(p.registry());
    if (!p.is_zero()) f.num_ = {p};
    return f;
}

RationalFn RationalFn::make(RegistryPtr reg, std::vector<Poly> num, unsigned pm, unsigned pp) {
    RationalFn f(std::move(reg));
    f.num_ = std::move(num);
    f.pm_ = pm;
    f.pp_ = pp;
    f.canonicalize();
    return f;
}

void RationalFn::canonicalize() {
    trim(num_);
    if (num_.empty()) {
        pm_ = pp_ = 0;
        return;
    }
    while (pm_ > 0) {
        auto [q, rem] = xdivide_linear(num_, kI, reg_);
        if (!rem.is_zero()) break;
        num_ = std::move(q);
        --pm_;
    }
    while (pp_ > 0) {
        auto [q, rem] = xdivide_linear(num_, kMinusI, reg_);
        if (!rem.is_zero()) break;
        num_ = std::move(q);
        --pp_;
    }
}

bool RationalFn::operator==(const RationalFn& o) const {
    return (*this - o).is_zero();
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (reg_ != o.reg_) throw RegistryMismatchError("rational functions use distinct registries");
    const unsigned pm = std::max(pm_, o.pm_);
    const unsigned pp = std::max(pp_, o.pp_);
    XnPoly a = xmul(num_, xmul(xlinear_pow(kI, pm - pm_, reg_),
                               xlinear_pow(kMinusI, pp - pp_, reg_), reg_),
                    reg_);
    XnPoly b = xmul(o.num_, xmul(xlinear_pow(kI, pm - o.pm_, reg_),
                                 xlinear_pow(kMinusI, pp - o.pp_, reg_), reg_),
                    reg_);
    return make(reg_, xadd(a, b, reg_), pm, pp);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    for (auto& p : r.num_) p = -p;
    return r;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    if (reg_ != o.reg_) throw RegistryMismatchError("rational functions use distinct registries");
    return make(reg_, xmul(num_, o.num_, reg_), pm_ + o.pm_, pp_ + o.pp_);
}

RationalFn RationalFn::scaled(const GaussianRational& c) const {
    return make(reg_, xscale(num_, c), pm_, pp_);
}

RationalFn RationalFn::scaled(const Poly& c) const {
    XnPoly n;
    n.reserve(num_.size());
    for (const auto& p : num_) n.push_back(p * c);
    return make(reg_, std::move(n), pm_, pp_);
}

RationalFn RationalFn::d_xi_n() const {
    if (is_zero()) return *this;
    // (N/D)' = N'/D - N D'/D^2 with D = (xi_n-i)^pm (xi_n+i)^pp.
    RationalFn t1 = make(reg_, xdiff(num_), pm_, pp_);
    RationalFn t2 = zero(reg_);
    if (pm_ > 0) {
        // -pm * N / ((xi_n-i)^{pm+1} (xi_n+i)^pp)
        t2 += make(reg_, xscale(num_, GaussianRational(Rational(-static_cast<long>(pm_)))),
                   pm_ + 1, pp_);
    }
    if (pp_ > 0) {
        t2 += make(reg_, xscale(num_, GaussianRational(Rational(-static_cast<long>(pp_)))),
                   pm_, pp_ + 1);
    }
    return t1 + t2;
}

RationalFn RationalFn::d_symbol(SymbolId s) const {
    XnPoly n;
    n.reserve(num_.size());
    for (const auto& p : num_) n.push_back(p.diff(s));
    return make(reg_, std::move(n), pm_, pp_);
}

namespace {

// k-th Taylor coefficient of N/(xi_n - other)^b at xi_n = at, where
// at != other.  Iterates the quotient rule.
Poly holo_part_taylor(XnPoly p, unsigned b, unsigned k, const GaussianRational& at,
                      const GaussianRational& other, RegistryPtr reg) {
    Rational fact(1);
    for (unsigned j = 0; j < k; ++j) {
        XnPoly lin{Poly::constant(reg, -other), Poly::one(reg)};  // (xi_n - other)
        XnPoly next = xadd(xmul(xdiff(p), lin, reg),
                           xscale(p, GaussianRational(Rational(-static_cast<long>(b)))), reg);
        p = std::move(next);
        ++b;
        fact *= Rational(static_cast<long>(j + 1));
    }
    Poly val = xeval(p, at, reg);
    GaussianRational scale = (at - other).pow(b).inverse() * GaussianRational(Rational(1) / fact);
    return val.scaled(scale);
}

}  // namespace

RationalFn RationalFn::pi_plus() const {
    if (pm_ == 0) return zero(reg_);
    RationalFn acc = zero(reg_);
    // principal part: sum_{k=1}^{pm} g^{(pm-k)}(i)/(pm-k)! / (xi_n-i)^k,
    // g = N/(xi_n+i)^pp.
    for (unsigned k = 1; k <= pm_; ++k) {
        Poly coeff = holo_part_taylor(num_, pp_, pm_ - k, kI, kMinusI, reg_);
        if (coeff.is_zero()) continue;
        acc += make(reg_, {coeff}, k, 0);
    }
    return acc;
}

RationalFn RationalFn::pi_minus() const {
    if (is_zero()) return *this;
    RationalFn acc = zero(reg_);
    // principal part at -i
    for (unsigned k = 1; k <= pp_; ++k) {
        Poly coeff = holo_part_taylor(num_, pm_, pp_ - k, kMinusI, kI, reg_);
        if (coeff.is_zero()) continue;
        acc += make(reg_, {coeff}, 0, k);
    }
    // polynomial part: quotient of N by the full denominator
    const int ddeg = static_cast<int>(pm_ + pp_);
    if (num_degree() >= ddeg) {
        XnPoly den = xmul(xlinear_pow(kI, pm_, reg_), xlinear_pow(kMinusI, pp_, reg_), reg_);
        XnPoly rem = num_;
        XnPoly quot(num_.size() - static_cast<std::size_t>(ddeg), Poly::zero(reg_));
        while (static_cast<int>(rem.size()) - 1 >= ddeg) {
            std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(ddeg);
            Poly lead = rem.back();  // denominator is monic
            quot[shift] += lead;
            for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= lead * den[j];
            trim(rem);
        }
        acc += make(reg_, std::move(quot), 0, 0);
    }
    return acc;
}

Poly RationalFn::residue_at_i() const {
    if (pm_ == 0) return Poly::zero(reg_);
    return holo_part_taylor(num_, pp_, pm_ - 1, kI, kMinusI, reg_);
}

Poly RationalFn::pi_prime() const {
    return residue_at_i().scaled(GaussianRational::i());
}

Poly RationalFn::integrate_line() const {
    if (is_zero()) return Poly::zero(reg_);
    if (num_degree() > static_cast<int>(pm_ + pp_) - 2)
        throw NotDecayingError("integrand does not decay on the real line");
    Poly res = residue_at_i();
    GaussianRational two_i = GaussianRational(Rational(2)) * GaussianRational::i();
    return res.scaled(two_i) * Poly::symbol(reg_, reg_->pi());
}

Poly RationalFn::eval_at_i() const {
    if (pm_ != 0) throw DivergentIntegralError("value at +i requested at a pole");
    Poly val = xeval(num_, kI, reg_);
    GaussianRational denom = (GaussianRational(Rational(2)) * GaussianRational::i()).pow(pp_);
    return val.scaled(denom.inverse());
}

std::string RationalFn::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (k) os << " + ";
        os << "(" << num_[k].str() << ")";
        if (k == 1) os << "*xi_n";
        if (k > 1) os << "*xi_n^" << k;
    }
    os << "]";
    if (pm_ || pp_) {
        os << " / [";
        if (pm_) os << "(xi_n-i)^" << pm_;
        if (pm_ && pp_) os << " ";
        if (pp_) os << "(xi_n+i)^" << pp_;
        os << "]";
    }
    return os.str();
}

}  // namespace wrescalc
