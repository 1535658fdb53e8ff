#include "wrescalc/matrix_symbol.hpp"

#include "wrescalc/errors.hpp"

namespace wrescalc {

MatrixSymbol MatrixSymbol::zero(int n, RegistryPtr reg) {
    return MatrixSymbol(n, std::move(reg));
}

MatrixSymbol MatrixSymbol::term(const CliffordOperator& op, const RationalFn& fn) {
    MatrixSymbol s(op.dim(), op.registry());
    if (fn.is_zero()) return s;
    for (const auto& [rc, p] : op.entries()) s.add_entry(rc.first, rc.second, fn.scaled(p));
    return s;
}

MatrixSymbol MatrixSymbol::from_operator(const CliffordOperator& op) {
    return term(op, RationalFn::from_poly(Poly::one(op.registry())));
}

RationalFn MatrixSymbol::entry(FockIndex row, FockIndex col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? RationalFn::zero(reg_) : it->second;
}

void MatrixSymbol::add_entry(FockIndex row, FockIndex col, const RationalFn& f) {
    if (f.is_zero()) return;
    auto it = entries_.find({row, col});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(row, col), f);
    } else {
        it->second += f;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void MatrixSymbol::check_compatible(const MatrixSymbol& o) const {
    if (n_ != o.n_) throw DimensionMismatchError("matrix symbols of different dimension");
    if (reg_ != o.reg_) throw RegistryMismatchError("matrix symbols use distinct registries");
}

MatrixSymbol MatrixSymbol::operator+(const MatrixSymbol& o) const {
    check_compatible(o);
    MatrixSymbol r = *this;
    for (const auto& [rc, f] : o.entries_) r.add_entry(rc.first, rc.second, f);
    return r;
}

MatrixSymbol MatrixSymbol::operator-(const MatrixSymbol& o) const { return *this + (-o); }

MatrixSymbol MatrixSymbol::operator-() const {
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.entries_.emplace(rc, -f);
    return r;
}

MatrixSymbol MatrixSymbol::operator*(const MatrixSymbol& o) const {
    check_compatible(o);
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc_a, fa] : entries_) {
        const FockIndex mid = rc_a.second;
        auto it = o.entries_.lower_bound({mid, 0});
        for (; it != o.entries_.end() && it->first.first == mid; ++it)
            r.add_entry(rc_a.first, it->first.second, fa * it->second);
    }
    return r;
}

MatrixSymbol MatrixSymbol::scaled(const GaussianRational& c) const {
    MatrixSymbol r(n_, reg_);
    if (c.is_zero()) return r;
    for (const auto& [rc, f] : entries_) r.entries_.emplace(rc, f.scaled(c));
    return r;
}

MatrixSymbol MatrixSymbol::scaled(const Poly& c) const {
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.add_entry(rc.first, rc.second, f.scaled(c));
    return r;
}

MatrixSymbol MatrixSymbol::scaled(const RationalFn& f) const {
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc, g] : entries_) r.add_entry(rc.first, rc.second, g * f);
    return r;
}

MatrixSymbol MatrixSymbol::d_xi_n() const {
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.add_entry(rc.first, rc.second, f.d_xi_n());
    return r;
}

MatrixSymbol MatrixSymbol::d_symbol(SymbolId s) const {
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.add_entry(rc.first, rc.second, f.d_symbol(s));
    return r;
}

MatrixSymbol MatrixSymbol::pi_plus() const {
    MatrixSymbol r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.add_entry(rc.first, rc.second, f.pi_plus());
    return r;
}

CliffordOperator MatrixSymbol::pi_prime() const {
    CliffordOperator r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.set_entry(rc.first, rc.second, f.pi_prime());
    return r;
}

CliffordOperator MatrixSymbol::integrate_line() const {
    CliffordOperator r(n_, reg_);
    for (const auto& [rc, f] : entries_) r.set_entry(rc.first, rc.second, f.integrate_line());
    return r;
}

RationalFn MatrixSymbol::trace() const {
    RationalFn t = RationalFn::zero(reg_);
    for (const auto& [rc, f] : entries_)
        if (rc.first == rc.second) t += f;
    return t;
}

bool MatrixSymbol::is_zero_on_sphere() const {
    for (const auto& [rc, f] : entries_) {
        for (const auto& coeff : f.num())
            if (!coeff.reduce_on_sphere(n_).is_zero()) return false;
    }
    return true;
}

bool MatrixSymbol::equals_on_sphere(const MatrixSymbol& o) const {
    return (*this - o).is_zero_on_sphere();
}

// ---------------------------------------------------------------------------

HomogSymbol HomogSymbol::zero(int n, RegistryPtr reg) { return HomogSymbol(n, std::move(reg)); }

HomogSymbol HomogSymbol::from_operator(const CliffordOperator& op, unsigned m) {
    return monomial(op, 0, m);
}

HomogSymbol HomogSymbol::monomial(const CliffordOperator& op, unsigned k, unsigned m) {
    HomogSymbol s(op.dim(), op.registry());
    if (op.is_zero()) return s;
    Term t;
    t.num.assign(k + 1, CliffordOperator::zero(op.dim(), op.registry()));
    t.num[k] = op;
    t.m = m;
    s.terms_.push_back(std::move(t));
    return s;
}

HomogSymbol HomogSymbol::operator+(const HomogSymbol& o) const {
    if (n_ != o.n_) throw DimensionMismatchError("homogeneous symbols of different dimension");
    if (reg_ != o.reg_) throw RegistryMismatchError("homogeneous symbols use distinct registries");
    HomogSymbol r = *this;
    // merge terms with equal denominator power
    for (const auto& t : o.terms_) {
        bool merged = false;
        for (auto& u : r.terms_) {
            if (u.m != t.m) continue;
            if (u.num.size() < t.num.size())
                u.num.resize(t.num.size(), CliffordOperator::zero(n_, reg_));
            for (std::size_t k = 0; k < t.num.size(); ++k) u.num[k] += t.num[k];
            merged = true;
            break;
        }
        if (!merged) r.terms_.push_back(t);
    }
    // drop all-zero terms
    std::vector<Term> keep;
    for (auto& u : r.terms_) {
        while (!u.num.empty() && u.num.back().is_zero()) u.num.pop_back();
        if (!u.num.empty()) keep.push_back(std::move(u));
    }
    r.terms_ = std::move(keep);
    return r;
}

HomogSymbol HomogSymbol::operator-(const HomogSymbol& o) const { return *this + (-o); }

HomogSymbol HomogSymbol::operator-() const {
    HomogSymbol r(n_, reg_);
    for (const auto& t : terms_) {
        Term u;
        u.m = t.m;
        for (const auto& op : t.num) u.num.push_back(-op);
        r.terms_.push_back(std::move(u));
    }
    return r;
}

HomogSymbol HomogSymbol::operator*(const HomogSymbol& o) const {
    if (n_ != o.n_) throw DimensionMismatchError("homogeneous symbols of different dimension");
    if (reg_ != o.reg_) throw RegistryMismatchError("homogeneous symbols use distinct registries");
    HomogSymbol r = zero(n_, reg_);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Term t;
            t.m = a.m + b.m;
            t.num.assign(a.num.size() + b.num.size() - 1, CliffordOperator::zero(n_, reg_));
            for (std::size_t j = 0; j < a.num.size(); ++j)
                for (std::size_t k = 0; k < b.num.size(); ++k)
                    t.num[j + k] += a.num[j] * b.num[k];
            HomogSymbol piece(n_, reg_);
            piece.terms_.push_back(std::move(t));
            r += piece;
        }
    }
    return r;
}

HomogSymbol HomogSymbol::scaled(const GaussianRational& c) const {
    HomogSymbol r(n_, reg_);
    if (c.is_zero()) return r;
    for (const auto& t : terms_) {
        Term u;
        u.m = t.m;
        for (const auto& op : t.num) u.num.push_back(op.scaled(c));
        r.terms_.push_back(std::move(u));
    }
    return r;
}

HomogSymbol HomogSymbol::scaled(const Poly& c) const {
    HomogSymbol r = zero(n_, reg_);
    if (c.is_zero()) return r;
    for (const auto& t : terms_) {
        Term u;
        u.m = t.m;
        for (const auto& op : t.num) u.num.push_back(op.scaled(c));
        HomogSymbol piece(n_, reg_);
        piece.terms_.push_back(std::move(u));
        r += piece;
    }
    return r;
}

HomogSymbol HomogSymbol::d_xi_n() const {
    HomogSymbol r = zero(n_, reg_);
    for (const auto& t : terms_) {
        // (M/|xi|^{2m})' = M'/|xi|^{2m} - 2m xi_n M/|xi|^{2(m+1)}
        Term d;
        d.m = t.m;
        for (std::size_t k = 1; k < t.num.size(); ++k)
            d.num.push_back(t.num[k].scaled(GaussianRational(Rational(static_cast<long>(k)))));
        if (!d.num.empty()) {
            HomogSymbol piece(n_, reg_);
            piece.terms_.push_back(std::move(d));
            r += piece;
        }
        if (t.m > 0) {
            Term q;
            q.m = t.m + 1;
            q.num.assign(t.num.size() + 1, CliffordOperator::zero(n_, reg_));
            for (std::size_t k = 0; k < t.num.size(); ++k)
                q.num[k + 1] = t.num[k].scaled(GaussianRational(Rational(-2L * t.m)));
            HomogSymbol piece(n_, reg_);
            piece.terms_.push_back(std::move(q));
            r += piece;
        }
    }
    return r;
}

HomogSymbol HomogSymbol::d_xi(int i) const {
    HomogSymbol r = zero(n_, reg_);
    const SymbolId xi_i = reg_->xi(i);
    const Poly xi_poly = Poly::symbol(reg_, xi_i);
    for (const auto& t : terms_) {
        Term d;
        d.m = t.m;
        bool nonzero = false;
        for (const auto& op : t.num) {
            CliffordOperator dop(n_, reg_);
            for (const auto& [rc, p] : op.entries()) dop.set_entry(rc.first, rc.second, p.diff(xi_i));
            nonzero = nonzero || !dop.is_zero();
            d.num.push_back(std::move(dop));
        }
        if (nonzero) {
            HomogSymbol piece(n_, reg_);
            piece.terms_.push_back(std::move(d));
            r += piece;
        }
        if (t.m > 0) {
            Term q;
            q.m = t.m + 1;
            for (const auto& op : t.num)
                q.num.push_back(op.scaled(xi_poly.scaled(GaussianRational(Rational(-2L * t.m)))));
            HomogSymbol piece(n_, reg_);
            piece.terms_.push_back(std::move(q));
            r += piece;
        }
    }
    return r;
}

bool HomogSymbol::is_zero() const {
    if (terms_.empty()) return true;
    unsigned max_m = 0;
    for (const auto& t : terms_) max_m = std::max(max_m, t.m);
    // lift everything over |xi|^{2 max_m}; |xi|^2 = sum_{k<n} xi_k^2 + xi_n^2
    Poly tang = Poly::zero(reg_);
    for (int k = 1; k < n_; ++k) tang += Poly::symbol(reg_, reg_->xi(k), 2);
    std::vector<CliffordOperator> acc;
    for (const auto& t : terms_) {
        std::vector<CliffordOperator> cur = t.num;
        for (unsigned j = t.m; j < max_m; ++j) {
            std::vector<CliffordOperator> next(cur.size() + 2,
                                               CliffordOperator::zero(n_, reg_));
            for (std::size_t k = 0; k < cur.size(); ++k) {
                next[k] += cur[k].scaled(tang);
                next[k + 2] += cur[k];
            }
            cur = std::move(next);
        }
        if (acc.size() < cur.size()) acc.resize(cur.size(), CliffordOperator::zero(n_, reg_));
        for (std::size_t k = 0; k < cur.size(); ++k) acc[k] += cur[k];
    }
    for (const auto& op : acc)
        if (!op.is_zero()) return false;
    return true;
}

MatrixSymbol HomogSymbol::restrict_to_boundary() const {
    MatrixSymbol r = MatrixSymbol::zero(n_, reg_);
    for (const auto& t : terms_) {
        for (std::size_t k = 0; k < t.num.size(); ++k) {
            if (t.num[k].is_zero()) continue;
            std::vector<Poly> num(k + 1, Poly::zero(reg_));
            num[k] = Poly::one(reg_);
            RationalFn fn = RationalFn::make(reg_, std::move(num), t.m, t.m);
            r += MatrixSymbol::term(t.num[k], fn);
        }
    }
    return r;
}

}  // namespace wrescalc
