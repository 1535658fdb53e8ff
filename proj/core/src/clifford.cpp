#include "wrescalc/clifford.hpp"

#include <bit>

namespace wrescalc {

VectorExpr VectorExpr::frame(RegistryPtr reg, int n, int j) {
    VectorExpr v;
    v.coords.assign(static_cast<std::size_t>(n), Poly::zero(reg));
    v.coords[static_cast<std::size_t>(j - 1)] = Poly::one(reg);
    return v;
}

VectorExpr VectorExpr::from_rationals(RegistryPtr reg, const std::vector<Rational>& vals) {
    VectorExpr v;
    for (const auto& r : vals) v.coords.push_back(Poly::constant(reg, GaussianRational(r)));
    return v;
}

VectorExpr VectorExpr::xi_prime(RegistryPtr reg, int n) {
    VectorExpr v;
    for (int k = 1; k < n; ++k) v.coords.push_back(Poly::symbol(reg, reg->xi(k)));
    v.coords.push_back(Poly::zero(reg));
    return v;
}

Poly VectorExpr::inner(const VectorExpr& o) const {
    if (coords.size() != o.coords.size())
        throw DimensionMismatchError("inner product of vectors of different dimension");
    Poly acc = Poly::zero(coords.front().registry());
    for (std::size_t k = 0; k < coords.size(); ++k) acc += coords[k] * o.coords[k];
    return acc;
}

VectorExpr VectorExpr::scaled(const Poly& c) const {
    VectorExpr v;
    for (const auto& p : coords) v.coords.push_back(p * c);
    return v;
}

VectorExpr VectorExpr::operator+(const VectorExpr& o) const {
    if (coords.size() != o.coords.size())
        throw DimensionMismatchError("sum of vectors of different dimension");
    VectorExpr v;
    for (std::size_t k = 0; k < coords.size(); ++k) v.coords.push_back(coords[k] + o.coords[k]);
    return v;
}

CliffordOperator CliffordOperator::identity(int n, RegistryPtr reg) {
    CliffordOperator a(n, reg);
    for (FockIndex s = 0; s < (FockIndex(1) << n); ++s)
        a.entries_.emplace(std::make_pair(s, s), Poly::one(reg));
    return a;
}

CliffordOperator CliffordOperator::zero(int n, RegistryPtr reg) {
    return CliffordOperator(n, std::move(reg));
}

namespace {
// (-1)^{#{k in mask : k < j}} with 1-based j.
int prefix_sign(FockIndex mask, int j) {
    FockIndex below = mask & ((FockIndex(1) << (j - 1)) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}
}  // namespace

CliffordOperator CliffordOperator::exterior_mult(int n, RegistryPtr reg, int j) {
    if (j < 1 || j > n) throw DimensionMismatchError("frame index out of range");
    CliffordOperator a(n, reg);
    const FockIndex bit = FockIndex(1) << (j - 1);
    for (FockIndex s = 0; s < (FockIndex(1) << n); ++s) {
        if (s & bit) continue;
        GaussianRational sign{Rational(prefix_sign(s, j))};
        a.entries_.emplace(std::make_pair(s | bit, s), Poly::constant(reg, sign));
    }
    return a;
}

CliffordOperator CliffordOperator::interior_mult(int n, RegistryPtr reg, int j) {
    if (j < 1 || j > n) throw DimensionMismatchError("frame index out of range");
    CliffordOperator a(n, reg);
    const FockIndex bit = FockIndex(1) << (j - 1);
    for (FockIndex s = 0; s < (FockIndex(1) << n); ++s) {
        if (!(s & bit)) continue;
        GaussianRational sign{Rational(prefix_sign(s, j))};
        a.entries_.emplace(std::make_pair(s & ~bit, s), Poly::constant(reg, sign));
    }
    return a;
}

Poly CliffordOperator::entry(FockIndex row, FockIndex col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Poly::zero(reg_) : it->second;
}

void CliffordOperator::set_entry(FockIndex row, FockIndex col, Poly value) {
    if (value.is_zero())
        entries_.erase({row, col});
    else
        entries_.insert_or_assign({row, col}, std::move(value));
}

void CliffordOperator::check_compatible(const CliffordOperator& o) const {
    if (n_ != o.n_) throw DimensionMismatchError("operator dimensions differ");
    if (reg_ != o.reg_) throw RegistryMismatchError("operators use distinct symbol registries");
}

void CliffordOperator::add_entry(FockIndex row, FockIndex col, const Poly& value) {
    if (value.is_zero()) return;
    auto it = entries_.find({row, col});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(row, col), value);
    } else {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

CliffordOperator CliffordOperator::operator+(const CliffordOperator& o) const {
    check_compatible(o);
    CliffordOperator r = *this;
    for (const auto& [rc, p] : o.entries_) r.add_entry(rc.first, rc.second, p);
    return r;
}

CliffordOperator CliffordOperator::operator-(const CliffordOperator& o) const {
    check_compatible(o);
    CliffordOperator r = *this;
    for (const auto& [rc, p] : o.entries_) r.add_entry(rc.first, rc.second, -p);
    return r;
}

CliffordOperator CliffordOperator::operator-() const {
    CliffordOperator r(n_, reg_);
    for (const auto& [rc, p] : entries_) r.entries_.emplace(rc, -p);
    return r;
}

CliffordOperator CliffordOperator::operator*(const CliffordOperator& o) const {
    check_compatible(o);
    CliffordOperator r(n_, reg_);
    // entries are keyed (row, col); group o's by row for the inner loop.
    for (const auto& [rc_a, pa] : entries_) {
        const FockIndex mid = rc_a.second;
        auto it = o.entries_.lower_bound({mid, 0});
        for (; it != o.entries_.end() && it->first.first == mid; ++it)
            r.add_entry(rc_a.first, it->first.second, pa * it->second);
    }
    return r;
}

CliffordOperator CliffordOperator::scaled(const Poly& c) const {
    CliffordOperator r(n_, reg_);
    if (c.is_zero()) return r;
    for (const auto& [rc, p] : entries_) {
        Poly v = p * c;
        if (!v.is_zero()) r.entries_.emplace(rc, std::move(v));
    }
    return r;
}

CliffordOperator CliffordOperator::scaled(const GaussianRational& c) const {
    CliffordOperator r(n_, reg_);
    if (c.is_zero()) return r;
    for (const auto& [rc, p] : entries_) r.entries_.emplace(rc, p.scaled(c));
    return r;
}

bool CliffordOperator::operator==(const CliffordOperator& o) const {
    check_compatible(o);
    return entries_ == o.entries_;
}

Poly CliffordOperator::trace() const {
    Poly t = Poly::zero(reg_);
    for (const auto& [rc, p] : entries_)
        if (rc.first == rc.second) t += p;
    return t;
}

CliffordOperator clifford_c(const VectorExpr& v, RegistryPtr reg) {
    const int n = v.dim();
    CliffordOperator acc = CliffordOperator::zero(n, reg);
    for (int j = 1; j <= n; ++j) {
        if (v.coords[static_cast<std::size_t>(j - 1)].is_zero()) continue;
        CliffordOperator gen = CliffordOperator::exterior_mult(n, reg, j) -
                               CliffordOperator::interior_mult(n, reg, j);
        acc += gen.scaled(v.coords[static_cast<std::size_t>(j - 1)]);
    }
    return acc;
}

CliffordOperator clifford_hatc(const VectorExpr& v, RegistryPtr reg) {
    const int n = v.dim();
    CliffordOperator acc = CliffordOperator::zero(n, reg);
    for (int j = 1; j <= n; ++j) {
        if (v.coords[static_cast<std::size_t>(j - 1)].is_zero()) continue;
        CliffordOperator gen = CliffordOperator::exterior_mult(n, reg, j) +
                               CliffordOperator::interior_mult(n, reg, j);
        acc += gen.scaled(v.coords[static_cast<std::size_t>(j - 1)]);
    }
    return acc;
}

}  // namespace wrescalc
