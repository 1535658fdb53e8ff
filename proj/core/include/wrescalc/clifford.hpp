// Matrix representation of the Clifford actions c(.) and hc(.) on the
// complexified exterior algebra of R^n.  Basis elements are subsets of
// {1..n} encoded as n-bit masks; entries are exact polynomials.
#pragma once

#include "wrescalc/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wrescalc {

using FockIndex = std::uint32_t;

// A vector sum(coords[j] * e_{j+1}) in the orthonormal frame; coordinates
// may be symbolic (e.g. xi').
struct VectorExpr {
    std::vector<Poly> coords;

    static VectorExpr frame(RegistryPtr reg, int n, int j);                  // e_j
    static VectorExpr from_rationals(RegistryPtr reg, const std::vector<Rational>& v);
    // xi' = sum_{k<n} xi_k e_k (last coordinate zero).
    static VectorExpr xi_prime(RegistryPtr reg, int n);

    int dim() const { return static_cast<int>(coords.size()); }
    Poly inner(const VectorExpr& o) const;
    VectorExpr scaled(const Poly& c) const;
    VectorExpr operator+(const VectorExpr& o) const;
};

class CliffordOperator {
public:
    CliffordOperator() = default;
    CliffordOperator(int n, RegistryPtr reg) : n_(n), reg_(std::move(reg)) {}

    static CliffordOperator identity(int n, RegistryPtr reg);
    static CliffordOperator zero(int n, RegistryPtr reg);

    // Exterior multiplication by e_j* (1-based j), with the prefix-count sign.
    static CliffordOperator exterior_mult(int n, RegistryPtr reg, int j);
    // Interior multiplication (adjoint of exterior_mult).
    static CliffordOperator interior_mult(int n, RegistryPtr reg, int j);

    int dim() const { return n_; }
    std::size_t side() const { return std::size_t(1) << n_; }
    const RegistryPtr& registry() const { return reg_; }
    const std::map<std::pair<FockIndex, FockIndex>, Poly>& entries() const { return entries_; }

    Poly entry(FockIndex row, FockIndex col) const;
    void set_entry(FockIndex row, FockIndex col, Poly value);

    CliffordOperator operator+(const CliffordOperator& o) const;
    CliffordOperator operator-(const CliffordOperator& o) const;
    CliffordOperator operator-() const;
    // Matrix product (this applied after o? No: (*this) * o is the usual
    // composition acting first with o).
    CliffordOperator operator*(const CliffordOperator& o) const;
    CliffordOperator& operator+=(const CliffordOperator& o) { *this = *this + o; return *this; }
    CliffordOperator& operator-=(const CliffordOperator& o) { *this = *this - o; return *this; }

    CliffordOperator scaled(const Poly& c) const;
    CliffordOperator scaled(const GaussianRational& c) const;

    bool is_zero() const { return entries_.empty(); }
    bool operator==(const CliffordOperator& o) const;
    bool operator!=(const CliffordOperator& o) const { return !(*this == o); }

    Poly trace() const;

private:
    void check_compatible(const CliffordOperator& o) const;
    void add_entry(FockIndex row, FockIndex col, const Poly& value);

    int n_ = 0;
    RegistryPtr reg_;
    std::map<std::pair<FockIndex, FockIndex>, Poly> entries_;
};

// c(v) = eps(v*) - iota(v*), hc(v) = eps(v*) + iota(v*); linear in v.
CliffordOperator clifford_c(const VectorExpr& v, RegistryPtr reg);
CliffordOperator clifford_hatc(const VectorExpr& v, RegistryPtr reg);

}  // namespace wrescalc
