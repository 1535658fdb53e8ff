// Matrix-valued symbols on the boundary cosphere.
//
// HomogSymbol: sums of M(xi_n) / |xi|^{2m} before restriction, where M is a
// polynomial in xi_n with CliffordOperator coefficients (the tangential
// covariables stay inside the operator entries).  Derivatives stay in this
// form, avoiding any common-denominator lift.
//
// MatrixSymbol: the restriction to |xi'| = 1, i.e. a matrix of rational
// functions of xi_n with poles only at +/- i.
#pragma once

#include "wrescalc/clifford.hpp"
#include "wrescalc/rational_fn.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wrescalc {

class MatrixSymbol {
public:
    MatrixSymbol() = default;
    MatrixSymbol(int n, RegistryPtr reg) : n_(n), reg_(std::move(reg)) {}

    static MatrixSymbol zero(int n, RegistryPtr reg);
    // op * fn.
    static MatrixSymbol term(const CliffordOperator& op, const RationalFn& fn);
    static MatrixSymbol from_operator(const CliffordOperator& op);

    int dim() const { return n_; }
    const RegistryPtr& registry() const { return reg_; }
    const std::map<std::pair<FockIndex, FockIndex>, RationalFn>& entries() const {
        return entries_;
    }
    RationalFn entry(FockIndex row, FockIndex col) const;

    MatrixSymbol operator+(const MatrixSymbol& o) const;
    MatrixSymbol operator-(const MatrixSymbol& o) const;
    MatrixSymbol operator-() const;
    MatrixSymbol operator*(const MatrixSymbol& o) const;
    MatrixSymbol& operator+=(const MatrixSymbol& o) { *this = *this + o; return *this; }
    MatrixSymbol scaled(const GaussianRational& c) const;
    MatrixSymbol scaled(const Poly& c) const;
    MatrixSymbol scaled(const RationalFn& f) const;

    MatrixSymbol d_xi_n() const;
    // d/d xi_k for a tangential covariable (acts inside every coefficient).
    MatrixSymbol d_symbol(SymbolId s) const;
    MatrixSymbol pi_plus() const;

    // pi' and the line integral contract xi_n away, leaving operators.
    CliffordOperator pi_prime() const;
    CliffordOperator integrate_line() const;

    RationalFn trace() const;

    bool is_zero() const { return entries_.empty(); }
    // Zero as a function on the cosphere, i.e. entrywise zero modulo
    // sum xi_k^2 = 1.
    bool is_zero_on_sphere() const;
    bool equals_on_sphere(const MatrixSymbol& o) const;

private:
    void add_entry(FockIndex row, FockIndex col, const RationalFn& f);
    void check_compatible(const MatrixSymbol& o) const;

    int n_ = 0;
    RegistryPtr reg_;
    std::map<std::pair<FockIndex, FockIndex>, RationalFn> entries_;
};

class HomogSymbol {
public:
    struct Term {
        std::vector<CliffordOperator> num;  // coefficient of xi_n^k at index k
        unsigned m = 0;                     // power of |xi|^2
    };

    HomogSymbol() = default;
    HomogSymbol(int n, RegistryPtr reg) : n_(n), reg_(std::move(reg)) {}

    static HomogSymbol zero(int n, RegistryPtr reg);
    static HomogSymbol from_operator(const CliffordOperator& op, unsigned m = 0);
    // op * xi_n^k / |xi|^{2m}.
    static HomogSymbol monomial(const CliffordOperator& op, unsigned k, unsigned m);

    int dim() const { return n_; }
    const RegistryPtr& registry() const { return reg_; }
    const std::vector<Term>& terms() const { return terms_; }

    HomogSymbol operator+(const HomogSymbol& o) const;
    HomogSymbol operator-(const HomogSymbol& o) const;
    HomogSymbol operator-() const;
    HomogSymbol operator*(const HomogSymbol& o) const;
    HomogSymbol& operator+=(const HomogSymbol& o) { *this = *this + o; return *this; }
    HomogSymbol scaled(const GaussianRational& c) const;
    HomogSymbol scaled(const Poly& c) const;

    HomogSymbol d_xi_n() const;
    // d/d xi_i, i < n: differentiates operator entries and applies the
    // quotient rule -2m xi_i / |xi|^{2(m+1)} to the denominator.
    HomogSymbol d_xi(int i) const;

    // Exact zero test as a function of (xi_1..xi_n) away from 0.
    bool is_zero() const;
    bool operator==(const HomogSymbol& o) const { return (*this - o).is_zero(); }

    // Restriction to |xi'| = 1: |xi|^2 = (xi_n - i)(xi_n + i).
    MatrixSymbol restrict_to_boundary() const;

private:
    int n_ = 0;
    RegistryPtr reg_;
    std::vector<Term> terms_;
};

}  // namespace wrescalc
