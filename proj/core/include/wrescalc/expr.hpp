// Small expression DSL for ad-hoc Clifford trace checks.
//
// Grammar (LL(1)):
//   EXPR   := ['-'] TERM (('+'|'-') TERM)*
//   TERM   := FACTOR ('*' FACTOR)*
//   FACTOR := SCALAR | 'c' '(' VEC ')' | 'hc' '(' VEC ')'
//           | 'tr' '[' EXPR ']' | '(' EXPR ')' | FACTOR '^' INT
//   VEC    := 'V' | "xi'" | 'dxn' | 'e' INT | 'W' INT
//   SCALAR := rational | 'i' | 'h1' | 'pi' | 'xi' INT
//
// There are no binding forms; sums over a frame index are macro-expanded by
// expand_sums, which treats index 0 (e0, W0, xi0) as the expansion
// placeholder.
#pragma once

#include "wrescalc/boundary.hpp"
#include "wrescalc/clifford.hpp"
#include "wrescalc/lichnerowicz.hpp"
#include "wrescalc/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wrescalc {

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class ExprKind {
    Rational,   // p/q literal
    ImagUnit,   // i
    NamedScalar,// h1, pi
    XiVar,      // xi_k
    CVec,       // c(VEC)
    HcVec,      // hc(VEC)
    Trace,      // tr[EXPR]
    Sum,        // signed sum of >= 1 terms
    Product,    // ordered product of >= 2 factors
    Power,      // FACTOR ^ INT
};

enum class VecAtom { V, XiPrime, Dxn, Frame, UserRow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind{};
    SourceSpan span{};

    Rational number;              // Rational
    std::string name;             // NamedScalar: "h1" or "pi"
    int index = 0;                // XiVar / Frame / UserRow subscript, Power exponent
    VecAtom vec{};                // CVec / HcVec
    std::vector<ExprPtr> kids;    // children (Sum/Product/Trace/Power)
    std::vector<int> signs;       // Sum: +1 or -1 per child
};

// Parses and type-checks (trace applies only to operator-valued subtrees,
// operator-valued bases cannot be raised to a power through scalars, etc.).
// Throws ParseError with the source offset on failure.
ExprPtr parse_expr(const std::string& text);

// Canonical rendering; parse_expr(unparse(a)) is structurally equal to a.
std::string unparse(const ExprPtr& ast);

bool ast_equal(const ExprPtr& a, const ExprPtr& b);

// Macro-expands the index-0 placeholder atoms: returns the sum over
// k = 1..bound of the expression with e0 -> e_k, W0 -> W_k, xi0 -> xi_k.
// Expressions without placeholder atoms are returned unchanged.
ExprPtr expand_sums(const ExprPtr& ast, int bound);

// Evaluation environment.  Exactly one of bd/geo may be set; V/W atoms
// require one of them (W_k maps to nablaV row k resp. U row k).
struct EvalEnv {
    int n = 4;
    RegistryPtr reg;
    const BoundaryData* bd = nullptr;
    const GeometryData* geo = nullptr;
};

using ExprValue = std::variant<Poly, CliffordOperator>;

// Exact evaluation; trace nodes produce scalars.  Throws UnboundSymbolError
// for atoms missing from the environment and DimensionMismatchError for
// out-of-range frame indices.
ExprValue eval_expr(const ExprPtr& ast, const EvalEnv& env);

}  // namespace wrescalc
