#include "wrescalc/expr.hpp"

#include <cctype>
#include <utility>

namespace wrescalc {
namespace {

enum class TokKind { Word, Int, Punct, End };

struct Token {
    TokKind kind;
    std::string text;   // Word: identifier; Punct: single char; Int: digits
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        cur_.begin = pos_;
        if (pos_ >= text_.size()) {
            cur_ = {TokKind::End, "", pos_, pos_};
            return;
        }
        char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            cur_ = {TokKind::Int, text_.substr(start, pos_ - start), start, pos_};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            // "xi'" is a single atom.
            if (word == "xi" && pos_ < text_.size() && text_[pos_] == '\'') {
                ++pos_;
                word = "xi'";
            }
            cur_ = {TokKind::Word, std::move(word), start, pos_};
            return;
        }
        static const std::string puncts = "+-*/^()[]";
        if (puncts.find(ch) != std::string::npos) {
            cur_ = {TokKind::Punct, std::string(1, ch), pos_, pos_ + 1};
            ++pos_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token cur_{TokKind::End, "", 0, 0};
};

using NodePtr = std::shared_ptr<ExprNode>;

NodePtr make_node(ExprKind kind, SourceSpan span) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->span = span;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        if (lex_.peek().kind != TokKind::End)
            throw ParseError("trailing input after expression", lex_.peek().begin);
        return e;
    }

private:
    bool peek_punct(char ch) const {
        return lex_.peek().kind == TokKind::Punct && lex_.peek().text[0] == ch;
    }

    Token expect_punct(char ch, const std::string& what) {
        if (!peek_punct(ch))
            throw ParseError("expected '" + std::string(1, ch) + "' " + what,
                             lex_.peek().begin);
        return lex_.take();
    }

    int expect_int(const std::string& what) {
        if (lex_.peek().kind != TokKind::Int)
            throw ParseError("expected an integer " + what, lex_.peek().begin);
        return std::stoi(lex_.take().text);
    }

    ExprPtr parse_expr() {
        std::size_t start = lex_.peek().begin;
        std::vector<ExprPtr> terms;
        std::vector<int> signs;
        int sign = 1;
        if (peek_punct('-')) {
            lex_.take();
            sign = -1;
        }
        terms.push_back(parse_term());
        signs.push_back(sign);
        while (peek_punct('+') || peek_punct('-')) {
            sign = lex_.take().text[0] == '+' ? 1 : -1;
            terms.push_back(parse_term());
            signs.push_back(sign);
        }
        if (terms.size() == 1 && signs[0] == 1) return terms[0];
        auto node = make_node(ExprKind::Sum, {start, terms.back()->span.end});
        node->kids = std::move(terms);
        node->signs = std::move(signs);
        return node;
    }

    ExprPtr parse_term() {
        std::size_t start = lex_.peek().begin;
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (peek_punct('*')) {
            lex_.take();
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return factors[0];
        auto node = make_node(ExprKind::Product, {start, factors.back()->span.end});
        node->kids = std::move(factors);
        return node;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_primary();
        while (peek_punct('^')) {
            lex_.take();
            std::size_t exp_pos = lex_.peek().begin;
            int exp = expect_int("exponent");
            if (exp < 0) throw ParseError("exponent must be non-negative", exp_pos);
            auto node = make_node(ExprKind::Power, {base->span.begin, lex_.peek().begin});
            node->kids.push_back(base);
            node->index = exp;
            base = node;
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token& tok = lex_.peek();
        if (tok.kind == TokKind::Int) {
            Token num = lex_.take();
            Rational value(num.text);
            std::size_t end = num.end;
            if (peek_punct('/')) {
                lex_.take();
                std::size_t den_pos = lex_.peek().begin;
                Token den = lex_.take();
                if (den.kind != TokKind::Int)
                    throw ParseError("expected a denominator", den_pos);
                Rational d(den.text);
                if (d == 0) throw ParseError("zero denominator", den_pos);
                value /= d;
                end = den.end;
            }
            value.canonicalize();
            auto node = make_node(ExprKind::Rational, {num.begin, end});
            node->number = value;
            return node;
        }
        if (tok.kind == TokKind::Punct && tok.text[0] == '(') {
            Token open = lex_.take();
            ExprPtr inner = parse_expr();
            Token close = expect_punct(')', "to close the group");
            auto node = std::make_shared<ExprNode>(*inner);
            node->span = {open.begin, close.end};
            return node;
        }
        if (tok.kind != TokKind::Word)
            throw ParseError("expected a factor", tok.begin);

        Token word = lex_.take();
        const std::string& w = word.text;
        if (w == "i") {
            return make_node(ExprKind::ImagUnit, {word.begin, word.end});
        }
        if (w == "h1" || w == "pi") {
            auto node = make_node(ExprKind::NamedScalar, {word.begin, word.end});
            node->name = w;
            return node;
        }
        if (w == "c" || w == "hc") {
            expect_punct('(', "after '" + w + "'");
            auto node = make_node(w == "c" ? ExprKind::CVec : ExprKind::HcVec,
                                  {word.begin, 0});
            parse_vec(*node);
            Token close = expect_punct(')', "to close the vector argument");
            node->span.end = close.end;
            return node;
        }
        if (w == "tr") {
            expect_punct('[', "after 'tr'");
            ExprPtr inner = parse_expr();
            Token close = expect_punct(']', "to close the trace");
            auto node = make_node(ExprKind::Trace, {word.begin, close.end});
            node->kids.push_back(inner);
            return node;
        }
        // xiINT scalar atoms arrive glued ("xi3"); eINT / WINT only occur
        // inside vector arguments and are handled by parse_vec.
        if (w.size() > 2 && w.compare(0, 2, "xi") == 0 &&
            std::isdigit(static_cast<unsigned char>(w[2]))) {
            auto node = make_node(ExprKind::XiVar, {word.begin, word.end});
            node->index = std::stoi(w.substr(2));
            return node;
        }
        throw ParseError("unknown atom '" + w + "'", word.begin);
    }

    void parse_vec(ExprNode& node) {
        const Token& tok = lex_.peek();
        if (tok.kind != TokKind::Word)
            throw ParseError("expected a vector atom", tok.begin);
        Token word = lex_.take();
        const std::string& w = word.text;
        if (w == "V") { node.vec = VecAtom::V; return; }
        if (w == "xi'") { node.vec = VecAtom::XiPrime; return; }
        if (w == "dxn") { node.vec = VecAtom::Dxn; return; }
        auto indexed = [&](char prefix) -> std::optional<int> {
            if (w.size() < 2 || w[0] != prefix) return std::nullopt;
            for (std::size_t k = 1; k < w.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(w[k]))) return std::nullopt;
            return std::stoi(w.substr(1));
        };
        if (auto k = indexed('e')) { node.vec = VecAtom::Frame; node.index = *k; return; }
        if (auto k = indexed('W')) { node.vec = VecAtom::UserRow; node.index = *k; return; }
        throw ParseError("unknown vector atom '" + w + "'", word.begin);
    }

    Lexer lex_;
};

enum class ExprType { Scalar, Operator };

ExprType check_types(const ExprPtr& ast) {
    switch (ast->kind) {
        case ExprKind::Rational:
        case ExprKind::ImagUnit:
        case ExprKind::NamedScalar:
        case ExprKind::XiVar:
            return ExprType::Scalar;
        case ExprKind::CVec:
        case ExprKind::HcVec:
            return ExprType::Operator;
        case ExprKind::Trace:
            if (check_types(ast->kids[0]) != ExprType::Operator)
                throw ParseError("trace of a scalar expression", ast->span.begin);
            return ExprType::Scalar;
        case ExprKind::Power:
            return check_types(ast->kids[0]);
        case ExprKind::Product: {
            bool op = false;
            for (const auto& k : ast->kids)
                if (check_types(k) == ExprType::Operator) op = true;
            return op ? ExprType::Operator : ExprType::Scalar;
        }
        case ExprKind::Sum: {
            ExprType t = check_types(ast->kids[0]);
            for (std::size_t k = 1; k < ast->kids.size(); ++k)
                if (check_types(ast->kids[k]) != t)
                    throw ParseError("sum mixes scalar and operator terms",
                                     ast->kids[k]->span.begin);
            return t;
        }
    }
    throw ParseError("malformed expression node", ast->span.begin);
}

std::string vec_text(const ExprNode& node) {
    switch (node.vec) {
        case VecAtom::V: return "V";
        case VecAtom::XiPrime: return "xi'";
        case VecAtom::Dxn: return "dxn";
        case VecAtom::Frame: return "e" + std::to_string(node.index);
        case VecAtom::UserRow: return "W" + std::to_string(node.index);
    }
    return "?";
}

std::string unparse_node(const ExprPtr& ast, bool parenthesize_sum) {
    auto wrap = [&](const ExprPtr& child, bool cond) {
        std::string s = unparse_node(child, false);
        return cond ? "(" + s + ")" : s;
    };
    switch (ast->kind) {
        case ExprKind::Rational:
            return rational_str(ast->number);
        case ExprKind::ImagUnit:
            return "i";
        case ExprKind::NamedScalar:
            return ast->name;
        case ExprKind::XiVar:
            return "xi" + std::to_string(ast->index);
        case ExprKind::CVec:
            return "c(" + vec_text(*ast) + ")";
        case ExprKind::HcVec:
            return "hc(" + vec_text(*ast) + ")";
        case ExprKind::Trace:
            return "tr[" + unparse_node(ast->kids[0], false) + "]";
        case ExprKind::Power:
            return wrap(ast->kids[0], ast->kids[0]->kind == ExprKind::Sum ||
                                          ast->kids[0]->kind == ExprKind::Product ||
                                          ast->kids[0]->kind == ExprKind::Power) +
                   "^" + std::to_string(ast->index);
        case ExprKind::Product: {
            std::string out;
            for (std::size_t k = 0; k < ast->kids.size(); ++k) {
                if (k) out += "*";
                out += wrap(ast->kids[k], ast->kids[k]->kind == ExprKind::Sum);
            }
            return out;
        }
        case ExprKind::Sum: {
            std::string out;
            for (std::size_t k = 0; k < ast->kids.size(); ++k) {
                bool nested_sum = ast->kids[k]->kind == ExprKind::Sum;
                std::string piece = wrap(ast->kids[k], nested_sum);
                if (k == 0) {
                    if (ast->signs[0] < 0) out += "-";
                    out += piece;
                } else {
                    out += ast->signs[k] < 0 ? " - " : " + ";
                    out += piece;
                }
            }
            return parenthesize_sum ? "(" + out + ")" : out;
        }
    }
    return "?";
}

bool has_placeholder(const ExprPtr& ast) {
    if ((ast->kind == ExprKind::XiVar || ast->kind == ExprKind::CVec ||
         ast->kind == ExprKind::HcVec) &&
        ast->index == 0 &&
        (ast->kind == ExprKind::XiVar || ast->vec == VecAtom::Frame ||
         ast->vec == VecAtom::UserRow))
        return true;
    for (const auto& k : ast->kids)
        if (has_placeholder(k)) return true;
    return false;
}

ExprPtr substitute_index(const ExprPtr& ast, int k) {
    auto node = std::make_shared<ExprNode>(*ast);
    if ((node->kind == ExprKind::XiVar ||
         ((node->kind == ExprKind::CVec || node->kind == ExprKind::HcVec) &&
          (node->vec == VecAtom::Frame || node->vec == VecAtom::UserRow))) &&
        node->index == 0)
        node->index = k;
    for (auto& child : node->kids) child = substitute_index(child, k);
    return node;
}

VectorExpr resolve_vector(const ExprNode& node, const EvalEnv& env) {
    auto rational_vec = [&](const std::vector<Rational>& v) {
        return VectorExpr::from_rationals(env.reg, v);
    };
    switch (node.vec) {
        case VecAtom::V:
            if (env.bd) return rational_vec(env.bd->V);
            if (env.geo) return rational_vec(env.geo->V);
            throw UnboundSymbolError("vector atom 'V' needs boundary or geometry data");
        case VecAtom::XiPrime:
            return VectorExpr::xi_prime(env.reg, env.n);
        case VecAtom::Dxn:
            return VectorExpr::frame(env.reg, env.n, env.n);
        case VecAtom::Frame:
            if (node.index < 1 || node.index > env.n)
                throw DimensionMismatchError("frame index e" + std::to_string(node.index) +
                                             " out of range for n = " + std::to_string(env.n));
            return VectorExpr::frame(env.reg, env.n, node.index);
        case VecAtom::UserRow: {
            const std::size_t row = static_cast<std::size_t>(node.index) - 1;
            if (env.bd) {
                if (node.index < 1 || row >= env.bd->nablaV.size())
                    throw DimensionMismatchError("W index out of range");
                return rational_vec(env.bd->nablaV[row]);
            }
            if (env.geo) {
                if (node.index < 1 || row >= env.geo->U.size())
                    throw DimensionMismatchError("W index out of range");
                return rational_vec(env.geo->U[row]);
            }
            throw UnboundSymbolError("vector atom 'W' needs boundary or geometry data");
        }
    }
    throw UnboundSymbolError("unresolvable vector atom");
}

ExprValue eval_node(const ExprPtr& ast, const EvalEnv& env) {
    switch (ast->kind) {
        case ExprKind::Rational:
            return Poly::constant(env.reg, GaussianRational(ast->number));
        case ExprKind::ImagUnit:
            return Poly::constant(env.reg, GaussianRational::i());
        case ExprKind::NamedScalar:
            return Poly::symbol(env.reg, env.reg->require(ast->name));
        case ExprKind::XiVar:
            if (ast->index < 1 || ast->index > env.n - 1)
                throw UnboundSymbolError("xi" + std::to_string(ast->index) +
                                         " is not a tangential covariable for n = " +
                                         std::to_string(env.n));
            return Poly::symbol(env.reg, env.reg->xi(ast->index));
        case ExprKind::CVec:
            return clifford_c(resolve_vector(*ast, env), env.reg);
        case ExprKind::HcVec:
            return clifford_hatc(resolve_vector(*ast, env), env.reg);
        case ExprKind::Trace:
            return std::get<CliffordOperator>(eval_node(ast->kids[0], env)).trace();
        case ExprKind::Power: {
            ExprValue base = eval_node(ast->kids[0], env);
            if (std::holds_alternative<Poly>(base)) {
                Poly out = Poly::one(env.reg);
                for (int k = 0; k < ast->index; ++k) out *= std::get<Poly>(base);
                return out;
            }
            CliffordOperator out = CliffordOperator::identity(env.n, env.reg);
            for (int k = 0; k < ast->index; ++k) out = out * std::get<CliffordOperator>(base);
            return out;
        }
        case ExprKind::Product: {
            Poly scalar = Poly::one(env.reg);
            std::optional<CliffordOperator> op;
            for (const auto& child : ast->kids) {
                ExprValue v = eval_node(child, env);
                if (std::holds_alternative<Poly>(v)) {
                    scalar *= std::get<Poly>(v);
                } else if (!op) {
                    op = std::get<CliffordOperator>(v);
                } else {
                    op = *op * std::get<CliffordOperator>(v);
                }
            }
            if (op) return op->scaled(scalar);
            return scalar;
        }
        case ExprKind::Sum: {
            ExprValue first = eval_node(ast->kids[0], env);
            for (std::size_t k = 0; k < ast->kids.size(); ++k) {
                if (k == 0) {
                    if (ast->signs[0] < 0) {
                        if (std::holds_alternative<Poly>(first))
                            first = -std::get<Poly>(first);
                        else
                            first = -std::get<CliffordOperator>(first);
                    }
                    continue;
                }
                ExprValue v = eval_node(ast->kids[k], env);
                if (std::holds_alternative<Poly>(first)) {
                    Poly& acc = std::get<Poly>(first);
                    acc = ast->signs[k] < 0 ? acc - std::get<Poly>(v)
                                            : acc + std::get<Poly>(v);
                } else {
                    CliffordOperator& acc = std::get<CliffordOperator>(first);
                    acc = ast->signs[k] < 0 ? acc - std::get<CliffordOperator>(v)
                                            : acc + std::get<CliffordOperator>(v);
                }
            }
            return first;
        }
    }
    throw UnboundSymbolError("malformed expression node");
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser parser(text);
    ExprPtr ast = parser.parse();
    check_types(ast);
    return ast;
}

std::string unparse(const ExprPtr& ast) { return unparse_node(ast, false); }

bool ast_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Rational:
            if (a->number != b->number) return false;
            break;
        case ExprKind::NamedScalar:
            if (a->name != b->name) return false;
            break;
        case ExprKind::XiVar:
        case ExprKind::Power:
            if (a->index != b->index) return false;
            break;
        case ExprKind::CVec:
        case ExprKind::HcVec:
            if (a->vec != b->vec || a->index != b->index) return false;
            break;
        default:
            break;
    }
    if (a->signs != b->signs) return false;
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t k = 0; k < a->kids.size(); ++k)
        if (!ast_equal(a->kids[k], b->kids[k])) return false;
    return true;
}

ExprPtr expand_sums(const ExprPtr& ast, int bound) {
    if (!has_placeholder(ast)) return ast;
    if (bound < 1) throw InvalidDataError("expansion bound must be at least 1");
    auto node = make_node(ExprKind::Sum, ast->span);
    for (int k = 1; k <= bound; ++k) {
        node->kids.push_back(substitute_index(ast, k));
        node->signs.push_back(1);
    }
    if (node->kids.size() == 1) return node->kids[0];
    return node;
}

ExprValue eval_expr(const ExprPtr& ast, const EvalEnv& env) {
    if (!env.reg) throw UnboundSymbolError("evaluation environment has no registry");
    return eval_node(ast, env);
}

}  // namespace wrescalc
