#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "wrescalc/data_io.hpp"
#include "wrescalc/expr.hpp"
#include "wrescalc/report.hpp"

#include <array>
#include <string>

using namespace wrescalc;

using wrescalc_test::kExprCorpus;

TEST_CASE("parse/unparse round trip on the 50-expression corpus") {
    for (const char* text : kExprCorpus) {
        ExprPtr ast = parse_expr(text);
        std::string printed = unparse(ast);
        ExprPtr reparsed = parse_expr(printed);
        CHECK_MESSAGE(ast_equal(ast, reparsed), text);
        // Unparsing is a fixed point after one round.
        CHECK(unparse(reparsed) == printed);
    }
}

TEST_CASE("syntax and type errors carry offsets") {
    CHECK_THROWS_AS(parse_expr("tr["), ParseError);
    try {
        parse_expr("tr[");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(parse_expr("tr[h1]"), ParseError);       // trace of a scalar
    CHECK_THROWS_AS(parse_expr("c(V) + h1"), ParseError);    // mixed sum
    CHECK_THROWS_AS(parse_expr("c(Q)"), ParseError);         // unknown vector atom
    CHECK_THROWS_AS(parse_expr("1 + + 2"), ParseError);
    CHECK_THROWS_AS(parse_expr("h1 h1"), ParseError);        // trailing input
}

TEST_CASE("evaluation goldens") {
    BoundaryData bd = random_boundary_data(1, 4);
    EvalEnv env{4, SymbolRegistry::standard(4), &bd, nullptr};

    auto scalar = [&](const char* text) {
        return std::get<Poly>(eval_expr(parse_expr(text), env));
    };

    // tr[hc(V) c(dxn) hc(V) c(dxn)] = 8 in dimension 3.
    BoundaryData bd3 = random_boundary_data(1, 3);
    EvalEnv env3{3, SymbolRegistry::standard(3), &bd3, nullptr};
    Poly t = std::get<Poly>(eval_expr(parse_expr("tr[hc(V)*c(dxn)*hc(V)*c(dxn)]"), env3));
    CHECK(t == Poly::constant(env3.reg, GaussianRational(Rational(8))));

    // c(e1)^2 = -id.
    CliffordOperator sq = std::get<CliffordOperator>(eval_expr(parse_expr("c(e1)^2"), env));
    CHECK(sq == -CliffordOperator::identity(4, env.reg));

    // Symbolic tangential covariables survive: tr[hc(V)c(xi')hc(V)c(xi')].
    Poly expect = Poly::zero(env.reg);
    for (int k = 1; k <= 3; ++k) expect += Poly::symbol(env.reg, env.reg->xi(k), 2);
    CHECK(scalar("tr[hc(V)*c(xi')*hc(V)*c(xi')]") ==
          expect.scaled(GaussianRational(Rational(16))));

    // Scalars and the imaginary unit.
    CHECK(scalar("(1 - i)*(1 + i)") ==
          Poly::constant(env.reg, GaussianRational(Rational(2))));

    // Anticommutation through the evaluator.
    CliffordOperator anti = std::get<CliffordOperator>(
        eval_expr(parse_expr("c(e1)*hc(e2) + hc(e2)*c(e1)"), env));
    CHECK(anti.is_zero());

    // Unbound and out-of-range atoms.
    EvalEnv bare{4, SymbolRegistry::standard(4), nullptr, nullptr};
    CHECK_THROWS_AS(eval_expr(parse_expr("c(V)"), bare), UnboundSymbolError);
    CHECK_THROWS_AS(eval_expr(parse_expr("c(e7)"), env), DimensionMismatchError);
    CHECK_THROWS_AS(eval_expr(parse_expr("xi9"), env), UnboundSymbolError);
}

TEST_CASE("expand_sums macro-expands the index-0 placeholder") {
    ExprPtr expanded = expand_sums(parse_expr("tr[c(e0)*c(e0)]"), 4);
    CHECK(unparse(expanded) ==
          "tr[c(e1)*c(e1)] + tr[c(e2)*c(e2)] + tr[c(e3)*c(e3)] + tr[c(e4)*c(e4)]");

    EvalEnv env{4, SymbolRegistry::standard(4), nullptr, nullptr};
    // Each tr[c(e_k)^2] = -16, so the sum is -64.
    CHECK(std::get<Poly>(eval_expr(expanded, env)) ==
          Poly::constant(env.reg, GaussianRational(Rational(-64))));

    // Expressions without the placeholder pass through unchanged.
    ExprPtr plain = parse_expr("h1 + pi");
    CHECK(expand_sums(plain, 4) == plain);
}

TEST_CASE("data documents round trip") {
    BoundaryData bd = random_boundary_data(5, 4);
    DataDocument doc = parse_data_document(write_boundary_data(bd));
    REQUIRE(doc.boundary.has_value());
    CHECK(doc.boundary->V == bd.V);
    CHECK(doc.boundary->dV == bd.dV);
    CHECK(doc.boundary->dnV == bd.dnV);
    CHECK(doc.boundary->nablaV == bd.nablaV);

    GeometryData g = gen_geometry(5, 4);
    DataDocument gdoc = parse_data_document(write_geometry_data(g));
    REQUIRE(gdoc.geometry.has_value());
    CHECK(gdoc.geometry->V == g.V);
    CHECK(gdoc.geometry->U == g.U);
    CHECK(gdoc.geometry->S == g.S);
    CHECK(gdoc.geometry->R == g.R);

    CHECK_THROWS_AS(parse_data_document("type = boundary\n"), InvalidDataError);
    CHECK_THROWS_AS(parse_data_document("type = boundary\nn = 4\nV = junk\n"
                                        "dV = 0\ndnV = 0\nnablaV = 0\n"),
                    InvalidDataError);
}

TEST_CASE("report rendering is deterministic and tracks match states") {
    Report r;
    r.target = "demo";
    r.mode = "paper";
    r.seed = 42;
    r.items.push_back({"a", "0", "0", std::string("0"), MatchState::Exact, std::nullopt});
    r.items.push_back({"b", "1", "1", std::nullopt, MatchState::NoTarget,
                       std::string("informational")});
    CHECK(r.overall_exact());
    for (ReportFormat f : {ReportFormat::Text, ReportFormat::Json, ReportFormat::Latex})
        CHECK(r.render(f) == r.render(f));

    r.items.push_back({"c", "1", "1", std::string("2"), MatchState::Mismatch, std::nullopt});
    CHECK_FALSE(r.overall_exact());
    CHECK(r.render(ReportFormat::Json).find("\"status\": \"mismatch\"") != std::string::npos);
}
