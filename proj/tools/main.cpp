// Command-line driver: golden-value verification, expression evaluation,
// and data generation.
//
// Exit codes: 0 all comparisons exact, 1 some comparison mismatched,
// 2 usage or data error.
#include "wrescalc/data_io.hpp"
#include "wrescalc/expr.hpp"
#include "wrescalc/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace wrescalc;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidDataError("cannot open data file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string poly_text(const Poly& p) { return p.str(); }

struct CommonFlags {
    int dim = 4;
    std::string data_path;
};

std::optional<std::string> load_data(const CommonFlags& flags) {
    if (flags.data_path.empty()) return std::nullopt;
    return read_file(flags.data_path);
}

int cmd_verify(const std::string& target, const std::string& mode_name, int dim,
               const std::string& data_path, std::uint64_t seed,
               const std::string& format_name, bool strict_total,
               const std::string& out_path) {
    VerifyOptions opts;
    opts.target = target;
    opts.mode = mode_name == "literal" ? SphereMode::Literal : SphereMode::PaperEmulation;
    opts.dim = dim;
    opts.seed = seed;
    if (!data_path.empty()) opts.data_text = read_file(data_path);
    opts.strict = strict_total ? Strictness::Total : Strictness::Parts;

    VerifyResult result = run_verify(opts);
    ReportFormat format = ReportFormat::Text;
    if (format_name == "json") format = ReportFormat::Json;
    else if (format_name == "latex") format = ReportFormat::Latex;

    std::string rendered = result.report.render(format);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidDataError("cannot write report file '" + out_path + "'");
        out << rendered;
    }
    return result.exit_code;
}

int cmd_trace_eval(const std::string& text, const CommonFlags& flags, int expand) {
    ExprPtr ast = parse_expr(text);
    if (expand > 0) ast = expand_sums(ast, expand);

    EvalEnv env;
    env.n = flags.dim;
    env.reg = SymbolRegistry::standard(flags.dim);
    DataDocument doc;
    BoundaryData default_bd;
    if (flags.data_path.empty()) {
        // Deterministic default data so V/W atoms are always resolvable.
        default_bd = random_boundary_data(1, flags.dim);
        env.bd = &default_bd;
    }
    if (auto data = load_data(flags)) {
        doc = parse_data_document(*data);
        if (doc.boundary) {
            env.bd = &*doc.boundary;
            env.n = doc.boundary->n;
        } else if (doc.geometry) {
            env.geo = &*doc.geometry;
            env.n = doc.geometry->n;
        }
        env.reg = SymbolRegistry::standard(env.n);
    }

    ExprValue value = eval_expr(ast, env);
    if (std::holds_alternative<Poly>(value)) {
        std::cout << poly_text(std::get<Poly>(value)) << "\n";
    } else {
        const CliffordOperator& op = std::get<CliffordOperator>(value);
        if (op.is_zero()) {
            std::cout << "operator: 0\n";
        } else {
            std::cout << "operator on 2^" << op.dim() << " dimensions; "
                      << op.entries().size() << " nonzero entries; trace = "
                      << poly_text(op.trace()) << "\n";
        }
    }
    return 0;
}

int cmd_gen_data(std::uint64_t seed, int dim, const std::string& kind) {
    if (kind == "geometry")
        std::cout << write_geometry_data(gen_geometry(seed, dim));
    else
        std::cout << write_boundary_data(random_boundary_data(seed, dim));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for Clifford trace identities, "
                 "boundary symbol integrals, and residue coefficients"};
    app.require_subcommand(1);

    // verify
    std::string target, mode_name = "paper", format_name = "text";
    std::string data_path, out_path;
    int dim = 4;
    std::uint64_t seed = 1;
    bool strict_parts = false, strict_total = false;
    auto* verify = app.add_subcommand("verify", "Run a verification target");
    verify->add_option("target", target,
                       "thm11|thm12|thm13|lichnerowicz|phi:<case>:<pair>|inverse|all")
        ->required();
    verify->add_option("--mode", mode_name, "Sphere integration mode")
        ->check(CLI::IsMember({"paper", "literal"}));
    verify->add_option("--dim", dim, "Dimension")->check(CLI::Range(3, 6));
    verify->add_option("--data", data_path, "Data document file");
    verify->add_option("--seed", seed, "Seed for generated data");
    verify->add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    verify->add_option("--output", out_path, "Write the report to a file");
    verify->add_flag("--strict-parts", strict_parts,
                     "Judge per-case reference values (default)");
    verify->add_flag("--strict-total", strict_total,
                     "Judge the reference grand total instead");

    // trace-eval
    std::string expr_text;
    CommonFlags eval_flags;
    int expand = 0;
    auto* trace_eval = app.add_subcommand("trace-eval", "Evaluate a DSL expression");
    trace_eval->add_option("expr", expr_text, "Expression text")->required();
    trace_eval->add_option("--dim", eval_flags.dim, "Dimension")->check(CLI::Range(3, 8));
    trace_eval->add_option("--data", eval_flags.data_path, "Data document file");
    trace_eval->add_option("--expand", expand,
                           "Expand index-0 placeholder atoms as a sum over 1..n");

    // gen-data
    std::uint64_t gen_seed = 1;
    int gen_dim = 4;
    std::string gen_kind = "boundary";
    auto* gen = app.add_subcommand("gen-data", "Emit a valid data document");
    gen->add_option("--seed", gen_seed, "Seed")->required();
    gen->add_option("--dim", gen_dim, "Dimension")->required()->check(CLI::Range(3, 6));
    gen->add_option("--kind", gen_kind, "boundary or geometry")
        ->check(CLI::IsMember({"boundary", "geometry"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (strict_parts && strict_total) {
                std::cerr << "error: --strict-parts and --strict-total are exclusive\n";
                return 2;
            }
            return cmd_verify(target, mode_name, dim, data_path, seed, format_name,
                              strict_total, out_path);
        }
        if (trace_eval->parsed()) return cmd_trace_eval(expr_text, eval_flags, expand);
        if (gen->parsed()) return cmd_gen_data(gen_seed, gen_dim, gen_kind);
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
