// Command-line front end: evaluation, the unit table, regularity checks,
// structure reports, and power series. Exit codes are scriptable:
// 0 = success / Regular, 1 = NotRegular, 2 = usage or evaluation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatkit/json_io.hpp"

using namespace quatkit;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = text.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

Scalar parse_scalar(const std::string& text, Mode mode) {
    if (mode == Mode::ExactRational) return Scalar::rational(Rational::from_string(text));
    const auto slash = text.find('/');
    char* end = nullptr;
    if (slash == std::string::npos) {
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0')
            throw InvalidArgumentError("malformed number '" + text + "'");
        return Scalar::float64(v);
    }
    const double num = std::strtod(text.substr(0, slash).c_str(), nullptr);
    const double den = std::strtod(text.c_str() + slash + 1, nullptr);
    if (den == 0.0) throw DivisionByZeroError("zero denominator in '" + text + "'");
    return Scalar::float64(num / den);
}

Quaternion parse_point(const std::string& text, Mode mode) {
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw InvalidArgumentError("point must be four comma-separated components w,x,y,z");
    return {parse_scalar(parts[0], mode), parse_scalar(parts[1], mode),
            parse_scalar(parts[2], mode), parse_scalar(parts[3], mode)};
}

void emit_json(const io::json& j) { std::cout << j.dump(2) << "\n"; }

// ---- eval ------------------------------------------------------------

struct EvalOptions {
    std::string expr;
    std::string at = "0,0,0,0";
    std::string mode = "exact";
    std::string format = "text";
};

int run_eval(const EvalOptions& opt) {
    const Mode mode = opt.mode == "float" ? Mode::Float64 : Mode::ExactRational;
    const expr::ExprPtr ast = expr::parse(opt.expr, mode);
    const Quaternion point = parse_point(opt.at, mode);
    const Quaternion value = expr::eval(ast, point);
    if (opt.format == "json") {
        emit_json(io::json{{"expr", opt.expr},
                           {"mode", mode_name(mode)},
                           {"at", io::quaternion_to_json(point)},
                           {"value", io::quaternion_to_json(value)}});
    } else {
        std::cout << value.to_string() << "\n";
    }
    return 0;
}

// ---- table -----------------------------------------------------------

int run_table(const std::string& format) {
    const UnitTable table = unit_table();
    static const char* names[4] = {"1", "i", "j", "k"};
    if (format == "json") {
        io::json rows = io::json::array();
        for (int a = 0; a < 4; ++a) {
            io::json row = io::json::array();
            for (int b = 0; b < 4; ++b) row.push_back(table[a][b].to_string());
            rows.push_back(std::move(row));
        }
        emit_json(io::json{{"basis", {"1", "i", "j", "k"}}, {"table", std::move(rows)}});
        return 0;
    }
    std::cout << "  * |  1   i   j   k\n";
    std::cout << "----+----------------\n";
    for (int a = 0; a < 4; ++a) {
        std::printf("  %s |", names[a]);
        for (int b = 0; b < 4; ++b) std::printf("%4s", table[a][b].to_string().c_str());
        std::printf("\n");
    }
    return 0;
}

// ---- check -----------------------------------------------------------

struct CheckOptions {
    std::string expr;
    std::string mode = "fueter"; // fueter | slice
    std::string side = "left";
    std::string method = "symbolic";
    double h = 1e-5;
    double tol = 1e-6;
    std::uint64_t seed = 42;
    int samples = 25;
    int slices = 8;
    int points = 10;
    std::string format = "text";
};

int render_regularity(const fueter::RegularityReport& report, const std::string& format) {
    if (format == "json") {
        emit_json(io::regularity_to_json(report));
    } else {
        std::cout << "mode: " << fueter::reg_mode_name(report.mode) << "\n";
        std::cout << "method: " << fueter::method_name(report.method) << "\n";
        std::cout << "verdict: " << fueter::verdict_name(report.verdict) << "\n";
        if (report.symbolic_result)
            std::cout << "symbolic result: " << report.symbolic_result->to_string() << "\n";
        if (!report.residuals.empty()) {
            double max_norm = 0.0;
            for (const auto& sample : report.residuals)
                max_norm = std::max(max_norm, sample.norm);
            std::cout << "residuals: " << report.residuals.size()
                      << " samples, max norm " << Scalar::float64(max_norm).to_string()
                      << " (tolerance " << Scalar::float64(report.tolerance).to_string()
                      << ")\n";
        }
        if (!report.caveat.empty()) std::cout << "note: " << report.caveat << "\n";
    }
    return report.verdict == fueter::RegVerdict::Regular ? 0 : 1;
}

int run_check(const CheckOptions& opt) {
    if (opt.mode == "slice") {
        const expr::ExprPtr ast = expr::parse(opt.expr, Mode::Float64);
        slice::SliceCheckConfig config;
        config.num_slices = opt.slices;
        config.num_points = opt.points;
        config.h = opt.h;
        config.tol = opt.tol;
        config.seed = opt.seed;
        return render_regularity(slice::is_slice_regular(ast, config), opt.format);
    }
    fueter::FueterCheckConfig config;
    config.side = opt.side == "right" ? fueter::Side::Right : fueter::Side::Left;
    config.method =
        opt.method == "numeric" ? fueter::Method::Numeric : fueter::Method::Symbolic;
    config.h = opt.h;
    config.tol = opt.tol;
    config.seed = opt.seed;
    config.samples = opt.samples;
    const Mode parse_mode =
        config.method == fueter::Method::Numeric ? Mode::Float64 : Mode::ExactRational;
    const expr::ExprPtr ast = expr::parse(opt.expr, parse_mode);
    return render_regularity(fueter::is_regular(ast, config), opt.format);
}

// ---- structure -------------------------------------------------------

struct StructureOptions {
    std::string selector;
    std::string table_file;
    int samples = 25;
    std::uint64_t seed = 42;
    std::string format = "text";
};

void render_report_text(const structure::ContradictionReport& report) {
    std::cout << "case " << report.case_label << " -> "
              << structure::verdict_name(report.verdict) << "\n";
    for (const auto& step : report.steps) {
        std::cout << "  " << step.expression;
        if (!step.rewritten.empty()) std::cout << " = " << step.rewritten;
        std::cout << "   [" << step.justification << "]\n";
    }
}

int run_structure(const StructureOptions& opt) {
    const auto render_division = [&](const structure::StructureTable& table,
                                     const std::string& name) {
        const auto result = structure::division_check(table, opt.samples, opt.seed);
        if (opt.format == "json") {
            emit_json(io::division_to_json(result, table, name));
        } else if (result.certified) {
            std::cout << "table " << name << ": Certified -- " << result.trials
                      << " seeded nonzero elements invertible (exact determinants nonzero); "
                         "exhaustive {-1,0,1} scan found no zero divisors\n";
        } else {
            std::cout << "table " << name << ": ZeroDivisorWitness  a = "
                      << structure::render_element(table, result.witness->first)
                      << ", b = " << structure::render_element(table, result.witness->second)
                      << ", a*b = 0\n";
        }
        return 0;
    };

    if (opt.selector == "triplets") {
        const auto reports = structure::triplet_case_analysis();
        if (opt.format == "json") {
            io::json out = io::json::array();
            for (const auto& report : reports) out.push_back(io::report_to_json(report));
            emit_json(out);
        } else {
            std::cout << reports.size() << " cases for the product i*j, every one contradictory:\n";
            for (const auto& report : reports) render_report_text(report);
        }
        return 0;
    }
    if (opt.selector == "general") {
        const auto report = structure::triplet_general_obstruction();
        if (opt.format == "json")
            emit_json(io::report_to_json(report));
        else
            render_report_text(report);
        return 0;
    }
    if (opt.selector == "ji-plus-k") {
        const auto report = structure::ji_equals_k_zero_divisors();
        if (opt.format == "json")
            emit_json(io::report_to_json(report));
        else
            render_report_text(report);
        return 0;
    }
    if (opt.selector == "bicomplex") {
        const auto table = structure::bicomplex_table();
        if (opt.format == "json") {
            emit_json(io::table_to_json(table));
            return 0;
        }
        std::cout << "bicomplex table (commutative, i^2 = j^2 = -1, ij = ji = k):\n";
        for (int a = 0; a < table.dim; ++a) {
            std::cout << " ";
            for (int b = 0; b < table.dim; ++b)
                std::cout << " "
                          << structure::render_element(table,
                                                       structure::multiply(
                                                           table,
                                                           structure::basis_element(table, a),
                                                           structure::basis_element(table, b)));
            std::cout << "\n";
        }
        return render_division(table, "bicomplex");
    }
    if (opt.selector == "certify-quaternions")
        return render_division(structure::quaternion_table(), "quaternion");
    if (opt.selector == "certify") {
        if (opt.table_file.empty())
            throw InvalidArgumentError("certify needs --table <file.json>");
        std::ifstream in(opt.table_file);
        if (!in) throw InvalidArgumentError("cannot open table file '" + opt.table_file + "'");
        io::json j;
        in >> j;
        return render_division(io::table_from_json(j), opt.table_file);
    }
    throw InvalidArgumentError(
        "selector must be one of: triplets, general, ji-plus-k, bicomplex, "
        "certify-quaternions, certify");
}

// ---- series ----------------------------------------------------------

struct SeriesOptions {
    std::string coeffs;
    std::string at = "0,0,0,0";
    int order = -1;
    double tail_tol = 1e-9;
    std::string format = "text";
};

int run_series(const SeriesOptions& opt) {
    std::vector<Quaternion> coefficients;
    for (const std::string& piece : split(opt.coeffs, ';')) {
        const expr::ExprPtr ast = expr::parse(piece, Mode::Float64);
        coefficients.push_back(expr::eval(ast, Quaternion::zero(Mode::Float64)));
    }
    const Quaternion point = parse_point(opt.at, Mode::Float64);
    const unsigned order = opt.order >= 0
                               ? static_cast<unsigned>(opt.order)
                               : static_cast<unsigned>(coefficients.empty()
                                                           ? 0
                                                           : coefficients.size() - 1);
    const auto result = slice::series_eval(coefficients, point, order, opt.tail_tol);
    if (opt.format == "json") {
        emit_json(io::series_to_json(result));
    } else {
        std::cout << "value: " << result.value.to_string() << "\n";
        std::cout << "truncation bound: "
                  << (result.truncation_unbounded
                          ? std::string("unbounded")
                          : Scalar::float64(result.truncation_bound).to_string())
                  << "\n";
        std::cout << "radius estimate: "
                  << Scalar::float64(result.radius_estimate).to_string() << "\n";
        std::cout << "divergence flag: " << (result.divergence_flag ? "yes" : "no") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quat -- exact quaternion arithmetic, Cauchy-Fueter operators, and "
                 "slice-regularity checks"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression at a point");
    eval_cmd->add_option("expr", eval_opt.expr, "expression, e.g. \"q*conj(q)\"")->required();
    eval_cmd->add_option("--at", eval_opt.at, "point w,x,y,z (default 0,0,0,0)");
    eval_cmd->add_option("--mode", eval_opt.mode, "scalar mode (default exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    eval_cmd->add_option("--format", eval_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string table_format = "text";
    CLI::App* table_cmd = app.add_subcommand("table", "print the unit multiplication table");
    table_cmd->add_option("--format", table_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CheckOptions check_opt;
    CLI::App* check_cmd =
        app.add_subcommand("check", "regularity check (exit 0 Regular, 1 NotRegular)");
    check_cmd->set_help_flag("--help", "print help"); // frees -h for the step size
    check_cmd->add_option("expr", check_opt.expr, "expression to check")->required();
    check_cmd->add_option("--mode", check_opt.mode, "fueter or slice (default fueter)")
        ->check(CLI::IsMember({"fueter", "slice"}));
    check_cmd->add_option("--side", check_opt.side, "left or right (default left)")
        ->check(CLI::IsMember({"left", "right"}));
    check_cmd->add_option("--method", check_opt.method, "symbolic or numeric (default symbolic)")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    check_cmd->add_option("--h", check_opt.h, "finite-difference step (default 1e-5)");
    check_cmd->add_option("--tol", check_opt.tol, "residual tolerance (default 1e-6)");
    check_cmd->add_option("--seed", check_opt.seed, "sampling seed (default 42)");
    check_cmd->add_option("--samples", check_opt.samples, "numeric sample count (default 25)");
    check_cmd->add_option("--slices", check_opt.slices, "slice count (default 8)");
    check_cmd->add_option("--points", check_opt.points, "points per slice (default 10)");
    check_cmd->add_option("--format", check_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    StructureOptions structure_opt;
    CLI::App* structure_cmd =
        app.add_subcommand("structure", "triplet obstructions and division checks");
    structure_cmd
        ->add_option("selector", structure_opt.selector,
                     "triplets | general | ji-plus-k | bicomplex | certify-quaternions | certify")
        ->required();
    structure_cmd->add_option("--table", structure_opt.table_file,
                              "table JSON file for the certify selector");
    structure_cmd->add_option("--samples", structure_opt.samples,
                              "random invertibility trials (default 25)");
    structure_cmd->add_option("--seed", structure_opt.seed, "sampling seed (default 42)");
    structure_cmd->add_option("--format", structure_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    SeriesOptions series_opt;
    CLI::App* series_cmd =
        app.add_subcommand("series", "evaluate a truncated power series sum a_n q^n");
    series_cmd
        ->add_option("--coeffs", series_opt.coeffs,
                     "semicolon-separated constant coefficient expressions, e.g. \"1; i; 1/2\"")
        ->required();
    series_cmd->add_option("--at", series_opt.at, "point w,x,y,z (default 0,0,0,0)");
    series_cmd->add_option("--order", series_opt.order,
                           "truncation order N (default: all given coefficients)");
    series_cmd->add_option("--tail-tol", series_opt.tail_tol,
                           "tail tolerance for tail_ok (default 1e-9)");
    series_cmd->add_option("--format", series_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_opt);
        if (table_cmd->parsed()) return run_table(table_format);
        if (check_cmd->parsed()) return run_check(check_opt);
        if (structure_cmd->parsed()) return run_structure(structure_opt);
        if (series_cmd->parsed()) return run_series(series_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
