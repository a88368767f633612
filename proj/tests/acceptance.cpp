// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: acceptance <path-to-quat-cli>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "quatkit/fueter.hpp"
#include "quatkit/json_io.hpp"
#include "quatkit/rng.hpp"
#include "quatkit/slice.hpp"
#include "quatkit/structure.hpp"

using namespace quatkit;
using quatkit::expr::CanonicalPoly;
using quatkit::expr::ExprPtr;
using quatkit::expr::expand;
using quatkit::expr::parse;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::printf("[PASS] criterion %2d: %s\n", number, name.c_str());
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s -- %s\n", number, name.c_str(), e.what());
    }
}

void require(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error(what);
}

Quaternion rq(long w, long x, long y, long z) {
    return {Scalar::rational(w), Scalar::rational(x), Scalar::rational(y), Scalar::rational(z)};
}

Quaternion fq(double w, double x, double y, double z) {
    return {Scalar::float64(w), Scalar::float64(x), Scalar::float64(y), Scalar::float64(z)};
}

double qnorm(const Quaternion& v) { return std::sqrt(norm_squared(v).flt()); }

// Seeded polynomial expression with degree <= 4 and coefficient norms <= 1.
ExprPtr random_poly_expr(Sampler& s) {
    using namespace quatkit::expr;
    const long terms = s.uniform_int(1, 3);
    ExprPtr out;
    for (long t = 0; t < terms; ++t) {
        std::vector<ExprPtr> factors;
        factors.push_back(make_const(s.ball_point()));
        const unsigned left_deg = static_cast<unsigned>(s.uniform_int(0, 2));
        const unsigned right_deg = static_cast<unsigned>(s.uniform_int(0, 2));
        if (left_deg > 0) factors.push_back(make_pow(make_var(), left_deg));
        factors.push_back(make_const(s.ball_point()));
        if (right_deg > 0) factors.push_back(make_pow(make_var(), right_deg));
        ExprPtr term = make_prod(std::move(factors));
        out = out ? make_sum(out, term) : term;
    }
    return out;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("failed to launch: " + command);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void check_regularity_schema(const nlohmann::json& j, bool slice_mode) {
    require(j.is_object(), "report JSON is not an object");
    for (const char* key : {"mode", "method", "verdict", "residuals"})
        require(j.contains(key), std::string("report JSON misses '") + key + "'");
    const std::string mode = j.at("mode").get<std::string>();
    require(mode == "fueter-left" || mode == "fueter-right" || mode == "slice",
            "bad mode value " + mode);
    const std::string method = j.at("method").get<std::string>();
    require(method == "symbolic" || method == "numeric", "bad method value");
    const std::string verdict = j.at("verdict").get<std::string>();
    require(verdict == "Regular" || verdict == "NotRegular", "bad verdict value");
    require(j.contains("symbolic_result"), "report JSON misses symbolic_result");
    require(j.at("symbolic_result").is_string() || j.at("symbolic_result").is_null(),
            "symbolic_result must be a string or null");
    require(j.at("residuals").is_array(), "residuals must be an array");
    for (const auto& entry : j.at("residuals")) {
        require(entry.contains("point") && entry.contains("norm"),
                "residual entry misses point/norm");
        require(entry.at("norm").is_number(), "residual norm must be a number");
        for (const char* c : {"w", "x", "y", "z"})
            require(entry.at("point").contains(c), "point misses a component");
        if (slice_mode) {
            require(entry.contains("slice"), "slice residual misses the slice field");
            for (const char* c : {"x1", "x2", "x3"})
                require(entry.at("slice").contains(c), "slice field misses a component");
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "unit table matches i^2=j^2=k^2=ijk=-1 with ji=-k, exactly", [] {
        const UnitTable t = unit_table();
        const SignedUnit expected[4][4] = {
            {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
            {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
            {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
            {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
        };
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                require(t[a][b] == expected[a][b],
                        "table entry (" + std::to_string(a) + "," + std::to_string(b) +
                            ") is wrong");
        const Mode m = Mode::ExactRational;
        require(mul_components(Quaternion::unit(1, m), Quaternion::unit(2, m)) ==
                    Quaternion::unit(3, m),
                "ij != k");
        require(mul_components(Quaternion::unit(2, m), Quaternion::unit(1, m)) ==
                    negate(Quaternion::unit(3, m)),
                "ji != -k");
        require(mul_components(mul_components(Quaternion::unit(1, m), Quaternion::unit(2, m)),
                               Quaternion::unit(3, m)) == negate(Quaternion::one(m)),
                "ijk != -1");
    });

    criterion(2, "three product forms agree bitwise on 1000 seeded rational pairs", [] {
        Sampler s(42);
        for (int n = 0; n < 1000; ++n) {
            const Quaternion p = s.rational_quaternion();
            const Quaternion q = s.rational_quaternion();
            const Quaternion a = mul_components(p, q);
            require(a == mul_matrix(p, q), "mul_matrix differs");
            require(a == mul_vector_form(p, q), "mul_vector_form differs");
        }
    });

    criterion(3, "field axioms: exact on 1000 rational samples; <=1e-12 relative in Float64", [] {
        Sampler s(43);
        for (int n = 0; n < 1000; ++n) {
            const Quaternion p = s.rational_quaternion();
            const Quaternion q = s.rational_quaternion();
            const Quaternion r = s.rational_quaternion();
            require(mul_components(mul_components(p, q), r) ==
                        mul_components(p, mul_components(q, r)),
                    "associativity failed");
            require(mul_components(p, add(q, r)) ==
                        add(mul_components(p, q), mul_components(p, r)),
                    "distributivity failed");
            require(norm_squared(mul_components(p, q)) == norm_squared(p) * norm_squared(q),
                    "norm multiplicativity failed");
            if (!q.is_zero())
                require(mul_components(q, inverse(q)) == Quaternion::one(Mode::ExactRational),
                        "q*q^-1 != 1");
        }
        Sampler sf(44);
        const auto rel_ok = [](const Quaternion& a, const Quaternion& b) {
            const double scale = std::max({1.0, qnorm(a), qnorm(b)});
            return qnorm(sub(a, b)) <= 1e-12 * scale;
        };
        for (int n = 0; n < 1000; ++n) {
            const Quaternion p = sf.float_quaternion();
            const Quaternion q = sf.float_quaternion();
            const Quaternion r = sf.float_quaternion();
            require(rel_ok(mul_components(mul_components(p, q), r),
                           mul_components(p, mul_components(q, r))),
                    "float associativity beyond 1e-12");
            require(rel_ok(mul_components(p, add(q, r)),
                           add(mul_components(p, q), mul_components(p, r))),
                    "float distributivity beyond 1e-12");
            const double lhs = norm_squared(mul_components(p, q)).flt();
            const double rhs = norm_squared(p).flt() * norm_squared(q).flt();
            require(std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, lhs, rhs}),
                    "float norm multiplicativity beyond 1e-12");
            if (!p.is_zero())
                require(rel_ok(mul_components(p, inverse(p)), Quaternion::one(Mode::Float64)),
                        "float q*q^-1 beyond 1e-12");
        }
    });

    criterion(4, "triplet analysis: 7 validated contradictions; gamma^2=-1; (1+k)(1-k)=0", [] {
        using namespace quatkit::structure;
        const auto reports = triplet_case_analysis();
        require(reports.size() == 7, "expected exactly 7 cases");
        for (const auto& report : reports) {
            require(report.verdict != StructVerdict::Consistent, "a case came out Consistent");
            require(replay(report), "derivation replay failed for " + report.case_label);
        }
        const auto general = triplet_general_obstruction();
        require(general.verdict == StructVerdict::NoRealSolution, "wrong obstruction verdict");
        require(replay(general), "obstruction replay failed");
        const SymPoly gamma = SymPoly::variable(2);
        require(general.obstruction->equations.back() ==
                    gamma * gamma + SymPoly::constant(Rational(1)),
                "final equation is not gamma^2 + 1 = 0");
        bool shows_forced = false;
        for (const auto& step : general.steps)
            if (step.expression == "gamma^2" && step.rewritten == "-1") shows_forced = true;
        require(shows_forced, "derivation does not surface gamma^2 = -1");

        const auto jik = ji_equals_k_zero_divisors();
        require(jik.verdict == StructVerdict::ZeroDivisor, "wrong ji=+k verdict");
        require(replay(jik), "ji=+k replay failed");
        const auto& payload = *jik.zero_divisor;
        require(equal(multiply(payload.table, payload.witness_a, payload.witness_b),
                      zero_element(payload.table)),
                "(1+k)(1-k) != 0");
        require(render_element(payload.table, payload.witness_a) == "1+k" &&
                    render_element(payload.table, payload.witness_b) == "1-k",
                "witness pair is not (1+k, 1-k)");
    });

    criterion(5, "Fueter image of q is exactly -2 on both sides; constants map to 0", [] {
        const CanonicalPoly q = expand(parse("q"));
        require(fueter::fueter_right_symbolic(q) == CanonicalPoly::constant(rq(-2, 0, 0, 0)),
                "right operator on q is not -2");
        require(fueter::fueter_left_symbolic(q) == CanonicalPoly::constant(rq(-2, 0, 0, 0)),
                "left operator on q is not -2");
        require(fueter::fueter_left_symbolic(expand(parse("3 - i + 2*k"))).is_zero(),
                "constant is not left-regular");
        require(fueter::fueter_right_symbolic(expand(parse("j"))).is_zero(),
                "constant is not right-regular");
    });

    criterion(6, "the Fueter variables q_t - u_t*q0 are symbolically left-regular", [] {
        for (const char* text : {"q1 - i*q0", "q2 - j*q0", "q3 - k*q0"})
            require(fueter::fueter_left_symbolic(expand(parse(text))).is_zero(),
                    std::string(text) + " is not left-regular");
    });

    criterion(7, "numeric Fueter (h=1e-5) matches symbolic within 1e-6 on 50 expressions", [] {
        Sampler s(2024);
        for (int n = 0; n < 50; ++n) {
            const ExprPtr e = random_poly_expr(s);
            const CanonicalPoly p = expand(e, Mode::Float64);
            for (int pt = 0; pt < 10; ++pt) {
                const Quaternion q = s.ball_point();
                for (fueter::Side side : {fueter::Side::Left, fueter::Side::Right}) {
                    const Quaternion numeric = fueter::fueter_numeric(e, side, q, 1e-5);
                    const Quaternion symbolic =
                        expr::eval_poly(fueter::fueter_symbolic(p, side), q);
                    require(qnorm(sub(numeric, symbolic)) <= 1e-6,
                            "numeric/symbolic disagreement beyond 1e-6");
                }
            }
        }
    });

    criterion(8, "slice contrast: q slice-regular yet Fueter-irregular; a*q^n pass; conj fails", [] {
        slice::SliceCheckConfig config; // 8 slices x 10 points, tol 1e-6
        const auto id_report = slice::is_slice_regular(parse("q", Mode::Float64), config);
        require(id_report.verdict == fueter::RegVerdict::Regular, "q is not slice-regular");
        fueter::FueterCheckConfig fcfg;
        fcfg.side = fueter::Side::Right;
        require(fueter::is_regular(parse("q"), fcfg).verdict == fueter::RegVerdict::NotRegular,
                "q unexpectedly Fueter-regular (right)");
        fcfg.side = fueter::Side::Left;
        require(fueter::is_regular(parse("q"), fcfg).verdict == fueter::RegVerdict::NotRegular,
                "q unexpectedly Fueter-regular (left)");

        Sampler s(4242);
        for (int n = 0; n <= 5; ++n) {
            Quaternion a = s.ball_point();
            while (qnorm(a) < 0.05) a = s.ball_point();
            const ExprPtr monomial = expr::make_prod(
                {expr::make_const(a), expr::make_pow(expr::make_var(), n)});
            require(slice::is_slice_regular(monomial, config).verdict ==
                        fueter::RegVerdict::Regular,
                    "a*q^" + std::to_string(n) + " failed the slice check");
        }

        const auto conj_report = slice::is_slice_regular(parse("conj(q)", Mode::Float64), config);
        require(conj_report.verdict == fueter::RegVerdict::NotRegular,
                "conj(q) unexpectedly slice-regular");
        for (const auto& sample : conj_report.residuals)
            require(sample.norm >= 1.9, "conj residual below 1.9 somewhere");
    });

    criterion(9, "difference quotients: q^2 direction-dependent, a+q*b independent", [] {
        const ExprPtr sq = parse("q^2", Mode::Float64);
        const Quaternion at_j = fq(0, 0, 1, 0);
        const Quaternion along_1 = fueter::difference_quotient(sq, at_j, fq(1, 0, 0, 0), 1e-6);
        const Quaternion along_i = fueter::difference_quotient(sq, at_j, fq(0, 1, 0, 0), 1e-6);
        require(std::abs(qnorm(along_1) - qnorm(along_i)) >= 1.9,
                "q^2 quotients do not separate by 1.9");

        const ExprPtr linear = parse("a + q*b where a=i, b=k", Mode::Float64);
        Sampler s(99);
        std::vector<Quaternion> quotients;
        for (int n = 0; n < 20; ++n) {
            Quaternion dir = s.ball_point();
            while (qnorm(dir) < 0.1) dir = s.ball_point();
            quotients.push_back(
                fueter::difference_quotient(linear, fq(0.2, -0.4, 0.1, 0.3), dir, 1e-6));
        }
        double max_pairwise = 0.0;
        for (const auto& a : quotients)
            for (const auto& b : quotients)
                max_pairwise = std::max(max_pairwise, qnorm(sub(a, b)));
        require(max_pairwise <= 1e-6, "linear quotient varies with direction");
    });

    criterion(10, "division: quaternions certify with det=|q|^4; ji=+k and bicomplex witness", [] {
        using namespace quatkit::structure;
        const StructureTable h = quaternion_table();
        const auto certified = division_check(h, 100, 42);
        require(certified.certified, "quaternion table failed certification");
        Sampler s(7);
        for (int n = 0; n < 100; ++n) {
            const Quaternion q = s.nonzero_rational_quaternion();
            const Element e = {q.w(), q.x(), q.y(), q.z()};
            const Scalar n2 = norm_squared(q);
            require(det(left_mul_matrix(h, e)) == n2 * n2, "det(M(q)) != |q|^4");
        }
        for (const StructureTable& bad : {ji_plus_k_table(), bicomplex_table()}) {
            const auto res = division_check(bad, 100, 42);
            require(!res.certified && res.witness.has_value(), "bad table certified");
            require(render_element(bad, res.witness->first) == "1+k" &&
                        render_element(bad, res.witness->second) == "1-k",
                    "witness pair is not (1+k),(1-k)");
        }
    });

    criterion(11, "CLI contract: exit codes, reported -2, schema-valid byte-stable JSON", [&] {
        require(!cli.empty(), "CLI path was not passed as argv[1]");

        const auto right_check =
            run_command(cli + " check q --mode fueter --side right --method symbolic");
        require(right_check.exit_code == 1, "fueter check on q must exit 1");
        require(right_check.out.find("-2") != std::string::npos,
                "fueter check on q must report -2");
        require(right_check.out.find("NotRegular") != std::string::npos,
                "fueter check on q must report NotRegular");

        const auto slice_check = run_command(cli + " check q --mode slice");
        require(slice_check.exit_code == 0, "slice check on q must exit 0");

        const std::string json_cmd =
            cli + " check q --mode slice --seed 42 --format json";
        const auto json_a = run_command(json_cmd);
        const auto json_b = run_command(json_cmd);
        require(json_a.exit_code == 0, "slice JSON check must exit 0");
        require(json_a.out == json_b.out, "JSON output is not byte-identical across runs");
        check_regularity_schema(nlohmann::json::parse(json_a.out), true);

        const auto fueter_json = run_command(
            cli + " check q --mode fueter --side right --method symbolic --format json");
        require(fueter_json.exit_code == 1, "fueter JSON check on q must exit 1");
        const auto fj = nlohmann::json::parse(fueter_json.out);
        check_regularity_schema(fj, false);
        require(fj.at("verdict") == "NotRegular", "JSON and text verdicts disagree");
        require(fj.at("symbolic_result") == "-2", "JSON symbolic_result must be -2");

        const auto numeric_json_a = run_command(
            cli + " check q^2 --mode fueter --method numeric --seed 42 --format json");
        const auto numeric_json_b = run_command(
            cli + " check q^2 --mode fueter --method numeric --seed 42 --format json");
        require(numeric_json_a.out == numeric_json_b.out,
                "numeric JSON not byte-identical at fixed seed");
        check_regularity_schema(nlohmann::json::parse(numeric_json_a.out), false);

        const auto bad = run_command(cli + " eval 'q +' 2>/dev/null");
        require(bad.exit_code == 2, "parse errors must exit 2");
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
