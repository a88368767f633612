#include "quatkit/fueter.hpp"

#include <algorithm>
#include <cmath>

#include "quatkit/rng.hpp"

namespace quatkit::fueter {

using expr::CanonicalPoly;
using expr::ExprPtr;
using expr::MultiIndex;

EvalFn make_eval_fn(const ExprPtr& e) {
    return [e](const Quaternion& q) { return expr::eval(e, q); };
}

namespace {

CanonicalPoly unit_mul(const CanonicalPoly& p, int unit, Side side) {
    const Quaternion u = Quaternion::unit(unit, p.mode());
    CanonicalPoly out(p.mode());
    for (const auto& [index, coeff] : p.terms())
        out.add_term(index, side == Side::Left ? mul_components(u, coeff)
                                               : mul_components(coeff, u));
    return out;
}

void check_finite(const Quaternion& v, const char* what) {
    for (int t = 0; t < 4; ++t)
        if (!std::isfinite(v.component(t).flt()))
            throw NumericDomainError(std::string(what) + " produced a non-finite value");
}

} // namespace

CanonicalPoly fueter_left_symbolic(const CanonicalPoly& p) {
    CanonicalPoly out = derivative(p, 0);
    for (int t = 1; t < 4; ++t) out = out + unit_mul(derivative(p, t), t, Side::Left);
    return out;
}

CanonicalPoly fueter_right_symbolic(const CanonicalPoly& p) {
    CanonicalPoly out = derivative(p, 0);
    for (int t = 1; t < 4; ++t) out = out + unit_mul(derivative(p, t), t, Side::Right);
    return out;
}

CanonicalPoly fueter_symbolic(const CanonicalPoly& p, Side side) {
    return side == Side::Left ? fueter_left_symbolic(p) : fueter_right_symbolic(p);
}

Quaternion fueter_numeric(const EvalFn& f, Side side, const Quaternion& q, double h) {
    if (q.mode() != Mode::Float64)
        throw ModeMismatchError("fueter_numeric needs a Float64 point");
    if (!(h > 0.0)) throw InvalidArgumentError("step h must be positive");

    const Scalar step = Scalar::float64(h);
    const Scalar half_inv = Scalar::float64(1.0 / (2.0 * h));
    Quaternion acc = Quaternion::zero(Mode::Float64);
    for (int t = 0; t < 4; ++t) {
        const Quaternion offset = scalar_mul(step, Quaternion::unit(t, Mode::Float64));
        const Quaternion plus = f(add(q, offset));
        const Quaternion minus = f(sub(q, offset));
        check_finite(plus, "evaluation");
        check_finite(minus, "evaluation");
        const Quaternion df = scalar_mul(half_inv, sub(plus, minus));
        if (t == 0) {
            acc = add(acc, df);
        } else {
            const Quaternion u = Quaternion::unit(t, Mode::Float64);
            acc = add(acc, side == Side::Left ? mul_components(u, df) : mul_components(df, u));
        }
    }
    return acc;
}

Quaternion fueter_numeric(const ExprPtr& e, Side side, const Quaternion& q, double h) {
    return fueter_numeric(make_eval_fn(e), side, q, h);
}

const char* reg_mode_name(RegMode m) {
    switch (m) {
        case RegMode::FueterLeft: return "fueter-left";
        case RegMode::FueterRight: return "fueter-right";
        case RegMode::SliceRegular: return "slice";
    }
    return "?";
}

const char* method_name(Method m) { return m == Method::Symbolic ? "symbolic" : "numeric"; }

const char* verdict_name(RegVerdict v) {
    return v == RegVerdict::Regular ? "Regular" : "NotRegular";
}

RegularityReport is_regular(const ExprPtr& e, const FueterCheckConfig& config) {
    RegularityReport report;
    report.mode = config.side == Side::Left ? RegMode::FueterLeft : RegMode::FueterRight;
    report.method = config.method;
    report.tolerance = config.tol;

    if (config.method == Method::Symbolic) {
        const CanonicalPoly result = fueter_symbolic(expr::expand(e), config.side);
        report.verdict = result.is_zero() ? RegVerdict::Regular : RegVerdict::NotRegular;
        report.symbolic_result = result;
        return report;
    }

    if (!(config.tol > 0.0)) throw InvalidArgumentError("numeric check needs tol > 0");
    std::vector<Quaternion> points = config.points;
    if (points.empty()) {
        Sampler sampler(config.seed);
        for (int n = 0; n < config.samples; ++n) points.push_back(sampler.ball_point());
    }
    double max_norm = 0.0;
    for (const Quaternion& point : points) {
        const Quaternion residual = fueter_numeric(e, config.side, point, config.h);
        const double n = std::sqrt(norm_squared(residual).flt());
        max_norm = std::max(max_norm, n);
        report.residuals.push_back({point, residual, n, std::nullopt});
    }
    report.verdict = max_norm <= config.tol ? RegVerdict::Regular : RegVerdict::NotRegular;
    report.caveat = "numeric verdict from finitely many sample points; evidence, not proof";
    return report;
}

Quaternion difference_quotient(const EvalFn& f, const Quaternion& q, const Quaternion& dir,
                               double eps, QuotientSide side) {
    if (q.mode() != Mode::Float64 || dir.mode() != Mode::Float64)
        throw ModeMismatchError("difference_quotient needs Float64 values");
    if (dir.is_zero()) throw InvalidArgumentError("direction must be nonzero");
    if (!(eps > 0.0)) throw InvalidArgumentError("eps must be positive");

    const Quaternion h = scalar_mul(Scalar::float64(eps), dir);
    const Quaternion diff = sub(f(add(q, h)), f(q));
    check_finite(diff, "evaluation");
    const Quaternion h_inv = inverse(h);
    return side == QuotientSide::LeftDivide ? mul_components(h_inv, diff)
                                            : mul_components(diff, h_inv);
}

Quaternion difference_quotient(const ExprPtr& e, const Quaternion& q, const Quaternion& dir,
                               double eps, QuotientSide side) {
    return difference_quotient(make_eval_fn(e), q, dir, eps, side);
}

std::string DiffOp::to_string() const {
    return (sign < 0 ? "-d/dq" : "d/dq") + std::to_string(var);
}

PdeMatrix pde_system_matrix(Side side) {
    // Row r, column c: the operator applied to f_c contributing to output
    // component r. The left matrix is the quaternion left-multiplication
    // matrix with p_t -> d/dq_t; the right matrix flips the signs of the
    // off-diagonal 2x2 blocks.
    if (side == Side::Left)
        return {{{{{+1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}},
                 {{{+1, 1}, {+1, 0}, {-1, 3}, {+1, 2}}},
                 {{{+1, 2}, {+1, 3}, {+1, 0}, {-1, 1}}},
                 {{{+1, 3}, {-1, 2}, {+1, 1}, {+1, 0}}}}};
    return {{{{{+1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}},
             {{{+1, 1}, {+1, 0}, {+1, 3}, {-1, 2}}},
             {{{+1, 2}, {-1, 3}, {+1, 0}, {+1, 1}}},
             {{{+1, 3}, {+1, 2}, {-1, 1}, {+1, 0}}}}};
}

std::array<CanonicalPoly, 4> component_polys(const CanonicalPoly& p) {
    std::array<CanonicalPoly, 4> out{CanonicalPoly(p.mode()), CanonicalPoly(p.mode()),
                                     CanonicalPoly(p.mode()), CanonicalPoly(p.mode())};
    for (const auto& [index, coeff] : p.terms())
        for (int t = 0; t < 4; ++t)
            out[t].add_term(index, Quaternion::real(coeff.component(t)));
    return out;
}

CanonicalPoly assemble_components(const std::array<CanonicalPoly, 4>& comps) {
    CanonicalPoly out(comps[0].mode());
    for (int t = 0; t < 4; ++t)
        out = out + unit_mul(comps[t], t, Side::Right);
    return out;
}

std::array<CanonicalPoly, 4> apply_pde_matrix(const PdeMatrix& m,
                                              const std::array<CanonicalPoly, 4>& comps) {
    const Mode mode = comps[0].mode();
    std::array<CanonicalPoly, 4> out{CanonicalPoly(mode), CanonicalPoly(mode),
                                     CanonicalPoly(mode), CanonicalPoly(mode)};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const DiffOp& op = m[r][c];
            CanonicalPoly d = derivative(comps[c], op.var);
            out[r] = out[r] + (op.sign < 0 ? -d : d);
        }
    }
    return out;
}

} // namespace quatkit::fueter
