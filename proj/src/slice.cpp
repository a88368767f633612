#include "quatkit/slice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quatkit/rng.hpp"

namespace quatkit::slice {

using fueter::EvalFn;
using fueter::RegularityReport;

UnitImaginary::UnitImaginary(Scalar x1, Scalar x2, Scalar x3)
    : x1_(std::move(x1)), x2_(std::move(x2)), x3_(std::move(x3)) {
    if (x2_.mode() != x1_.mode() || x3_.mode() != x1_.mode())
        throw ModeMismatchError("unit imaginary components must share one mode");
    const Scalar n2 = x1_ * x1_ + x2_ * x2_ + x3_ * x3_;
    if (x1_.is_exact()) {
        if (n2 != Scalar::rational(1))
            throw InvalidArgumentError("exact unit imaginary must satisfy x1^2+x2^2+x3^2 = 1");
    } else if (std::abs(n2.flt() - 1.0) > 1e-12) {
        throw InvalidArgumentError("unit imaginary is not normalized within 1e-12");
    }
}

UnitImaginary UnitImaginary::axis(int unit, Mode mode) {
    if (unit < 1 || unit > 3) throw InvalidArgumentError("axis unit must be 1, 2 or 3");
    const Scalar z = Scalar::zero(mode), o = Scalar::one(mode);
    switch (unit) {
        case 1: return {o, z, z};
        case 2: return {z, o, z};
        default: return {z, z, o};
    }
}

Quaternion UnitImaginary::as_quaternion() const {
    return {Scalar::zero(mode()), x1_, x2_, x3_};
}

Quaternion embed(const UnitImaginary& I, const SlicePoint& p) {
    // x + y*I
    return add(Quaternion::real(p.x), scalar_mul(p.y, I.as_quaternion()));
}

namespace {

void check_finite(const Quaternion& v) {
    for (int t = 0; t < 4; ++t)
        if (!std::isfinite(v.component(t).flt()))
            throw NumericDomainError("slice evaluation produced a non-finite value");
}

} // namespace

Quaternion slice_cr_residual(const EvalFn& f, const UnitImaginary& I, const SlicePoint& p,
                             double h) {
    if (I.mode() != Mode::Float64 || p.x.mode() != Mode::Float64)
        throw ModeMismatchError("slice_cr_residual needs Float64 values");
    if (!(h > 0.0)) throw InvalidArgumentError("step h must be positive");

    const Scalar step = Scalar::float64(h);
    const Scalar half_inv = Scalar::float64(1.0 / (2.0 * h));

    const Quaternion fx_plus = f(embed(I, {p.x + step, p.y}));
    const Quaternion fx_minus = f(embed(I, {p.x - step, p.y}));
    const Quaternion fy_plus = f(embed(I, {p.x, p.y + step}));
    const Quaternion fy_minus = f(embed(I, {p.x, p.y - step}));
    check_finite(fx_plus);
    check_finite(fx_minus);
    check_finite(fy_plus);
    check_finite(fy_minus);

    const Quaternion dx = scalar_mul(half_inv, sub(fx_plus, fx_minus));
    const Quaternion dy = scalar_mul(half_inv, sub(fy_plus, fy_minus));
    return add(dx, mul_components(dy, I.as_quaternion()));
}

Quaternion slice_cr_residual(const expr::ExprPtr& e, const UnitImaginary& I,
                             const SlicePoint& p, double h) {
    return slice_cr_residual(fueter::make_eval_fn(e), I, p, h);
}

namespace {

UnitImaginary sample_unit_imaginary(Sampler& sampler) {
    for (;;) {
        const double a = sampler.gaussian();
        const double b = sampler.gaussian();
        const double c = sampler.gaussian();
        const double n = std::sqrt(a * a + b * b + c * c);
        if (n < 1e-3) continue; // degenerate draw, resample
        return {Scalar::float64(a / n), Scalar::float64(b / n), Scalar::float64(c / n)};
    }
}

SlicePoint sample_slice_point(Sampler& sampler) {
    // y stays positive: the real axis belongs to every slice at once.
    return {Scalar::float64(sampler.uniform(-0.6, 0.6)),
            Scalar::float64(sampler.uniform(0.1, 0.66))};
}

} // namespace

RegularityReport is_slice_regular(const expr::ExprPtr& e, const SliceCheckConfig& config) {
    if (config.num_slices < 1 || config.num_points < 1)
        throw InvalidArgumentError("slice check needs positive sample counts");
    if (!(config.h > 0.0) || !(config.tol > 0.0))
        throw InvalidArgumentError("slice check needs positive h and tol");

    RegularityReport report;
    report.mode = fueter::RegMode::SliceRegular;
    report.method = fueter::Method::Numeric;
    report.tolerance = config.tol;
    report.caveat =
        "numeric verdict from finitely many slices and points; does not certify real "
        "differentiability";

    const EvalFn f = fueter::make_eval_fn(e);
    Sampler sampler(config.seed);
    double max_norm = 0.0;
    for (int s = 0; s < config.num_slices; ++s) {
        const UnitImaginary I = sample_unit_imaginary(sampler);
        for (int n = 0; n < config.num_points; ++n) {
            const SlicePoint p = sample_slice_point(sampler);
            const Quaternion residual = slice_cr_residual(f, I, p, config.h);
            const double norm = std::sqrt(norm_squared(residual).flt());
            max_norm = std::max(max_norm, norm);
            fueter::ResidualSample sample{embed(I, p), residual, norm,
                                          std::array<double, 3>{I.x1().flt(), I.x2().flt(),
                                                                I.x3().flt()}};
            report.residuals.push_back(std::move(sample));
        }
    }
    report.verdict = max_norm <= config.tol ? fueter::RegVerdict::Regular
                                            : fueter::RegVerdict::NotRegular;
    return report;
}

SeriesResult series_eval(const std::vector<Quaternion>& coeffs, const Quaternion& q,
                         unsigned N, double tail_tol) {
    if (q.mode() != Mode::Float64)
        throw ModeMismatchError("series_eval needs Float64 mode for tail bounds");
    for (const Quaternion& a : coeffs)
        if (a.mode() != Mode::Float64)
            throw ModeMismatchError("series_eval needs Float64 coefficients");

    SeriesResult result{Quaternion::zero(Mode::Float64), 0.0, false, false, 0.0, false};

    // Horner with coefficients on the left: a_0 + (a_1 + (a_2 + ...)q)q.
    if (!coeffs.empty()) {
        const std::size_t last = std::min<std::size_t>(N, coeffs.size() - 1);
        Quaternion acc = coeffs[last];
        for (std::size_t n = last; n-- > 0;) acc = add(coeffs[n], mul_components(acc, q));
        result.value = acc;
    }

    // Crude radius estimate from the last up-to-16 consecutive ratios.
    const auto mag = [](const Quaternion& v) { return std::sqrt(norm_squared(v).flt()); };
    double max_ratio = 0.0;
    int ratios = 0;
    for (std::size_t n = coeffs.size(); n-- > 1 && ratios < 16;) {
        const double denom = mag(coeffs[n - 1]);
        if (denom == 0.0) continue;
        max_ratio = std::max(max_ratio, mag(coeffs[n]) / denom);
        ++ratios;
    }
    result.radius_estimate =
        ratios == 0 || max_ratio == 0.0 ? std::numeric_limits<double>::infinity()
                                        : 1.0 / max_ratio;

    const double qn = mag(q);
    result.divergence_flag = qn >= result.radius_estimate;
    if (result.divergence_flag) {
        result.truncation_unbounded = true;
        result.truncation_bound = std::numeric_limits<double>::infinity();
    } else {
        double bound = 0.0;
        double power = std::pow(qn, static_cast<double>(N) + 1.0);
        for (std::size_t n = N + 1; n < coeffs.size() && n <= static_cast<std::size_t>(N) + 64;
             ++n) {
            bound += mag(coeffs[n]) * power;
            power *= qn;
        }
        result.truncation_bound = bound;
    }
    result.tail_ok = result.truncation_bound <= tail_tol;
    return result;
}

} // namespace quatkit::slice
