#pragma once

#include <cstdint>
#include <vector>

#include "quatkit/fueter.hpp"

namespace quatkit::slice {

/// Purely imaginary unit quaternion I = x1 i + x2 j + x3 k with
/// x1^2 + x2^2 + x3^2 = 1 (exact, or within 1e-12 in float mode), so that
/// I^2 = -1 and L_I = R + R*I is a complex line through 1 and I.
class UnitImaginary {
public:
    UnitImaginary(Scalar x1, Scalar x2, Scalar x3);

    static UnitImaginary axis(int unit, Mode mode); // 1 = i, 2 = j, 3 = k

    Mode mode() const noexcept { return x1_.mode(); }
    const Scalar& x1() const noexcept { return x1_; }
    const Scalar& x2() const noexcept { return x2_; }
    const Scalar& x3() const noexcept { return x3_; }

    Quaternion as_quaternion() const;

private:
    Scalar x1_, x2_, x3_;
};

/// Coordinates on the slice L_I; the point embeds as x + y*I.
struct SlicePoint {
    Scalar x, y;
};

Quaternion embed(const UnitImaginary& I, const SlicePoint& p);

/// Cauchy-Riemann residual of F(x,y) = f(x + y*I) on the slice, by central
/// differences: dF/dx + (dF/dy)*I. The slice unit multiplies on the RIGHT,
/// the convention under which the left-coefficient monomials a*q^n are
/// slice-regular. Float64 only.
Quaternion slice_cr_residual(const fueter::EvalFn& f, const UnitImaginary& I,
                             const SlicePoint& p, double h);
Quaternion slice_cr_residual(const expr::ExprPtr& e, const UnitImaginary& I,
                             const SlicePoint& p, double h);

struct SliceCheckConfig {
    int num_slices = 8;
    int num_points = 10;
    double h = 1e-5;
    double tol = 1e-6;
    std::uint64_t seed = 42;
};

/// Samples seeded unit imaginaries (uniform on the sphere) and slice points
/// with y > 0 (the shared real axis is avoided); Regular iff every residual
/// norm is within tolerance. The report carries every residual with its
/// slice direction.
fueter::RegularityReport is_slice_regular(const expr::ExprPtr& e, const SliceCheckConfig& config);

struct SeriesResult {
    Quaternion value;
    double truncation_bound = 0.0;
    bool truncation_unbounded = false; // |q| at or past the radius estimate
    bool divergence_flag = false;
    double radius_estimate = 0.0;
    bool tail_ok = false; // truncation_bound <= tail_tol
};

/// Horner evaluation of sum_{n<=N} a_n q^n with coefficients on the left of
/// the powers. The truncation bound sums |a_n||q|^n over the next available
/// 64 coefficients; the crude radius estimate (inverse of the largest of the
/// last 16 coefficient ratios) only gates the divergence flag.
SeriesResult series_eval(const std::vector<Quaternion>& coeffs, const Quaternion& q,
                         unsigned N, double tail_tol);

} // namespace quatkit::slice
