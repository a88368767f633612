#pragma once

#include <array>
#include <string>

#include "quatkit/matrix4.hpp"
#include "quatkit/scalar.hpp"

namespace quatkit {

/// q = w + x*i + y*j + z*k over one scalar mode. Values are immutable after
/// construction; every operation below is a pure function.
class Quaternion {
public:
    Quaternion(Scalar w, Scalar x, Scalar y, Scalar z);

    static Quaternion zero(Mode m);
    static Quaternion one(Mode m);
    static Quaternion unit(int t, Mode m); // t in {0:1, 1:i, 2:j, 3:k}
    static Quaternion real(Scalar s);
    static Quaternion from_components(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

    Mode mode() const noexcept { return w_.mode(); }
    const Scalar& w() const noexcept { return w_; }
    const Scalar& x() const noexcept { return x_; }
    const Scalar& y() const noexcept { return y_; }
    const Scalar& z() const noexcept { return z_; }
    const Scalar& component(int t) const;
    Vec4 components() const { return {w_, x_, y_, z_}; }

    bool is_zero() const { return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero(); }

    /// Componentwise: p = q iff p_t = q_t for all t.
    bool operator==(const Quaternion& o) const;
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Scalar w_, x_, y_, z_;
};

Quaternion add(const Quaternion& p, const Quaternion& q);
Quaternion sub(const Quaternion& p, const Quaternion& q);
Quaternion negate(const Quaternion& q);
Quaternion scalar_mul(const Scalar& s, const Quaternion& q);

/// Hamilton product via the regrouped four-component formula.
Quaternion mul_components(const Quaternion& p, const Quaternion& q);

/// Hamilton product as M(p) * [q0 q1 q2 q3]^T. Shares no code with
/// mul_components; the agreement of the three forms is a test oracle.
Quaternion mul_matrix(const Quaternion& p, const Quaternion& q);

/// Hamilton product in scalar/vector form:
/// pq = p0*q0 - p.q + p0*vq + q0*vp + vp x vq.
Quaternion mul_vector_form(const Quaternion& p, const Quaternion& q);

Quaternion conjugate(const Quaternion& q);

/// q0^2 + q1^2 + q2^2 + q3^2, valid in either mode.
Scalar norm_squared(const Quaternion& q);

/// sqrt(norm_squared); Float64 only (square roots leave the rationals).
Scalar norm(const Quaternion& q);

/// conjugate(q) / |q|^2; throws DivisionByZeroError on q = 0.
Quaternion inverse(const Quaternion& q);

/// The left-multiplication matrix M(p) with rows
///   ( p0 -p1 -p2 -p3 ; p1 p0 -p3 p2 ; p2 p3 p0 -p1 ; p3 -p2 p1 p0 ).
Matrix4 left_mul_matrix(const Quaternion& p);

/// Signed basis unit: sign in {+1,-1}, unit index in {0:1, 1:i, 2:j, 3:k}.
struct SignedUnit {
    int sign;
    int unit;

    bool operator==(const SignedUnit& o) const { return sign == o.sign && unit == o.unit; }
    std::string to_string() const;
};

using UnitTable = std::array<std::array<SignedUnit, 4>, 4>;

/// All 16 products over {1,i,j,k}, computed from the component product.
UnitTable unit_table();

inline Quaternion operator+(const Quaternion& p, const Quaternion& q) { return add(p, q); }
inline Quaternion operator-(const Quaternion& p, const Quaternion& q) { return sub(p, q); }
inline Quaternion operator-(const Quaternion& q) { return negate(q); }
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return mul_components(p, q);
}

} // namespace quatkit
