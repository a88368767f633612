#include "quatkit/quaternion.hpp"

#include <cmath>

namespace quatkit {

Quaternion::Quaternion(Scalar w, Scalar x, Scalar y, Scalar z)
    : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    if (x_.mode() != w_.mode() || y_.mode() != w_.mode() || z_.mode() != w_.mode())
        throw ModeMismatchError("quaternion components must share one scalar mode");
}

Quaternion Quaternion::zero(Mode m) {
    const Scalar z = Scalar::zero(m);
    return {z, z, z, z};
}

Quaternion Quaternion::one(Mode m) { return unit(0, m); }

Quaternion Quaternion::unit(int t, Mode m) {
    if (t < 0 || t > 3) throw InvalidArgumentError("unit index out of range");
    const Scalar z = Scalar::zero(m), o = Scalar::one(m);
    Vec4 v{z, z, z, z};
    v[t] = o;
    return from_components(v);
}

Quaternion Quaternion::real(Scalar s) {
    const Scalar z = Scalar::zero(s.mode());
    return {std::move(s), z, z, z};
}

const Scalar& Quaternion::component(int t) const {
    switch (t) {
        case 0: return w_;
        case 1: return x_;
        case 2: return y_;
        case 3: return z_;
        default: throw InvalidArgumentError("component index out of range");
    }
}

bool Quaternion::operator==(const Quaternion& o) const {
    return w_ == o.w_ && x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
}

namespace {

void check_modes(const Quaternion& p, const Quaternion& q, const char* op) {
    if (p.mode() != q.mode())
        throw ModeMismatchError(std::string("quaternion '") + op + "' between " +
                                mode_name(p.mode()) + " and " + mode_name(q.mode()));
}

} // namespace

Quaternion add(const Quaternion& p, const Quaternion& q) {
    check_modes(p, q, "+");
    return {p.w() + q.w(), p.x() + q.x(), p.y() + q.y(), p.z() + q.z()};
}

Quaternion sub(const Quaternion& p, const Quaternion& q) {
    check_modes(p, q, "-");
    return {p.w() - q.w(), p.x() - q.x(), p.y() - q.y(), p.z() - q.z()};
}

Quaternion negate(const Quaternion& q) { return {-q.w(), -q.x(), -q.y(), -q.z()}; }

Quaternion scalar_mul(const Scalar& s, const Quaternion& q) {
    return {s * q.w(), s * q.x(), s * q.y(), s * q.z()};
}

Quaternion mul_components(const Quaternion& p, const Quaternion& q) {
    check_modes(p, q, "*");
    const Scalar &p0 = p.w(), &p1 = p.x(), &p2 = p.y(), &p3 = p.z();
    const Scalar &q0 = q.w(), &q1 = q.x(), &q2 = q.y(), &q3 = q.z();
    return {p0 * q0 - (p1 * q1 + p2 * q2 + p3 * q3),
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0};
}

Quaternion mul_matrix(const Quaternion& p, const Quaternion& q) {
    check_modes(p, q, "*");
    return Quaternion::from_components(left_mul_matrix(p).apply(q.components()));
}

Quaternion mul_vector_form(const Quaternion& p, const Quaternion& q) {
    check_modes(p, q, "*");
    const Scalar &p0 = p.w(), &q0 = q.w();
    const std::array<Scalar, 3> vp{p.x(), p.y(), p.z()};
    const std::array<Scalar, 3> vq{q.x(), q.y(), q.z()};

    const Scalar dot = vp[0] * vq[0] + vp[1] * vq[1] + vp[2] * vq[2];
    const std::array<Scalar, 3> cross{vp[1] * vq[2] - vp[2] * vq[1],
                                      vp[2] * vq[0] - vp[0] * vq[2],
                                      vp[0] * vq[1] - vp[1] * vq[0]};

    return {p0 * q0 - dot,
            p0 * vq[0] + q0 * vp[0] + cross[0],
            p0 * vq[1] + q0 * vp[1] + cross[1],
            p0 * vq[2] + q0 * vp[2] + cross[2]};
}

Quaternion conjugate(const Quaternion& q) { return {q.w(), -q.x(), -q.y(), -q.z()}; }

Scalar norm_squared(const Quaternion& q) {
    return q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z();
}

Scalar norm(const Quaternion& q) {
    if (q.mode() != Mode::Float64)
        throw UnsupportedOperationError("norm requires Float64 mode; use norm_squared for exact work");
    return Scalar::float64(std::sqrt(norm_squared(q).flt()));
}

Quaternion inverse(const Quaternion& q) {
    if (q.is_zero()) throw DivisionByZeroError("inverse of the zero quaternion");
    const Scalar n2 = norm_squared(q);
    const Quaternion c = conjugate(q);
    return {c.w() / n2, c.x() / n2, c.y() / n2, c.z() / n2};
}

Matrix4 left_mul_matrix(const Quaternion& p) {
    const Scalar &p0 = p.w(), &p1 = p.x(), &p2 = p.y(), &p3 = p.z();
    return Matrix4({{{p0, -p1, -p2, -p3},
                     {p1, p0, -p3, p2},
                     {p2, p3, p0, -p1},
                     {p3, -p2, p1, p0}}});
}

std::string SignedUnit::to_string() const {
    static const char* names[4] = {"1", "i", "j", "k"};
    return sign < 0 ? std::string("-") + names[unit] : std::string(names[unit]);
}

UnitTable unit_table() {
    const Mode m = Mode::ExactRational;
    UnitTable table{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Quaternion r = mul_components(Quaternion::unit(a, m), Quaternion::unit(b, m));
            // Exactly one component of a basis product is +-1.
            for (int t = 0; t < 4; ++t) {
                const int s = r.component(t).sign();
                if (s != 0) {
                    table[a][b] = SignedUnit{s, t};
                    break;
                }
            }
        }
    }
    return table;
}

std::string Quaternion::to_string() const {
    static const char* names[4] = {"", "i", "j", "k"};
    std::string out;
    for (int t = 0; t < 4; ++t) {
        const Scalar& c = component(t);
        if (c.is_zero()) continue;
        std::string mag = c.to_string();
        bool neg = false;
        if (!mag.empty() && mag[0] == '-') {
            neg = true;
            mag = mag.substr(1);
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (t == 0) {
            out += mag;
        } else if (mag == "1") {
            out += names[t];
        } else {
            out += mag + "*" + names[t];
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace quatkit
