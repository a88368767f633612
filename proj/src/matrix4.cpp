#include "quatkit/matrix4.hpp"

namespace quatkit {

Matrix4::Matrix4(std::array<std::array<Scalar, 4>, 4> entries)
    : entries_(std::move(entries)), mode_(entries_[0][0].mode()) {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (e.mode() != mode_)
                throw ModeMismatchError("matrix entries must share one scalar mode");
}

Matrix4 Matrix4::identity(Mode m) {
    const Scalar z = Scalar::zero(m), o = Scalar::one(m);
    return Matrix4({{{o, z, z, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, o}}});
}

Vec4 Matrix4::apply(const Vec4& v) const {
    Vec4 out{Scalar::zero(mode_), Scalar::zero(mode_), Scalar::zero(mode_), Scalar::zero(mode_)};
    for (int r = 0; r < 4; ++r) {
        Scalar acc = Scalar::zero(mode_);
        for (int c = 0; c < 4; ++c) acc = acc + entries_[r][c] * v[c];
        out[r] = acc;
    }
    return out;
}

namespace {

Scalar det3(const std::array<std::array<Scalar, 4>, 4>& m, int r0, int r1, int r2, int c0,
            int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

} // namespace

Scalar Matrix4::determinant() const {
    // Cofactor expansion along row 0.
    Scalar acc = Scalar::zero(mode_);
    const int cols[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (int c = 0; c < 4; ++c) {
        Scalar cof = entries_[0][c] * det3(entries_, 1, 2, 3, cols[c][0], cols[c][1], cols[c][2]);
        acc = (c % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

bool Matrix4::operator==(const Matrix4& o) const {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (entries_[r][c] != o.entries_[r][c]) return false;
    return true;
}

} // namespace quatkit
