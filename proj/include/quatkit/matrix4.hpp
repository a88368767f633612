#pragma once

#include <array>

#include "quatkit/scalar.hpp"

namespace quatkit {

using Vec4 = std::array<Scalar, 4>;

/// 4x4 matrix of scalars, one mode throughout.
class Matrix4 {
public:
    explicit Matrix4(std::array<std::array<Scalar, 4>, 4> entries);

    static Matrix4 identity(Mode m);

    Mode mode() const noexcept { return mode_; }
    const Scalar& at(int row, int col) const { return entries_[row][col]; }

    Vec4 apply(const Vec4& v) const;

    /// Exact in ExactRational mode (cofactor expansion).
    Scalar determinant() const;

    bool operator==(const Matrix4& o) const;

private:
    std::array<std::array<Scalar, 4>, 4> entries_;
    Mode mode_;
};

} // namespace quatkit
