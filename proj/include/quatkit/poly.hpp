#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "quatkit/expr.hpp"

namespace quatkit::expr {

/// Per-variable exponent cap for canonical polynomials.
inline constexpr unsigned kPolyExponentCap = 64;

/// Exponents of the real monomial q0^e0 q1^e1 q2^e2 q3^e3.
struct MultiIndex {
    std::array<std::uint8_t, 4> e{0, 0, 0, 0};

    bool operator<(const MultiIndex& o) const { return e < o.e; }
    bool operator==(const MultiIndex& o) const { return e == o.e; }
    unsigned degree() const { return e[0] + e[1] + e[2] + e[3]; }
    std::string to_string() const;
};

/// Canonical form of a polynomial function of q: a sum of real monomials in
/// the components q0..q3, each with a single quaternion coefficient collected
/// on the right (legal since the components are real and central). The map
/// never stores zero coefficients, so equal functions have identical forms.
class CanonicalPoly {
public:
    explicit CanonicalPoly(Mode mode) : mode_(mode) {}

    static CanonicalPoly constant(const Quaternion& c);

    Mode mode() const noexcept { return mode_; }
    const std::map<MultiIndex, Quaternion>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient accumulation; drops terms that cancel to zero.
    void add_term(const MultiIndex& index, const Quaternion& coefficient);

    CanonicalPoly operator+(const CanonicalPoly& o) const;
    CanonicalPoly operator-() const;
    CanonicalPoly operator*(const CanonicalPoly& o) const;
    bool operator==(const CanonicalPoly& o) const;
    bool operator!=(const CanonicalPoly& o) const { return !(*this == o); }

    /// Conjugates every coefficient (valid since monomials are real).
    CanonicalPoly conjugated() const;

    std::string to_string() const;

private:
    Mode mode_;
    std::map<MultiIndex, Quaternion> terms_;
};

/// Fully distributes an AST into canonical form, substituting
/// q -> q0 + q1 i + q2 j + q3 k and conj(q) -> q0 - q1 i - q2 j - q3 k.
/// The scalar mode is taken from the expression's constants (ExactRational
/// when there are none).
CanonicalPoly expand(const ExprPtr& e);
CanonicalPoly expand(const ExprPtr& e, Mode mode);

/// Sum over terms of (q0^e0 q1^e1 q2^e2 q3^e3) * coefficient.
Quaternion eval_poly(const CanonicalPoly& p, const Quaternion& q);

/// Partial derivative with respect to component `var` (power rule).
CanonicalPoly derivative(const CanonicalPoly& p, int var);

} // namespace quatkit::expr
