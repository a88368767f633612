#pragma once

#include <array>
#include <map>
#include <string>

#include "quatkit/rational.hpp"

namespace quatkit::structure {

/// Exact multivariate polynomial over Q in the three real unknowns
/// alpha, beta, gamma used by the generic triplet obstruction.
class SymPoly {
public:
    static constexpr int kVars = 3;
    using Exponents = std::array<unsigned, kVars>;

    SymPoly() = default;
    static SymPoly constant(Rational c);
    static SymPoly variable(int index); // 0=alpha, 1=beta, 2=gamma

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator-() const;
    SymPoly operator*(const SymPoly& o) const;

    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    bool is_zero() const noexcept { return terms_.empty(); }

    /// True when the polynomial is provably positive for every real
    /// assignment: all exponents even, all coefficients positive, and a
    /// positive constant term. Sound but not complete; enough to certify
    /// that an equation like gamma^2 + 1 = 0 has no real solution.
    bool provably_positive() const;

    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    std::map<Exponents, Rational> terms_; // no zero coefficients stored
};

} // namespace quatkit::structure
