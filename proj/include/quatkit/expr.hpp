#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quatkit/quaternion.hpp"

namespace quatkit::expr {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST for quaternionic functions of one quaternionic variable q.
/// Prod keeps factor order (multiplication does not commute); Series is a
/// truncated power series sum_{n<=trunc} a_n q^n built programmatically (it
/// has no surface syntax).
struct Expr {
    enum class Kind { Const, VarQ, Component, Conj, Neg, Sum, Prod, Pow, Series, Ident };

    Kind kind;
    std::size_t position = 0; // 1-based source position, 0 when synthetic

    std::vector<Quaternion> values;  // Const: one entry; Series: coefficients
    int component = 0;               // Component: 0..3
    std::vector<ExprPtr> children;   // Conj/Neg/Pow: one; Sum: two; Prod: factors
    unsigned exponent = 0;           // Pow (also Series truncation order)
    std::string name;                // Ident (parse-time only)
};

ExprPtr make_const(Quaternion value);
ExprPtr make_var();
ExprPtr make_component(int t);
ExprPtr make_conj(ExprPtr child);
ExprPtr make_neg(ExprPtr child);
ExprPtr make_sum(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_prod(std::vector<ExprPtr> factors);
ExprPtr make_pow(ExprPtr child, unsigned exponent);
ExprPtr make_series(std::vector<Quaternion> coefficients, unsigned truncation);

/// Parses the expression language:
///
///   toplevel := expr ("where" IDENT "=" expr ("," IDENT "=" expr)*)?
///   expr     := term (("+"|"-") term)*
///   term     := factor ("*" factor)*
///   factor   := "-"* base ("^" NAT)?
///   base     := "q" | "q0".."q3" | "conj" "(" expr ")" | NUMBER
///             | "i" | "j" | "k" | IDENT | "(" expr ")"
///
/// Numbers are integers or n/d rationals in either mode; decimal literals
/// need Float64 mode. Juxtaposition is not multiplication. where-bindings
/// are substituted at parse time, left to right. Exponents are capped at 64.
/// Errors carry 1-based positions.
ExprPtr parse(const std::string& text, Mode mode = Mode::ExactRational);

/// Structural evaluation at a point; modes of constants and point must agree.
Quaternion eval(const ExprPtr& e, const Quaternion& q);

/// Renders an AST back to parser syntax (Series nodes render as the
/// expanded truncated sum).
std::string to_string(const ExprPtr& e);

} // namespace quatkit::expr
