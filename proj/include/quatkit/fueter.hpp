#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quatkit/poly.hpp"

namespace quatkit::fueter {

enum class Side { Left, Right };
enum class Method { Symbolic, Numeric };

/// Which side the inverse increment multiplies the difference on.
/// LeftDivide is (eps*dir)^-1 * [f(q+eps*dir) - f(q)]; it is the convention
/// under which the linear functions a + q*b are direction-independent.
enum class QuotientSide { LeftDivide, RightDivide };

using EvalFn = std::function<Quaternion(const Quaternion&)>;

EvalFn make_eval_fn(const expr::ExprPtr& e);

/// d/dq0 p + i d/dq1 p + j d/dq2 p + k d/dq3 p. Units act on the left of
/// each term's coefficient; real monomials pass through.
expr::CanonicalPoly fueter_left_symbolic(const expr::CanonicalPoly& p);

/// d/dq0 p + (d/dq1 p) i + (d/dq2 p) j + (d/dq3 p) k, units on the right.
expr::CanonicalPoly fueter_right_symbolic(const expr::CanonicalPoly& p);

expr::CanonicalPoly fueter_symbolic(const expr::CanonicalPoly& p, Side side);

/// Central-difference Fueter operator, O(h^2): per coordinate direction
/// e_t in {1,i,j,k}, df_t = (f(q + h e_t) - f(q - h e_t)) / (2h), combined
/// with left or right unit multiplication. Float64 only.
Quaternion fueter_numeric(const EvalFn& f, Side side, const Quaternion& q, double h);
Quaternion fueter_numeric(const expr::ExprPtr& e, Side side, const Quaternion& q, double h);

enum class RegMode { FueterLeft, FueterRight, SliceRegular };
enum class RegVerdict { Regular, NotRegular };

const char* reg_mode_name(RegMode m);
const char* method_name(Method m);
const char* verdict_name(RegVerdict v);

struct ResidualSample {
    Quaternion point;
    Quaternion residual;
    double norm = 0.0;
    /// Slice direction (x1,x2,x3) for slice-regularity residuals.
    std::optional<std::array<double, 3>> slice;
};

struct RegularityReport {
    RegMode mode;
    Method method;
    RegVerdict verdict;
    std::vector<ResidualSample> residuals;
    std::optional<expr::CanonicalPoly> symbolic_result;
    double tolerance = 0.0;
    /// Numeric verdicts are sample-based evidence, never proofs; stated here.
    std::string caveat;
};

struct FueterCheckConfig {
    Side side = Side::Left;
    Method method = Method::Symbolic;
    double h = 1e-5;
    double tol = 1e-6;
    std::uint64_t seed = 42;
    int samples = 25;
    std::vector<Quaternion> points; // explicit sample points override sampling
};

/// Symbolic: expands e and applies the operator exactly; Regular iff the
/// result is the zero polynomial. Numeric: samples points in the unit ball
/// and compares max residual norm against the tolerance.
RegularityReport is_regular(const expr::ExprPtr& e, const FueterCheckConfig& config);

/// [f(q + eps*dir) - f(q)] divided by (eps*dir) on the configured side.
Quaternion difference_quotient(const EvalFn& f, const Quaternion& q, const Quaternion& dir,
                               double eps, QuotientSide side = QuotientSide::LeftDivide);
Quaternion difference_quotient(const expr::ExprPtr& e, const Quaternion& q,
                               const Quaternion& dir, double eps,
                               QuotientSide side = QuotientSide::LeftDivide);

/// Symbolic first-order operator +-d/dq_var.
struct DiffOp {
    int sign; // +1 or -1
    int var;  // 0..3

    bool operator==(const DiffOp& o) const { return sign == o.sign && var == o.var; }
    std::string to_string() const;
};

using PdeMatrix = std::array<std::array<DiffOp, 4>, 4>;

/// The 4x4 first-order system equivalent to the Fueter operator acting on
/// component functions (f0,f1,f2,f3); the left matrix has the same shape as
/// the quaternion left-multiplication matrix with p_t replaced by d/dq_t.
PdeMatrix pde_system_matrix(Side side);

/// The four real-coefficient component polynomials of p (f = sum f_t u_t).
std::array<expr::CanonicalPoly, 4> component_polys(const expr::CanonicalPoly& p);
expr::CanonicalPoly assemble_components(const std::array<expr::CanonicalPoly, 4>& comps);
std::array<expr::CanonicalPoly, 4> apply_pde_matrix(const PdeMatrix& m,
                                                    const std::array<expr::CanonicalPoly, 4>& comps);

} // namespace quatkit::fueter
