#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatkit/scalar.hpp"
#include "quatkit/sympoly.hpp"

namespace quatkit::structure {

/// Multiplication table of a finite-dimensional real algebra: constants[a][b]
/// is the product of basis elements a and b expanded in the basis. Basis
/// element 0 is the multiplicative identity; everything is ExactRational.
struct StructureTable {
    int dim = 0;
    std::vector<std::string> basis_names;
    std::vector<std::vector<std::vector<Scalar>>> constants;
};

/// Coefficient vector over a table's basis.
using Element = std::vector<Scalar>;

/// Checks shape, scalar mode, and the identity axiom; throws InvalidTableError.
void validate(const StructureTable& table);

Element zero_element(const StructureTable& table);
Element basis_element(const StructureTable& table, int index);
bool is_zero(const Element& e);
bool equal(const Element& a, const Element& b);

/// Bilinear extension of the table to arbitrary elements.
Element multiply(const StructureTable& table, const Element& a, const Element& b);

/// dim x dim matrix of left multiplication by `a`: column c holds a * e_c.
std::vector<std::vector<Scalar>> left_mul_matrix(const StructureTable& table, const Element& a);

/// Exact determinant by Gaussian elimination over the rationals.
Scalar det(std::vector<std::vector<Scalar>> m);

/// A nonzero vector in the kernel of the matrix, if any.
std::optional<std::vector<Scalar>> kernel_vector(std::vector<std::vector<Scalar>> m);

std::string render_element(const StructureTable& table, const Element& e);

/// The quaternions: i^2 = j^2 = k^2 = ijk = -1 with ji = -k.
StructureTable quaternion_table();

/// The 4-dimensional table obtained by assuming ji = +k instead: forces
/// k^2 = +1 and coincides with the bicomplex table.
StructureTable ji_plus_k_table();

/// Commutative table with i^2 = j^2 = -1 and ij = ji = k (bicomplex numbers).
StructureTable bicomplex_table();

enum class StructVerdict { LinearDependence, ZeroDivisor, NoRealSolution, Consistent };
const char* verdict_name(StructVerdict v);

/// One rewriting step of a derivation, rendered for humans. The structured
/// payloads on the report are what replay() re-evaluates; these strings are
/// generated from them.
struct DerivationStep {
    std::string expression;
    std::string rewritten;
    std::string justification;
};

/// Replay data for one ij-case of the triplet analysis: a three-letter probe
/// word evaluated under both associativity groupings.
struct TripletCasePayload {
    std::array<Rational, 3> ij;             // assumed value of i*j over (1,i,j)
    std::array<int, 3> probe;               // generator indices, 1 = i, 2 = j
    std::array<Rational, 3> left_grouping;  // value of (w0*w1)*w2
    std::array<Rational, 3> right_grouping; // value of w0*(w1*w2)
    std::array<Rational, 3> forced_zero;    // left - right; nonzero, yet must vanish
};

/// Replay data for the symbolic obstruction with ij = alpha + beta*i + gamma*j.
struct ObstructionPayload {
    std::array<SymPoly, 3> i_times_ij; // components of i*(i*j)
    std::array<SymPoly, 3> ii_times_j; // components of (i*i)*j, i.e. -j
    std::vector<SymPoly> equations;    // componentwise difference, each = 0
};

/// Replay data for the ji = +k zero-divisor exhibition.
struct ZeroDivisorPayload {
    StructureTable table;
    Element witness_a; // 1 + k
    Element witness_b; // 1 - k
    Element k_squared; // +1
    Scalar det_witness_a;
};

struct ContradictionReport {
    std::string case_label;
    std::vector<DerivationStep> steps;
    StructVerdict verdict;

    std::optional<TripletCasePayload> triplet;
    std::optional<ObstructionPayload> obstruction;
    std::optional<ZeroDivisorPayload> zero_divisor;
};

/// Re-evaluates every derivation from its payload and checks the stored
/// values and verdict; returns false on any mismatch.
bool replay(const ContradictionReport& report);

/// The seven cases ij in {+1,-1,+i,-i,+j,-j,0}, each ending in a
/// contradiction; no case is Consistent.
std::vector<ContradictionReport> triplet_case_analysis();

/// ij = alpha + beta*i + gamma*j with symbolic reals; associativity
/// i(ij) = (ii)j forces gamma^2 = -1, which has no real solution.
ContradictionReport triplet_general_obstruction();

/// Assuming ji = +k makes k^2 = +1 and (1+k)(1-k) = 0.
ContradictionReport ji_equals_k_zero_divisors();

struct DivisionCheckResult {
    bool certified = false;
    std::optional<std::pair<Element, Element>> witness; // a*b = 0, a,b nonzero
    int trials = 0;
};

/// Certifies sampled invertibility (exact determinant of the left
/// multiplication matrix for `trials` seeded random nonzero elements) and
/// exhaustively scans all {-1,0,1}-coefficient elements for zero divisors,
/// simplest witnesses first. The scan runs before the random trials so the
/// returned witness is deterministic.
DivisionCheckResult division_check(const StructureTable& table, int trials, std::uint64_t seed);

} // namespace quatkit::structure
