#include "quatkit/structure.hpp"

#include <algorithm>

#include "quatkit/quaternion.hpp"
#include "quatkit/rng.hpp"

namespace quatkit::structure {

void validate(const StructureTable& table) {
    if (table.dim < 1) throw InvalidTableError("table dimension must be >= 1");
    const std::size_t n = static_cast<std::size_t>(table.dim);
    if (table.basis_names.size() != n) throw InvalidTableError("basis name count != dim");
    if (table.constants.size() != n) throw InvalidTableError("constants row count != dim");
    for (const auto& row : table.constants) {
        if (row.size() != n) throw InvalidTableError("constants column count != dim");
        for (const auto& coeffs : row) {
            if (coeffs.size() != n) throw InvalidTableError("product vector length != dim");
            for (const auto& c : coeffs)
                if (!c.is_exact())
                    throw InvalidTableError("structure constants must be exact rationals");
        }
    }
    // Identity axiom: e0 * b = b * e0 = b.
    for (int b = 0; b < table.dim; ++b) {
        for (int u = 0; u < table.dim; ++u) {
            const Scalar want = Scalar::rational(u == b ? 1 : 0);
            if (table.constants[0][b][u] != want || table.constants[b][0][u] != want)
                throw InvalidTableError("basis element 0 is not a two-sided identity");
        }
    }
}

Element zero_element(const StructureTable& table) {
    return Element(table.dim, Scalar::rational(0));
}

Element basis_element(const StructureTable& table, int index) {
    Element e = zero_element(table);
    e.at(index) = Scalar::rational(1);
    return e;
}

bool is_zero(const Element& e) {
    return std::all_of(e.begin(), e.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool equal(const Element& a, const Element& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] != b[t]) return false;
    return true;
}

Element multiply(const StructureTable& table, const Element& a, const Element& b) {
    if (a.size() != static_cast<std::size_t>(table.dim) || b.size() != a.size())
        throw InvalidArgumentError("element size does not match table dimension");
    Element out = zero_element(table);
    for (int s = 0; s < table.dim; ++s) {
        if (a[s].is_zero()) continue;
        for (int t = 0; t < table.dim; ++t) {
            if (b[t].is_zero()) continue;
            const Scalar coeff = a[s] * b[t];
            for (int u = 0; u < table.dim; ++u)
                out[u] = out[u] + coeff * table.constants[s][t][u];
        }
    }
    return out;
}

std::vector<std::vector<Scalar>> left_mul_matrix(const StructureTable& table, const Element& a) {
    std::vector<std::vector<Scalar>> m(table.dim,
                                       std::vector<Scalar>(table.dim, Scalar::rational(0)));
    for (int c = 0; c < table.dim; ++c) {
        const Element col = multiply(table, a, basis_element(table, c));
        for (int r = 0; r < table.dim; ++r) m[r][c] = col[r];
    }
    return m;
}

Scalar det(std::vector<std::vector<Scalar>> m) {
    const int n = static_cast<int>(m.size());
    Scalar result = Scalar::rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Scalar::rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result = result * m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return result;
}

std::optional<std::vector<Scalar>> kernel_vector(std::vector<std::vector<Scalar>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[row]);
        const Scalar p = m[row][col];
        for (int c = 0; c < n; ++c) m[row][c] = m[row][c] / p;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] = m[r][c] - factor * m[row][c];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivot_col_of_row.size()) == n) return std::nullopt;
    // First free column: x[free] = 1, pivots read off the reduced rows.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Scalar> x(n, Scalar::rational(0));
    x[free_col] = Scalar::rational(1);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[pivot_col_of_row[r]] = -m[r][free_col];
    return x;
}

std::string render_element(const StructureTable& table, const Element& e) {
    std::string out;
    for (int t = 0; t < table.dim; ++t) {
        const Scalar& c = e[t];
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
            out += table.basis_names[t];
        } else {
            out += mag + "*" + table.basis_names[t];
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

StructureTable make_unit_product_table(const SignedUnit entries[4][4]) {
    StructureTable t;
    t.dim = 4;
    t.basis_names = {"1", "i", "j", "k"};
    t.constants.assign(4, std::vector<std::vector<Scalar>>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::vector<Scalar> v(4, Scalar::rational(0));
            v[entries[a][b].unit] = Scalar::rational(entries[a][b].sign);
            t.constants[a][b] = std::move(v);
        }
    return t;
}

} // namespace

StructureTable quaternion_table() {
    const UnitTable units = unit_table();
    SignedUnit entries[4][4];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) entries[a][b] = units[a][b];
    return make_unit_product_table(entries);
}

StructureTable ji_plus_k_table() {
    // ij = ji = k together with i^2 = j^2 = -1 forces, by associativity:
    // ik = ki = -j, jk = kj = -i, k^2 = (ij)(ij) = i(ij)j = (ii)(jj) = +1.
    static const SignedUnit entries[4][4] = {
        {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
        {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
        {{+1, 2}, {+1, 3}, {-1, 0}, {-1, 1}},
        {{+1, 3}, {-1, 2}, {-1, 1}, {+1, 0}},
    };
    return make_unit_product_table(entries);
}

StructureTable bicomplex_table() {
    // The commutative closure of i^2 = j^2 = -1 with ij = ji = k is the same
    // table the ji = +k assumption produces.
    return ji_plus_k_table();
}

const char* verdict_name(StructVerdict v) {
    switch (v) {
        case StructVerdict::LinearDependence: return "LinearDependence";
        case StructVerdict::ZeroDivisor: return "ZeroDivisor";
        case StructVerdict::NoRealSolution: return "NoRealSolution";
        case StructVerdict::Consistent: return "Consistent";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Partial 3-dimensional algebra over basis (1, i, j): products 1*x, x*1,
// i*i = j*j = -1 are fixed, i*j is the case assumption, j*i is undefined.
// Templated over the coefficient ring so the same evaluator drives both the
// exact rational cases and the symbolic obstruction.
// ---------------------------------------------------------------------------

namespace {

template <class R>
R ring_one();
template <>
Rational ring_one<Rational>() {
    return Rational(1);
}
template <>
SymPoly ring_one<SymPoly>() {
    return SymPoly::constant(Rational(1));
}

template <class R>
using Vec3T = std::array<R, 3>;

template <class R>
bool vec3_is_zero(const Vec3T<R>& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

template <class R>
Vec3T<R> vec3_sub(const Vec3T<R>& a, const Vec3T<R>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class R>
struct PartialTriplet {
    Vec3T<R> ij;

    std::optional<Vec3T<R>> basis_product(int s, int t) const {
        Vec3T<R> v{};
        if (s == 0) {
            v[t] = ring_one<R>();
            return v;
        }
        if (t == 0) {
            v[s] = ring_one<R>();
            return v;
        }
        if (s == t) { // i*i = j*j = -1
            v[0] = -ring_one<R>();
            return v;
        }
        if (s == 1 && t == 2) return ij;
        return std::nullopt; // j*i is not determined by the case assumption
    }

    std::optional<Vec3T<R>> product(const Vec3T<R>& a, const Vec3T<R>& b) const {
        Vec3T<R> out{};
        for (int s = 0; s < 3; ++s) {
            for (int t = 0; t < 3; ++t) {
                const R coeff = a[s] * b[t];
                if (coeff.is_zero()) continue;
                const auto bp = basis_product(s, t);
                if (!bp) return std::nullopt;
                for (int u = 0; u < 3; ++u) out[u] = out[u] + coeff * (*bp)[u];
            }
        }
        return out;
    }

    Vec3T<R> generator(int g) const {
        Vec3T<R> v{};
        v[g] = ring_one<R>();
        return v;
    }

    struct Groupings {
        Vec3T<R> left;  // (w0*w1)*w2
        Vec3T<R> right; // w0*(w1*w2)
    };

    std::optional<Groupings> eval_probe(const std::array<int, 3>& w) const {
        const auto ab = product(generator(w[0]), generator(w[1]));
        const auto bc = product(generator(w[1]), generator(w[2]));
        if (!ab || !bc) return std::nullopt;
        const auto left = product(*ab, generator(w[2]));
        const auto right = product(generator(w[0]), *bc);
        if (!left || !right) return std::nullopt;
        return Groupings{*left, *right};
    }
};

const char* kTripletNames[3] = {"1", "i", "j"};

std::string render_vec3(const Vec3T<Rational>& v) {
    std::string out;
    for (int t = 0; t < 3; ++t) {
        if (v[t].is_zero()) continue;
        std::string mag = v[t].to_string();
        bool neg = false;
        if (mag[0] == '-') {
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
            out += kTripletNames[t];
        } else {
            out += mag + "*" + kTripletNames[t];
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_vec3(const Vec3T<SymPoly>& v) {
    std::string out;
    for (int t = 0; t < 3; ++t) {
        if (v[t].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (t == 0) {
            out += "(" + v[t].to_string() + ")";
        } else {
            out += "(" + v[t].to_string() + ")*" + kTripletNames[t];
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_word(const std::array<int, 3>& w, bool group_left) {
    const std::string a = kTripletNames[w[0]], b = kTripletNames[w[1]], c = kTripletNames[w[2]];
    return group_left ? "(" + a + "*" + b + ")*" + c : a + "*(" + b + "*" + c + ")";
}

/// Conclusion "generator = rest" read off a forced-zero combination,
/// eliminating the highest basis generator with a nonzero coefficient.
std::string render_conclusion(const Vec3T<Rational>& f) {
    for (int t = 2; t >= 1; --t) {
        if (f[t].is_zero()) continue;
        Vec3T<Rational> rest{};
        for (int u = 0; u < 3; ++u)
            if (u != t) rest[u] = -f[u] / f[t];
        return std::string(kTripletNames[t]) + " = " + render_vec3(rest);
    }
    return "1 = 0";
}

} // namespace

std::vector<ContradictionReport> triplet_case_analysis() {
    struct CaseSpec {
        const char* label;
        Vec3T<Rational> ij;
    };
    const CaseSpec cases[7] = {
        {"ij = +1", {Rational(1), Rational(0), Rational(0)}},
        {"ij = -1", {Rational(-1), Rational(0), Rational(0)}},
        {"ij = +i", {Rational(0), Rational(1), Rational(0)}},
        {"ij = -i", {Rational(0), Rational(-1), Rational(0)}},
        {"ij = +j", {Rational(0), Rational(0), Rational(1)}},
        {"ij = -j", {Rational(0), Rational(0), Rational(-1)}},
        {"ij = 0", {Rational(0), Rational(0), Rational(0)}},
    };

    std::vector<ContradictionReport> reports;
    reports.reserve(7);
    for (const CaseSpec& cs : cases) {
        const PartialTriplet<Rational> alg{cs.ij};
        const bool zero_case = vec3_is_zero(cs.ij);
        // Probe i*i*j when the assumption stays inside span{1,i}; probe
        // i*j*j when it involves j or vanishes. Matches the argument of
        // multiplying the assumption by i on the left or j on the right.
        const bool use_ijj = zero_case || !cs.ij[2].is_zero();
        const std::array<int, 3> probe = use_ijj ? std::array<int, 3>{1, 2, 2}
                                                 : std::array<int, 3>{1, 1, 2};
        const auto groupings = alg.eval_probe(probe);
        if (!groupings) throw Error("triplet probe unexpectedly undefined");

        TripletCasePayload payload;
        payload.ij = cs.ij;
        payload.probe = probe;
        payload.left_grouping = groupings->left;
        payload.right_grouping = groupings->right;
        payload.forced_zero = vec3_sub(groupings->left, groupings->right);

        ContradictionReport rep;
        rep.case_label = cs.label;
        rep.verdict = zero_case ? StructVerdict::ZeroDivisor : StructVerdict::LinearDependence;
        rep.triplet = payload;

        const std::string assumption = std::string("assumption i*j = ") + render_vec3(cs.ij);
        rep.steps.push_back({render_word(probe, true), render_vec3(groupings->left),
                             use_ijj ? assumption + "; then j*j = -1" : "i*i = -1"});
        rep.steps.push_back({render_word(probe, false), render_vec3(groupings->right),
                             use_ijj ? "j*j = -1" : assumption});
        rep.steps.push_back({render_vec3(groupings->left) + " - (" +
                                 render_vec3(groupings->right) + ")",
                             "0", "associativity: both groupings agree"});
        if (zero_case) {
            rep.steps.push_back({"i", "0",
                                 "i*(j*j) = -i vanishes, so i = 0; and i*j = 0 makes both "
                                 "i and j zero divisors"});
        } else {
            rep.steps.push_back({render_conclusion(payload.forced_zero), "",
                                 "forced by " + render_vec3(payload.forced_zero) +
                                     " = 0, so {1,i,j} is linearly dependent"});
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

ContradictionReport triplet_general_obstruction() {
    const SymPoly alpha = SymPoly::variable(0);
    const SymPoly beta = SymPoly::variable(1);
    const SymPoly gamma = SymPoly::variable(2);

    const PartialTriplet<SymPoly> alg{{alpha, beta, gamma}};
    const auto groupings = alg.eval_probe({1, 1, 2});
    if (!groupings) throw Error("symbolic probe unexpectedly undefined");

    ObstructionPayload payload;
    payload.i_times_ij = groupings->right;
    payload.ii_times_j = groupings->left;
    for (int c = 0; c < 3; ++c)
        payload.equations.push_back(groupings->right[c] - groupings->left[c]);

    ContradictionReport rep;
    rep.case_label = "ij = alpha + beta*i + gamma*j";
    rep.verdict = StructVerdict::NoRealSolution;

    rep.steps.push_back({"(i*i)*j", render_vec3(groupings->left), "i*i = -1"});
    rep.steps.push_back({"i*(i*j)", render_vec3(groupings->right),
                         "substitute i*j = alpha + beta*i + gamma*j and expand"});
    const char* component_names[3] = {"coefficient of 1", "coefficient of i",
                                      "coefficient of j"};
    for (int c = 0; c < 2; ++c)
        rep.steps.push_back({payload.equations[c].to_string(), "0",
                             std::string(component_names[c]) +
                                 " of i*(i*j) must match (i*i)*j"});
    rep.steps.push_back({"gamma^2", "-1",
                         std::string(component_names[2]) +
                             " of i*(i*j) must match (i*i)*j"});
    rep.steps.push_back({payload.equations[2].to_string(), "",
                         "even powers with positive coefficients plus a positive constant: "
                         "positive for every real gamma, so gamma^2 = -1 has no real "
                         "solution"});

    rep.obstruction = std::move(payload);
    return rep;
}

ContradictionReport ji_equals_k_zero_divisors() {
    const StructureTable table = ji_plus_k_table();
    const Element one_plus_k = {Scalar::rational(1), Scalar::rational(0), Scalar::rational(0),
                                Scalar::rational(1)};
    const Element one_minus_k = {Scalar::rational(1), Scalar::rational(0), Scalar::rational(0),
                                 Scalar::rational(-1)};

    ZeroDivisorPayload payload;
    payload.table = table;
    payload.witness_a = one_plus_k;
    payload.witness_b = one_minus_k;
    payload.k_squared = multiply(table, basis_element(table, 3), basis_element(table, 3));
    payload.det_witness_a = det(left_mul_matrix(table, one_plus_k));

    ContradictionReport rep;
    rep.case_label = "ji = +k";
    rep.verdict = StructVerdict::ZeroDivisor;
    rep.steps.push_back({"k*k", render_element(table, payload.k_squared),
                         "k^2 = (ij)(ji) = (ij)(ij) = i(ij)j = (i*i)*(j*j) = (-1)(-1) = 1"});
    rep.steps.push_back(
        {"(1+k)*(1-k)", render_element(table, multiply(table, one_plus_k, one_minus_k)),
         "1 - k^2 = 1 - 1 = 0 with both factors nonzero"});
    rep.steps.push_back({"det M(1+k)", payload.det_witness_a.to_string(),
                         "left multiplication by 1+k is singular, so 1+k has no inverse"});
    rep.zero_divisor = std::move(payload);
    return rep;
}

bool replay(const ContradictionReport& report) {
    if (report.triplet) {
        const TripletCasePayload& p = *report.triplet;
        const PartialTriplet<Rational> alg{p.ij};
        const auto groupings = alg.eval_probe(p.probe);
        if (!groupings) return false;
        if (groupings->left != p.left_grouping || groupings->right != p.right_grouping)
            return false;
        if (vec3_sub(groupings->left, groupings->right) != p.forced_zero) return false;
        if (vec3_is_zero(p.forced_zero)) return false; // no contradiction would follow
        const StructVerdict expected = vec3_is_zero(p.ij) ? StructVerdict::ZeroDivisor
                                                          : StructVerdict::LinearDependence;
        return report.verdict == expected;
    }
    if (report.obstruction) {
        const ObstructionPayload& p = *report.obstruction;
        const PartialTriplet<SymPoly> alg{
            {SymPoly::variable(0), SymPoly::variable(1), SymPoly::variable(2)}};
        const auto groupings = alg.eval_probe({1, 1, 2});
        if (!groupings) return false;
        for (int c = 0; c < 3; ++c) {
            if (groupings->right[c] != p.i_times_ij[c]) return false;
            if (groupings->left[c] != p.ii_times_j[c]) return false;
        }
        if (p.equations.size() != 3) return false;
        for (int c = 0; c < 3; ++c)
            if (p.equations[c] != p.i_times_ij[c] - p.ii_times_j[c]) return false;
        // The final equation must rule out every real solution by itself.
        if (!p.equations.back().provably_positive()) return false;
        return report.verdict == StructVerdict::NoRealSolution;
    }
    if (report.zero_divisor) {
        const ZeroDivisorPayload& p = *report.zero_divisor;
        validate(p.table);
        if (is_zero(p.witness_a) || is_zero(p.witness_b)) return false;
        if (!is_zero(multiply(p.table, p.witness_a, p.witness_b))) return false;
        const Element kk =
            multiply(p.table, basis_element(p.table, 3), basis_element(p.table, 3));
        if (!equal(kk, p.k_squared)) return false;
        if (!equal(kk, basis_element(p.table, 0))) return false; // k^2 = +1
        const Scalar d = det(left_mul_matrix(p.table, p.witness_a));
        if (d != p.det_witness_a || !d.is_zero()) return false;
        return report.verdict == StructVerdict::ZeroDivisor;
    }
    return false;
}

namespace {

/// All nonzero {-1,0,1} coefficient vectors of length dim, simplest first:
/// fewer nonzero coefficients, then earlier first nonzero coordinate, then
/// mixed-radix rank with digit order 0 < 1 < -1.
std::vector<Element> scan_candidates(int dim) {
    const long total = [dim] {
        long t = 1;
        for (int d = 0; d < dim; ++d) t *= 3;
        return t;
    }();
    struct Keyed {
        int nonzeros;
        int first_nonzero;
        long rank;
        Element elem;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(total - 1);
    for (long rank = 1; rank < total; ++rank) {
        long r = rank;
        std::vector<int> digits(dim);
        for (int d = dim - 1; d >= 0; --d) {
            digits[d] = static_cast<int>(r % 3);
            r /= 3;
        }
        Element e(dim, Scalar::rational(0));
        int nonzeros = 0, first = dim;
        for (int d = 0; d < dim; ++d) {
            const int coeff = digits[d] == 2 ? -1 : digits[d];
            if (coeff != 0) {
                ++nonzeros;
                if (first == dim) first = d;
            }
            e[d] = Scalar::rational(coeff);
        }
        keyed.push_back({nonzeros, first, rank, std::move(e)});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.nonzeros != b.nonzeros) return a.nonzeros < b.nonzeros;
        if (a.first_nonzero != b.first_nonzero) return a.first_nonzero < b.first_nonzero;
        return a.rank < b.rank;
    });
    std::vector<Element> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.elem));
    return out;
}

} // namespace

DivisionCheckResult division_check(const StructureTable& table, int trials, std::uint64_t seed) {
    validate(table);
    if (trials < 1) throw InvalidArgumentError("division_check needs trials >= 1");

    DivisionCheckResult result;
    result.trials = trials;

    // Exhaustive scan is instant at desk scale; skip it for big imported
    // tables where the 3^dim candidate pairs would blow up.
    if (table.dim <= 5) {
        const std::vector<Element> candidates = scan_candidates(table.dim);
        for (const Element& a : candidates) {
            for (const Element& b : candidates) {
                if (is_zero(multiply(table, a, b))) {
                    result.witness = {a, b};
                    return result;
                }
            }
        }
    }

    Sampler sampler(seed);
    for (int t = 0; t < trials; ++t) {
        Element a(table.dim, Scalar::rational(0));
        do {
            for (int d = 0; d < table.dim; ++d) a[d] = Scalar::rational(sampler.rational());
        } while (is_zero(a));
        const auto m = left_mul_matrix(table, a);
        if (det(m).is_zero()) {
            const auto b = kernel_vector(m);
            if (!b) throw Error("singular left-multiplication matrix with trivial kernel");
            result.witness = {a, *b};
            return result;
        }
    }
    result.certified = true;
    return result;
}

} // namespace quatkit::structure
