#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatkit/json_io.hpp"
#include "quatkit/quaternion.hpp"
#include "quatkit/rng.hpp"
#include "quatkit/structure.hpp"

using namespace quatkit;
using namespace quatkit::structure;

namespace {

Element elem(long a, long b, long c, long d) {
    return {Scalar::rational(a), Scalar::rational(b), Scalar::rational(c), Scalar::rational(d)};
}

Rational rat(long n) { return Rational(n); }

} // namespace

TEST_CASE("table validation") {
    StructureTable q = quaternion_table();
    CHECK_NOTHROW(validate(q));

    // Break the identity axiom.
    StructureTable broken = q;
    broken.constants[0][1][1] = Scalar::rational(2);
    CHECK_THROWS_AS(validate(broken), InvalidTableError);
    CHECK_THROWS_AS(division_check(broken, 5, 1), InvalidTableError);

    StructureTable misshapen = q;
    misshapen.constants[1][1].pop_back();
    CHECK_THROWS_AS(validate(misshapen), InvalidTableError);
}

TEST_CASE("quaternion table multiplication matches core algebra") {
    const StructureTable table = quaternion_table();
    Sampler s(11);
    for (int n = 0; n < 200; ++n) {
        const Quaternion p = s.rational_quaternion();
        const Quaternion q = s.rational_quaternion();
        const Element ep = {p.w(), p.x(), p.y(), p.z()};
        const Element eq = {q.w(), q.x(), q.y(), q.z()};
        const Quaternion expected = mul_components(p, q);
        CHECK(equal(multiply(table, ep, eq),
                    {expected.w(), expected.x(), expected.y(), expected.z()}));
    }
}

TEST_CASE("det of structure left-mul matrix equals |q|^4") {
    const StructureTable table = quaternion_table();
    Sampler s(17);
    for (int n = 0; n < 100; ++n) {
        const Quaternion q = s.nonzero_rational_quaternion();
        const Element e = {q.w(), q.x(), q.y(), q.z()};
        const Scalar n2 = norm_squared(q);
        CHECK(det(left_mul_matrix(table, e)) == n2 * n2);
    }
}

TEST_CASE("triplet case analysis: seven contradictions") {
    const auto reports = triplet_case_analysis();
    REQUIRE(reports.size() == 7);

    const char* expected_labels[7] = {"ij = +1", "ij = -1", "ij = +i", "ij = -i",
                                      "ij = +j", "ij = -j", "ij = 0"};
    for (int c = 0; c < 7; ++c) {
        CHECK(reports[c].case_label == expected_labels[c]);
        CHECK(reports[c].verdict != StructVerdict::Consistent);
        CHECK(replay(reports[c]));
    }

    // ij = +1: iij gives -j on one side, i on the other, so j = -i.
    REQUIRE(reports[0].triplet.has_value());
    CHECK(reports[0].triplet->left_grouping == std::array<Rational, 3>{rat(0), rat(0), rat(-1)});
    CHECK(reports[0].triplet->right_grouping == std::array<Rational, 3>{rat(0), rat(1), rat(0)});
    CHECK(reports[0].triplet->forced_zero == std::array<Rational, 3>{rat(0), rat(-1), rat(-1)});
    CHECK(reports[0].verdict == StructVerdict::LinearDependence);

    // ij = +i forces j = 1.
    CHECK(reports[2].triplet->forced_zero == std::array<Rational, 3>{rat(1), rat(0), rat(-1)});

    // ij = +j forces i = 1 via the ijj probe.
    CHECK(reports[4].triplet->probe == std::array<int, 3>{1, 2, 2});
    CHECK(reports[4].triplet->forced_zero == std::array<Rational, 3>{rat(-1), rat(1), rat(0)});

    // ij = 0 is the zero-divisor case.
    CHECK(reports[6].verdict == StructVerdict::ZeroDivisor);
    CHECK(reports[6].triplet->forced_zero == std::array<Rational, 3>{rat(0), rat(1), rat(0)});
}

TEST_CASE("replay rejects tampered derivations") {
    auto reports = triplet_case_analysis();
    REQUIRE(replay(reports[0]));

    SUBCASE("wrong stored grouping value") {
        reports[0].triplet->left_grouping[0] = rat(5);
        CHECK_FALSE(replay(reports[0]));
    }
    SUBCASE("wrong forced combination") {
        reports[0].triplet->forced_zero = {rat(0), rat(0), rat(0)};
        CHECK_FALSE(replay(reports[0]));
    }
    SUBCASE("wrong verdict") {
        reports[0].verdict = StructVerdict::ZeroDivisor;
        CHECK_FALSE(replay(reports[0]));
    }
    SUBCASE("no payload at all") {
        ContradictionReport empty;
        empty.verdict = StructVerdict::Consistent;
        CHECK_FALSE(replay(empty));
    }
}

TEST_CASE("general obstruction: associativity forces gamma^2 = -1") {
    const auto report = triplet_general_obstruction();
    CHECK(report.verdict == StructVerdict::NoRealSolution);
    CHECK(replay(report));
    REQUIRE(report.obstruction.has_value());
    const auto& equations = report.obstruction->equations;
    REQUIRE(equations.size() == 3);

    // Hand expansion of i*(alpha + beta*i + gamma*j) = (gamma*alpha - beta)
    // + (alpha + gamma*beta)*i + gamma^2*j, matched against -j.
    const SymPoly alpha = SymPoly::variable(0);
    const SymPoly beta = SymPoly::variable(1);
    const SymPoly gamma = SymPoly::variable(2);
    CHECK(equations[0] == gamma * alpha - beta);
    CHECK(equations[1] == alpha + gamma * beta);
    CHECK(equations[2] == gamma * gamma + SymPoly::constant(Rational(1)));
    CHECK(equations[2].provably_positive());
    CHECK_FALSE(equations[0].provably_positive());

    bool mentions_forced_equation = false;
    for (const auto& step : report.steps)
        if (step.expression == "gamma^2" && step.rewritten == "-1") mentions_forced_equation = true;
    CHECK(mentions_forced_equation);

    SUBCASE("tampered equation fails replay") {
        auto tampered = report;
        tampered.obstruction->equations[2] = gamma * gamma; // constant term lost
        CHECK_FALSE(replay(tampered));
    }
}

TEST_CASE("ji = +k: k^2 = +1 and (1+k)(1-k) = 0") {
    const auto report = ji_equals_k_zero_divisors();
    CHECK(report.verdict == StructVerdict::ZeroDivisor);
    CHECK(replay(report));
    REQUIRE(report.zero_divisor.has_value());
    const auto& p = *report.zero_divisor;

    CHECK(equal(p.k_squared, basis_element(p.table, 0)));
    CHECK(equal(multiply(p.table, p.witness_a, p.witness_b), zero_element(p.table)));
    CHECK(p.det_witness_a.is_zero());
    CHECK(render_element(p.table, p.witness_a) == "1+k");
    CHECK(render_element(p.table, p.witness_b) == "1-k");

    SUBCASE("tampering with the witness fails replay") {
        auto tampered = report;
        tampered.zero_divisor->witness_b = basis_element(tampered.zero_divisor->table, 1);
        CHECK_FALSE(replay(tampered));
    }
}

TEST_CASE("bicomplex table: commutative, coincides with ji=+k table") {
    const StructureTable table = bicomplex_table();
    CHECK_NOTHROW(validate(table));

    const Element k = basis_element(table, 3);
    CHECK(equal(multiply(table, basis_element(table, 1), basis_element(table, 2)), k));
    CHECK(equal(multiply(table, basis_element(table, 2), basis_element(table, 1)), k));
    CHECK(equal(multiply(table, k, k), basis_element(table, 0)));

    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(equal(multiply(table, basis_element(table, a), basis_element(table, b)),
                        multiply(table, basis_element(table, b), basis_element(table, a))));

    const StructureTable jik = ji_plus_k_table();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(equal(table.constants[a][b], jik.constants[a][b]));
}

TEST_CASE("division_check: quaternions certify, ji=+k and bicomplex do not") {
    for (std::uint64_t seed : {1ull, 42ull, 31337ull}) {
        const auto good = division_check(quaternion_table(), 50, seed);
        CHECK(good.certified);
        CHECK_FALSE(good.witness.has_value());

        for (const StructureTable& bad : {ji_plus_k_table(), bicomplex_table()}) {
            const auto res = division_check(bad, 50, seed);
            CHECK_FALSE(res.certified);
            REQUIRE(res.witness.has_value());
            CHECK(render_element(bad, res.witness->first) == "1+k");
            CHECK(render_element(bad, res.witness->second) == "1-k");
            CHECK(is_zero(multiply(bad, res.witness->first, res.witness->second)));
        }
    }
    CHECK_THROWS_AS(division_check(quaternion_table(), 0, 1), InvalidArgumentError);
}

TEST_CASE("kernel_vector finds an annihilator for a singular element") {
    const StructureTable table = bicomplex_table();
    const Element one_plus_k = elem(1, 0, 0, 1);
    const auto b = kernel_vector(left_mul_matrix(table, one_plus_k));
    REQUIRE(b.has_value());
    CHECK_FALSE(is_zero(*b));
    CHECK(is_zero(multiply(table, one_plus_k, *b)));

    // Invertible elements have trivial kernels.
    CHECK_FALSE(kernel_vector(left_mul_matrix(quaternion_table(), one_plus_k)).has_value());
}

TEST_CASE("structure table JSON round trip") {
    const StructureTable table = quaternion_table();
    const auto j = io::table_to_json(table);
    const StructureTable back = io::table_from_json(j);
    CHECK(back.dim == table.dim);
    CHECK(back.basis_names == table.basis_names);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(equal(back.constants[a][b], table.constants[a][b]));

    CHECK_THROWS_AS(io::table_from_json(io::json{{"dim", 2}}), InvalidTableError);
}

TEST_CASE("imported split-complex table: e^2 = 1 has the classic zero divisors") {
    // Hand-written import, not a round trip: dimension 2, basis {1, e}.
    const char* text = R"({
        "dim": 2,
        "basis": ["1", "e"],
        "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]
    })";
    const StructureTable table = io::table_from_json(io::json::parse(text));
    CHECK(table.dim == 2);

    const Element e = basis_element(table, 1);
    CHECK(equal(multiply(table, e, e), basis_element(table, 0)));

    const auto res = division_check(table, 25, 42);
    CHECK_FALSE(res.certified);
    REQUIRE(res.witness.has_value());
    CHECK(render_element(table, res.witness->first) == "1+e");
    CHECK(render_element(table, res.witness->second) == "1-e");
    CHECK(is_zero(multiply(table, res.witness->first, res.witness->second)));
}
