#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepscope/matcore.hpp"
#include "sepscope/povm.hpp"

#include <cmath>

using namespace sepscope;

TEST_CASE("M=2 interpolation operators collapse to +-(1+sqrt(2)) G") {
    auto basis = group_for_nm(3, 8, 2, "paper-8-2");
    auto h = build_h_operators(basis);
    const double c = 1.0 + std::sqrt(2.0);
    for (int a = 0; a < 8; ++a) {
        const Cmat& g = basis.ops[static_cast<size_t>(basis.grouping[a][0])];
        CHECK((h[a][0] + c * g).norm() < 1e-12);
        CHECK((h[a][1] - c * g).norm() < 1e-12);
    }
}

TEST_CASE("interpolation operators telescope to zero per group") {
    for (auto [scheme, n, m] : {std::tuple<const char*, int, int>{"paper-8-2", 8, 2},
                                {"paper-1-9", 1, 9},
                                {"paper-4-3", 4, 3}}) {
        auto h = build_h_operators(group_for_nm(3, n, m, scheme));
        for (const auto& row : h) {
            Cmat sum = Cmat::Zero(3, 3);
            for (const auto& op : row) sum += op;
            CHECK(sum.norm() < 1e-12);
        }
    }
}

TEST_CASE("admissible t intervals for the d=3 fixtures") {
    auto r82 = t_range(group_for_nm(3, 8, 2, "paper-8-2"));
    CHECK(r82.t_min == doctest::Approx(-0.2536529680886441).epsilon(1e-10));
    CHECK(r82.t_max == doctest::Approx(0.2536529680886441).epsilon(1e-10));

    auto r19 = t_range(group_for_nm(3, 1, 9, "paper-1-9"));
    CHECK(r19.t_min == doctest::Approx(-0.0121604446).epsilon(1e-7));
    CHECK(r19.t_max == doctest::Approx(0.0129529324).epsilon(1e-7));

    auto r43 = t_range(group_for_nm(3, 4, 3, "paper-4-3"));
    CHECK(r43.t_min == doctest::Approx(-0.1093897997).epsilon(1e-7));
    CHECK(r43.t_max == doctest::Approx(0.1220084679).epsilon(1e-7));
}

TEST_CASE("efficiency parameters") {
    CHECK(efficiency_x(3, 2, 0.01) == doctest::Approx(0.7505828427).epsilon(1e-9));
    CHECK(efficiency_x(3, 2, 0.0) == doctest::Approx(0.75));
    CHECK(gsic_a(3, 0.01) ==
          doctest::Approx(1.0 / 27.0 + 128.0 * 1e-4).epsilon(1e-12));
    CHECK(mum_kappa(3, 0.01) ==
          doctest::Approx(1.0 / 3.0 + 2e-4 * std::pow(1.0 + std::sqrt(3.0), 2))
              .epsilon(1e-12));
    // at M = d^2 the purity collapses to the GSIC parameter, x = a
    for (double t : {0.001, 0.005, 0.01}) {
        CHECK(efficiency_x(3, 9, t) == doctest::Approx(gsic_a(3, t)).epsilon(1e-12));
        CHECK(efficiency_x(3, 3, t) == doctest::Approx(mum_kappa(3, t)).epsilon(1e-12));
    }
}

TEST_CASE("x strictly increases in |t|") {
    double prev = efficiency_x(3, 2, 0.0);
    for (int i = 1; i <= 20; ++i) {
        double x = efficiency_x(3, 2, 0.25 * i / 20.0);
        CHECK(x > prev);
        prev = x;
    }
}

TEST_CASE("construction and validation of the three fixtures") {
    auto p82 = build_povm(3, 8, 2, 0.01, "paper-8-2");
    auto p19 = build_gsic(3, 0.01);
    auto p43 = build_mum(3, 0.01);
    for (const auto* p : {&p82, &p19, &p43}) {
        auto report = validate_povm(*p);
        CHECK(report.pass);
        for (const auto& e : report.entries) CHECK(e.residual <= e.tolerance);
        // completeness exactly
        for (const auto& row : p->operators) {
            Cmat sum = Cmat::Zero(3, 3);
            for (const auto& e : row) sum += e;
            CHECK((sum - Cmat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    CHECK(p82.operators[0][0].trace().real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(p82.x == doctest::Approx(0.7505828427).epsilon(1e-9));
    CHECK(p19.kind == PovmKind::gsic);
    CHECK(p43.kind == PovmKind::mum);
}

TEST_CASE("measured purity matches the closed form") {
    for (double t : {0.003, 0.01, 0.05}) {
        auto p = build_povm(3, 8, 2, t, "paper-8-2");
        double measured = (p.operators[0][0] * p.operators[0][0]).trace().real();
        CHECK(measured == doctest::Approx(efficiency_x(3, 2, t)).epsilon(1e-10));
    }
}

TEST_CASE("special-case builders agree with the generic path") {
    auto generic = build_povm(3, 1, 9, 0.01, "paper-1-9");
    auto gsic = build_gsic(3, 0.01);
    for (int k = 0; k < 9; ++k)
        CHECK((generic.flat(k) - gsic.flat(k)).cwiseAbs().maxCoeff() < 1e-12);

    auto generic_mum = build_povm(3, 4, 3, 0.01, "paper-4-3");
    auto mum = build_mum(3, 0.01);
    for (int k = 0; k < 12; ++k)
        CHECK((generic_mum.flat(k) - mum.flat(k)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("t outside the admissible interval is rejected") {
    CHECK_THROWS_AS(build_povm(3, 8, 2, 0.26, "paper-8-2"), TOutOfRange);
    CHECK_THROWS_AS(build_gsic(3, 0.02), TOutOfRange);
    CHECK_THROWS_AS(build_mum(3, 0.2), TOutOfRange);
}

TEST_CASE("t=0 builds but is tagged degenerate") {
    auto p = build_povm(3, 8, 2, 0.0, "paper-8-2");
    CHECK(p.degenerate);
    CHECK(validate_povm(p).pass);
    CHECK(!build_povm(3, 8, 2, 0.01, "paper-8-2").degenerate);
}

TEST_CASE("PSD holds at the interval boundary") {
    auto range = t_range(group_for_nm(3, 8, 2, "paper-8-2"));
    auto p = build_povm(3, 8, 2, range.t_max, "paper-8-2");
    double min_eig = 0.0;
    for (int i = 0; i < p.flat_size(); ++i)
        min_eig = std::min(min_eig, hermitian_eigenvalues(p.flat(i)).front());
    CHECK(min_eig >= -1e-10);
}

TEST_CASE("corrupted operator fails validation") {
    auto p = build_povm(3, 8, 2, 0.01, "paper-8-2");
    p.operators[2][1](0, 0) += 1e-3;
    auto report = validate_povm(p);
    CHECK(!report.pass);
    bool some_relation_flagged = false;
    for (const auto& e : report.entries) some_relation_flagged |= !e.pass;
    CHECK(some_relation_flagged);
}
