#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepscope/criteria.hpp"
#include "sepscope/matcore.hpp"

#include <cmath>
#include <random>

using namespace sepscope;

namespace {

const SymmetricPovm& povm82() {
    static SymmetricPovm p = build_povm(3, 8, 2, 0.01, "paper-8-2");
    return p;
}
const SymmetricPovm& povm19() {
    static SymmetricPovm p = build_gsic(3, 0.01);
    return p;
}
const SymmetricPovm& povm43() {
    static SymmetricPovm p = build_mum(3, 0.01);
    return p;
}

}  // namespace

TEST_CASE("probability matrix on the maximally mixed state") {
    DensityMatrix mixed{Cmat::Identity(9, 9) / 9.0, SubsystemDims{3, 3}};
    Rmat p = probability_matrix(mixed, povm82(), povm82());
    REQUIRE(p.rows() == 16);
    REQUIRE(p.cols() == 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) CHECK(p(i, j) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("serial reference and parallel kernel agree") {
    auto rho = white_noise_mix(tiles_state(), 0.7);
    for (const auto* pv : {&povm82(), &povm19(), &povm43()}) {
        Rmat a = probability_matrix(rho, *pv, *pv);
        Rmat b = probability_matrix_serial(rho, *pv, *pv);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("product states give rank-one probability matrices") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        auto rho = random_separable({3, 3}, 1, seed);
        Rmat p = probability_matrix(rho, povm82(), povm82());
        Rvec tau = marginal_vector(partial_trace(rho.mat, rho.dims, {0}), povm82());
        Rvec sigma = marginal_vector(partial_trace(rho.mat, rho.dims, {1}), povm82());
        CHECK((p - tau * sigma.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("per-pair block sums are one") {
    auto rho = isotropic(3, 1.0);
    for (const auto* pv : {&povm82(), &povm43()}) {
        Rmat p = probability_matrix(rho, *pv, *pv);
        int mo = pv->outcomes();
        for (int a = 0; a < (*pv).groups(); ++a)
            for (int b = 0; b < (*pv).groups(); ++b) {
                double s = p.block(a * mo, b * mo, mo, mo).sum();
                CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
            }
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) {
                CHECK(p(i, j) >= -1e-10);
                CHECK(p(i, j) <= 1.0 + 1e-10);
            }
    }
}

TEST_CASE("marginal vector on the maximally mixed local state") {
    Rvec v = marginal_vector(Cmat::Identity(3, 3) / 3.0, povm82());
    for (int i = 0; i < v.size(); ++i) CHECK(v(i) == doctest::Approx(0.5).epsilon(1e-12));

    auto rho = random_separable({3, 3}, 2, 11);
    Rvec w = marginal_vector(partial_trace(rho.mat, rho.dims, {0}), povm82());
    for (int a = 0; a < 8; ++a)
        CHECK(w.segment(2 * a, 2).sum() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("augmented matrix layout and norms") {
    auto rho = white_noise_mix(tiles_state(), 0.9);
    Rmat p = probability_matrix(rho, povm82(), povm82());
    Rvec tau = marginal_vector(partial_trace(rho.mat, rho.dims, {0}), povm82());
    Rvec sigma = marginal_vector(partial_trace(rho.mat, rho.dims, {1}), povm82());

    Rmat m = augmented_matrix(p, tau, sigma, 0.1, 0.05, 2);
    CHECK(m.rows() == 18);
    CHECK(m.cols() == 18);
    CHECK(m(0, 0) == doctest::Approx(0.1 * 0.05));
    CHECK(m(0, 2) == doctest::Approx(0.1 * sigma(0)));
    CHECK(m(2, 1) == doctest::Approx(0.05 * tau(0)));

    // zero border leaves the trace norm unchanged
    Rmat z = augmented_matrix(p, tau, sigma, 0.0, 0.0, 3);
    CHECK(trace_norm(z) == doctest::Approx(trace_norm(p)).epsilon(1e-10));

    // rank-one case factorizes exactly
    auto prod = random_separable({3, 3}, 1, 5);
    Rmat pp = probability_matrix(prod, povm82(), povm82());
    Rvec t2 = marginal_vector(partial_trace(prod.mat, prod.dims, {0}), povm82());
    Rvec s2 = marginal_vector(partial_trace(prod.mat, prod.dims, {1}), povm82());
    Rmat one = augmented_matrix(t2 * s2.transpose(), t2, s2, 1.0, 1.0, 1);
    double expect = std::sqrt((1.0 + t2.squaredNorm()) * (1.0 + s2.squaredNorm()));
    CHECK(trace_norm(one) == doctest::Approx(expect).epsilon(1e-10));

    CHECK_THROWS_AS(augmented_matrix(p, tau, sigma, 0.1, 0.1, 0), ShapeMismatch);
    CHECK_THROWS_AS(augmented_matrix(p, tau.head(3).eval(), sigma, 0.1, 0.1, 1),
                    ShapeMismatch);
}

TEST_CASE("bound arithmetic") {
    double x = efficiency_x(3, 2, 0.01);
    double f = side_factor(3, 2, x);
    CHECK(f == doctest::Approx(4.0007771236).epsilon(1e-9));
    CHECK(theorem1_bound(3, 2, x, 3, 2, x, 0.0, 0.0, 1) == doctest::Approx(f).epsilon(1e-12));
    double expect = std::sqrt((2 * 0.01 + f) * (2 * 0.0025 + f));
    CHECK(theorem1_bound(3, 2, x, 3, 2, x, 0.1, 0.05, 2) ==
          doctest::Approx(expect).epsilon(1e-12));

    CHECK(side_factor_gsic(3, gsic_a(3, 0.01)) ==
          doctest::Approx(0.1207111111).epsilon(1e-9));
    CHECK(side_factor_mum(mum_kappa(3, 0.01)) ==
          doctest::Approx(1.3348261537).epsilon(1e-9));
}

TEST_CASE("specialization identities across dimensions") {
    for (int d : {2, 3, 4}) {
        for (double t : {0.001, 0.004}) {
            double xg = efficiency_x(d, d * d, t);
            CHECK(side_factor(d, d * d, xg) ==
                  doctest::Approx(side_factor_gsic(d, gsic_a(d, t))).epsilon(1e-12));
            double xm = efficiency_x(d, d, t);
            CHECK(side_factor(d, d, xm) ==
                  doctest::Approx(side_factor_mum(mum_kappa(d, t))).epsilon(1e-12));
        }
    }
}

TEST_CASE("probability purity and its bound") {
    CHECK(probability_purity(Cmat::Identity(3, 3) / 3.0, povm82()) ==
          doctest::Approx(4.0).epsilon(1e-12));
    double f82 = side_factor(3, 2, povm82().x);
    CHECK(4.0 <= f82);

    std::mt19937_64 rng(99);
    std::normal_distribution<double> gauss;
    for (int rep = 0; rep < 200; ++rep) {
        Cvec psi(3);
        for (int i = 0; i < 3; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        psi /= psi.norm();
        Cmat rho = psi * psi.adjoint();
        CHECK(probability_purity(rho, povm82()) <= f82 + 1e-10);
        CHECK(probability_purity(rho, povm43()) <=
              side_factor_mum(mum_kappa(3, 0.01)) + 1e-10);
        CHECK(probability_purity(rho, povm19()) <=
              side_factor_gsic(3, gsic_a(3, 0.01)) + 1e-10);
    }
}

TEST_CASE("theorem 1 never flags separable inputs") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        auto rho = random_separable({3, 3}, 4, seed);
        double mu = 0.02 * (seed % 7), nu = 0.015 * (seed % 5);
        int l = 1 + static_cast<int>(seed % 3);
        auto v = evaluate_theorem1(rho, povm82(), povm82(), mu, nu, l);
        CHECK(v.margin <= 1e-9);
        CHECK(!v.detected);
    }
    auto mixed = isotropic(3, 0.0);
    CHECK(evaluate_theorem1(mixed, povm82(), povm82(), 2.0, 2.0, 10).margin <= 1e-9);
    CHECK(evaluate_p_only(mixed, povm82(), povm82()).margin <= 1e-9);
}

TEST_CASE("realignment-based baselines") {
    for (uint64_t seed : {3u, 7u, 12u}) {
        auto rho = random_separable({3, 3}, 3, seed);
        CHECK(shi_q_matrix(rho, 1.0, 1.0).margin <= 1e-9);
        CHECK(sun_q_matrix(rho, 2.0, 2.0, 10).margin <= 1e-9);
        CHECK(realignment_criterion(rho).lhs <= 1.0 + 1e-9);
        // the single-border case is the l=1 instance
        auto a = shi_q_matrix(rho, 1.3, 0.8);
        auto b = sun_q_matrix(rho, 1.3, 0.8, 1);
        CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-12));
        CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-12));
    }
    // realignment flags the maximally entangled state
    CHECK(realignment_criterion(isotropic(3, 1.0)).detected);
}

TEST_CASE("bipartition evaluation reduces to the bipartite criterion") {
    auto rho = white_noise_mix(tiles_state(), 0.95);
    std::vector<SymmetricPovm> povms{povm82(), povm82()};
    auto a = evaluate_bipartition(rho, {0}, povms, 0.1, 0.05, 2);
    auto b = evaluate_theorem1(rho, povm82(), povm82(), 0.1, 0.05, 2);
    CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-10));
    CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-12));
}

TEST_CASE("tripartite separable states satisfy all bipartition inequalities") {
    auto pauli = build_povm(2, 3, 2, 0.1, "sequential");
    std::vector<SymmetricPovm> povms{pauli, pauli, pauli};
    for (uint64_t seed = 0; seed < 50; ++seed) {
        auto rho = random_separable({2, 2, 2}, 3, seed);
        for (int q = 0; q < 3; ++q) {
            auto v = evaluate_bipartition(rho, {q}, povms, 0.05, 0.05, 2);
            CHECK(v.margin <= 1e-9);
        }
    }
}

TEST_CASE("a GHZ state violates a bipartition inequality") {
    Cvec ghz = Cvec::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    DensityMatrix rho{ghz * ghz.adjoint(), SubsystemDims{2, 2, 2}};
    auto pauli = build_povm(2, 3, 2, 0.1, "sequential");
    std::vector<SymmetricPovm> povms{pauli, pauli, pauli};
    bool any = false;
    for (int q = 0; q < 3; ++q)
        any |= evaluate_bipartition(rho, {q}, povms, 0.0, 0.0, 1).detected;
    CHECK(any);
}

TEST_CASE("shape errors propagate") {
    DensityMatrix wrong{Cmat::Identity(4, 4) / 4.0, SubsystemDims{2, 2}};
    CHECK_THROWS_AS(probability_matrix(wrong, povm82(), povm82()), DimensionMismatch);
    CHECK_THROWS_AS(marginal_vector(Cmat::Identity(2, 2) / 2.0, povm82()),
                    DimensionMismatch);
    std::vector<SymmetricPovm> povms{povm82(), povm82()};
    CHECK_THROWS_AS(evaluate_bipartition(wrong, {5}, povms, 0, 0, 1), InvalidPartition);
}
