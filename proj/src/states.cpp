#include "sepscope/states.hpp"

#include "sepscope/matcore.hpp"

#include <cmath>
#include <random>

namespace sepscope {

bool is_valid_density(const DensityMatrix& rho, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (rho.mat.rows() != rho.mat.cols()) return fail("not square");
    if (rho.mat.rows() != rho.dims.total()) return fail("dims product does not match matrix size");
    if (!is_hermitian(rho.mat)) return fail("not Hermitian within 1e-12");
    if (std::abs(rho.mat.trace().real() - 1.0) > 1e-12) return fail("trace != 1 within 1e-12");
    auto ev = hermitian_eigenvalues(rho.mat);
    if (ev.front() < kPsdTol) return fail("negative eigenvalue beyond -1e-10");
    return true;
}

DensityMatrix isotropic(int d, double q) {
    if (d < 2) throw InvalidDimension("isotropic: d must be >= 2");
    if (q < 0.0 || q > 1.0) throw ParamOutOfRange("isotropic: q must be in [0,1]");
    Cvec phi = Cvec::Zero(d * d);
    for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    Cmat m = q * (phi * phi.adjoint()) +
             (1.0 - q) / (d * d) * Cmat::Identity(d * d, d * d);
    return {m, SubsystemDims{d, d}};
}

namespace {

Cvec ket(int i) {
    Cvec v = Cvec::Zero(3);
    v(i) = 1.0;
    return v;
}

Cvec tensor(const Cvec& a, const Cvec& b) {
    Cvec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
    return out;
}

}  // namespace

DensityMatrix tiles_state() {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const Cvec plus = r3 * (ket(0) + ket(1) + ket(2));
    const std::vector<Cvec> upb = {
        tensor(ket(0), r2 * (ket(0) - ket(1))),
        tensor(r2 * (ket(0) - ket(1)), ket(2)),
        tensor(ket(2), r2 * (ket(1) - ket(2))),
        tensor(r2 * (ket(1) - ket(2)), ket(0)),
        tensor(plus, plus),
    };
    Cmat m = Cmat::Identity(9, 9);
    for (const auto& v : upb) m -= v * v.adjoint();
    return {m / 4.0, SubsystemDims{3, 3}};
}

DensityMatrix white_noise_mix(const DensityMatrix& rho, double p) {
    if (p < 0.0 || p > 1.0) throw ParamOutOfRange("white_noise_mix: p must be in [0,1]");
    const int D = rho.total_dim();
    return {(1.0 - p) / D * Cmat::Identity(D, D) + p * rho.mat, rho.dims};
}

DensityMatrix rho1_lambda(double lam) {
    if (lam < 0.0 || lam > 1.0) throw ParamOutOfRange("rho1_lambda: lambda must be in [0,1]");
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const Cvec plus = r3 * (ket(0) + ket(1) + ket(2));
    const std::vector<Cvec> omega = {
        tensor(ket(2), r2 * (ket(1) - ket(2))),
        tensor(ket(0), r2 * (ket(0) - ket(1))),
        tensor(r2 * (ket(0) - ket(1)), ket(2)),
        tensor(r2 * (ket(1) - ket(2)), ket(0)),
        tensor(plus, plus),
    };
    Cmat be = Cmat::Identity(9, 9);
    for (const auto& v : omega) be -= v * v.adjoint();
    be /= 4.0;
    Cmat m = lam * (omega[0] * omega[0].adjoint()) + (1.0 - lam) * be;
    return {m, SubsystemDims{3, 3}};
}

DensityMatrix horodecki_3x3(double upsilon) {
    if (upsilon <= 0.0 || upsilon >= 1.0)
        throw ParamOutOfRange("horodecki_3x3: upsilon must be in (0,1)");
    Cmat m = Cmat::Zero(9, 9);
    for (int i = 0; i < 9; ++i) m(i, i) = upsilon;
    m(6, 6) = (1.0 + upsilon) / 2.0;
    m(8, 8) = (1.0 + upsilon) / 2.0;
    m(0, 4) = m(4, 0) = upsilon;
    m(0, 8) = m(8, 0) = upsilon;
    m(4, 8) = m(8, 4) = upsilon;
    m(6, 8) = m(8, 6) = std::sqrt(1.0 - upsilon * upsilon) / 2.0;
    return {m / (1.0 + 8.0 * upsilon), SubsystemDims{3, 3}};
}

DensityMatrix rho_y(double upsilon, double y) {
    if (y < 0.0 || y > 1.0) throw ParamOutOfRange("rho_y: y must be in [0,1]");
    auto rv = horodecki_3x3(upsilon);
    return {y * rv.mat + (1.0 - y) / 9.0 * Cmat::Identity(9, 9), rv.dims};
}

namespace {

Cmat random_factor(int d, std::mt19937_64& rng, bool pure) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (pure) {
        Cvec psi(d);
        for (int i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        psi /= psi.norm();
        return psi * psi.adjoint();
    }
    Cmat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Cmat w = g * g.adjoint();
    return w / w.trace().real();
}

}  // namespace

DensityMatrix random_separable(const SubsystemDims& dims, int terms, uint64_t seed,
                               bool pure_factors) {
    if (terms < 1) throw ParamOutOfRange("random_separable: terms must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    std::vector<double> weights(static_cast<size_t>(terms));
    double total = 0.0;
    for (auto& w : weights) {
        w = uni(rng) + 1e-6;
        total += w;
    }

    const int D = dims.total();
    Cmat m = Cmat::Zero(D, D);
    for (int i = 0; i < terms; ++i) {
        Cmat prod = random_factor(dims[0], rng, pure_factors);
        for (int s = 1; s < dims.size(); ++s) prod = kron(prod, random_factor(dims[s], rng, pure_factors));
        m += weights[static_cast<size_t>(i)] / total * prod;
    }
    // symmetrize away accumulation noise
    m = 0.5 * (m + m.adjoint().eval());
    return {m, dims};
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    if (rho.dims.size() != 2)
        throw DimensionMismatch("ppt_min_eigenvalue: expects bipartite dims");
    auto ev = hermitian_eigenvalues(partial_transpose(rho.mat, rho.dims, 1));
    return ev.front();
}

}  // namespace sepscope
