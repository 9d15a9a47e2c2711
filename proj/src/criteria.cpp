#include "sepscope/criteria.hpp"

#include "sepscope/matcore.hpp"

#include <algorithm>
#include <cmath>

namespace sepscope {

CriterionVerdict make_verdict(const std::string& criterion, double lhs, double rhs) {
    CriterionVerdict v;
    v.criterion = criterion;
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = lhs - rhs;
    v.detected = v.margin > kDetectTol;
    return v;
}

namespace {

double joint_prob(const Cmat& rho, const Cmat& ea, const Cmat& eb) {
    const int da = static_cast<int>(ea.rows());
    const int db = static_cast<int>(eb.rows());
    // tr[(E_a (x) E_b) rho] without forming the Kronecker product
    Complex acc = 0.0;
    for (int ia = 0; ia < da; ++ia)
        for (int ka = 0; ka < da; ++ka) {
            if (ea(ka, ia) == Complex(0.0)) continue;
            Complex inner = 0.0;
            for (int ib = 0; ib < db; ++ib)
                for (int kb = 0; kb < db; ++kb)
                    inner += eb(kb, ib) * rho(ia * db + ib, ka * db + kb);
            acc += ea(ka, ia) * inner;
        }
    return acc.real();
}

void check_bipartite(const DensityMatrix& rho, const SymmetricPovm& a,
                     const SymmetricPovm& b) {
    if (rho.dims.size() != 2 || rho.dims[0] != a.dim() || rho.dims[1] != b.dim())
        throw DimensionMismatch("probability_matrix: state dims do not match POVMs");
}

}  // namespace

Rmat probability_matrix_serial(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                               const SymmetricPovm& povm_b) {
    check_bipartite(rho, povm_a, povm_b);
    const int nr = povm_a.flat_size(), nc = povm_b.flat_size();
    Rmat p(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            p(i, j) = joint_prob(rho.mat, povm_a.flat(i), povm_b.flat(j));
    return p;
}

Rmat probability_matrix(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                        const SymmetricPovm& povm_b) {
    check_bipartite(rho, povm_a, povm_b);
    const int nr = povm_a.flat_size(), nc = povm_b.flat_size();
    Rmat p(nr, nc);
#ifdef SEPSCOPE_HAVE_OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            p(i, j) = joint_prob(rho.mat, povm_a.flat(i), povm_b.flat(j));
    return p;
}

Rvec marginal_vector(const Cmat& rho_reduced, const SymmetricPovm& povm) {
    if (rho_reduced.rows() != povm.dim())
        throw DimensionMismatch("marginal_vector: state dim does not match POVM");
    Rvec v(povm.flat_size());
    for (int i = 0; i < povm.flat_size(); ++i)
        v(i) = (povm.flat(i) * rho_reduced).trace().real();
    return v;
}

Rmat augmented_matrix(const Rmat& p, const Rvec& tau, const Rvec& sigma, double mu,
                      double nu, int l) {
    if (l < 1) throw ShapeMismatch("augmented_matrix: l must be >= 1");
    if (tau.size() != p.rows() || sigma.size() != p.cols())
        throw ShapeMismatch("augmented_matrix: marginal lengths do not match P");
    Rmat m(l + p.rows(), l + p.cols());
    m.topLeftCorner(l, l).setConstant(mu * nu);
    for (int i = 0; i < l; ++i) {
        m.row(i).tail(p.cols()) = mu * sigma.transpose();
        m.col(i).tail(p.rows()) = nu * tau;
    }
    m.bottomRightCorner(p.rows(), p.cols()) = p;
    return m;
}

double side_factor(int d, int m_outcomes, double x) {
    return (d - 1.0) * (d * d + static_cast<double>(m_outcomes) * m_outcomes * x) /
           (d * static_cast<double>(m_outcomes) * (m_outcomes - 1.0));
}

double side_factor_gsic(int d, double a) { return (a * d * d + 1.0) / (d * (d + 1.0)); }

double side_factor_mum(double kappa) { return 1.0 + kappa; }

double side_factor_for(const SymmetricPovm& povm) {
    switch (povm.kind) {
        case PovmKind::gsic:
            return side_factor_gsic(povm.dim(), gsic_a(povm.dim(), povm.config.t));
        case PovmKind::mum:
            return side_factor_mum(mum_kappa(povm.dim(), povm.config.t));
        default:
            return side_factor(povm.dim(), povm.outcomes(), povm.x);
    }
}

double bound_from_factors(double f_a, double f_b, double mu, double nu, int l) {
    return std::sqrt((l * mu * mu + f_a) * (l * nu * nu + f_b));
}

double theorem1_bound(int d_a, int m_a, double x_a, int d_b, int m_b, double x_b,
                      double mu, double nu, int l) {
    return bound_from_factors(side_factor(d_a, m_a, x_a), side_factor(d_b, m_b, x_b),
                              mu, nu, l);
}

CriterionVerdict evaluate_theorem1(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                                   const SymmetricPovm& povm_b, double mu, double nu,
                                   int l) {
    Rmat p = probability_matrix(rho, povm_a, povm_b);
    Rvec tau = marginal_vector(partial_trace(rho.mat, rho.dims, {0}), povm_a);
    Rvec sigma = marginal_vector(partial_trace(rho.mat, rho.dims, {1}), povm_b);
    double lhs = trace_norm(augmented_matrix(p, tau, sigma, mu, nu, l));
    double rhs = bound_from_factors(side_factor_for(povm_a), side_factor_for(povm_b),
                                    mu, nu, l);
    return make_verdict("thm1", lhs, rhs);
}

CriterionVerdict evaluate_p_only(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                                 const SymmetricPovm& povm_b) {
    auto v = evaluate_theorem1(rho, povm_a, povm_b, 0.0, 0.0, 1);
    v.criterion = "p-only";
    return v;
}

double probability_purity(const Cmat& rho_single, const SymmetricPovm& povm) {
    if (rho_single.rows() != povm.dim())
        throw DimensionMismatch("probability_purity: state dim does not match POVM");
    double s = 0.0;
    for (int i = 0; i < povm.flat_size(); ++i) {
        double pr = (povm.flat(i) * rho_single).trace().real();
        s += pr * pr;
    }
    return s;
}

namespace {

CriterionVerdict realignment_bordered(const std::string& id, const DensityMatrix& rho,
                                      double alpha, double beta, int l) {
    if (rho.dims.size() != 2)
        throw DimensionMismatch(id + ": expects bipartite dims");
    if (l < 1) throw ShapeMismatch(id + ": l must be >= 1");
    Cvec va = vec(partial_trace(rho.mat, rho.dims, {0}));
    Cvec vb = vec(partial_trace(rho.mat, rho.dims, {1}));
    Cmat r = realign(rho.mat, rho.dims);
    Cmat m(l + r.rows(), l + r.cols());
    m.topLeftCorner(l, l).setConstant(alpha * beta);
    for (int i = 0; i < l; ++i) {
        m.row(i).tail(r.cols()) = beta * vb.transpose();
        m.col(i).tail(r.rows()) = alpha * va;
    }
    m.bottomRightCorner(r.rows(), r.cols()) = r;
    double rhs = std::sqrt((l * alpha * alpha + 1.0) * (l * beta * beta + 1.0));
    return make_verdict(id, trace_norm(m), rhs);
}

}  // namespace

CriterionVerdict shi_q_matrix(const DensityMatrix& rho, double alpha, double beta) {
    return realignment_bordered("shi", rho, alpha, beta, 1);
}

CriterionVerdict sun_q_matrix(const DensityMatrix& rho, double alpha, double beta, int l) {
    return realignment_bordered("sun", rho, alpha, beta, l);
}

CriterionVerdict realignment_criterion(const DensityMatrix& rho) {
    if (rho.dims.size() != 2)
        throw DimensionMismatch("realignment_criterion: expects bipartite dims");
    return make_verdict("realign", trace_norm(realign(rho.mat, rho.dims)), 1.0);
}

CriterionVerdict evaluate_bipartition(const DensityMatrix& rho,
                                      const Bipartition& part,
                                      const std::vector<SymmetricPovm>& povms,
                                      double mu, double nu, int l) {
    const int n_sub = rho.dims.size();
    if (static_cast<int>(povms.size()) != n_sub)
        throw DimensionMismatch("evaluate_bipartition: one POVM per subsystem required");
    const int q = part.singled_out;
    if (q < 0 || q >= n_sub) throw InvalidPartition("evaluate_bipartition: bad index");
    if (n_sub < 2) throw InvalidPartition("evaluate_bipartition: need >= 2 subsystems");
    for (int s = 0; s < n_sub; ++s)
        if (povms[static_cast<size_t>(s)].dim() != rho.dims[s])
            throw DimensionMismatch("evaluate_bipartition: POVM dim mismatch");

    std::vector<int> rest;
    for (int s = 0; s < n_sub; ++s)
        if (s != q) rest.push_back(s);

    int n_cols = 1;
    for (int s : rest) n_cols *= povms[static_cast<size_t>(s)].flat_size();
    const int n_rows = povms[static_cast<size_t>(q)].flat_size();

    // probability matrix over the bipartition: full product operators traced
    // against rho, with each factor on its own tensor slot
    Rmat p(n_rows, n_cols);
    for (int c = 0; c < n_cols; ++c) {
        // decode the lexicographic column index into per-subsystem outcomes
        std::vector<int> idx(rest.size());
        int rem = c;
        for (int r = static_cast<int>(rest.size()) - 1; r >= 0; --r) {
            int sz = povms[static_cast<size_t>(rest[static_cast<size_t>(r)])].flat_size();
            idx[static_cast<size_t>(r)] = rem % sz;
            rem /= sz;
        }
        for (int i = 0; i < n_rows; ++i) {
            Cmat op = Cmat::Identity(1, 1);
            for (int s = 0; s < n_sub; ++s) {
                if (s == q) {
                    op = kron(op, povms[static_cast<size_t>(s)].flat(i));
                } else {
                    int r = static_cast<int>(std::find(rest.begin(), rest.end(), s) -
                                             rest.begin());
                    op = kron(op, povms[static_cast<size_t>(s)].flat(
                                      idx[static_cast<size_t>(r)]));
                }
            }
            p(i, c) = (op * rho.mat).trace().real();
        }
    }

    Rvec tau = marginal_vector(partial_trace(rho.mat, rho.dims, {q}),
                               povms[static_cast<size_t>(q)]);

    Rvec sigma(n_cols);
    Cmat rho_rest = partial_trace(rho.mat, rho.dims, rest);
    std::vector<int> rest_dims_v;
    for (int s : rest) rest_dims_v.push_back(rho.dims[s]);
    for (int c = 0; c < n_cols; ++c) {
        std::vector<int> idx(rest.size());
        int rem = c;
        for (int r = static_cast<int>(rest.size()) - 1; r >= 0; --r) {
            int sz = povms[static_cast<size_t>(rest[static_cast<size_t>(r)])].flat_size();
            idx[static_cast<size_t>(r)] = rem % sz;
            rem /= sz;
        }
        Cmat op = Cmat::Identity(1, 1);
        for (size_t r = 0; r < rest.size(); ++r)
            op = kron(op, povms[static_cast<size_t>(rest[r])].flat(idx[r]));
        sigma(c) = (op * rho_rest).trace().real();
    }

    double f_q = side_factor_for(povms[static_cast<size_t>(q)]);
    double f_rest = 1.0;
    for (int s : rest) f_rest *= side_factor_for(povms[static_cast<size_t>(s)]);

    double lhs = trace_norm(augmented_matrix(p, tau, sigma, mu, nu, l));
    double rhs = bound_from_factors(f_q, f_rest, mu, nu, l);
    return make_verdict("bipartition", lhs, rhs);
}

}  // namespace sepscope
