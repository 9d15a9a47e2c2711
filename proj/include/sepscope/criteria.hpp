#pragma once

#include "sepscope/povm.hpp"
#include "sepscope/states.hpp"

namespace sepscope {

/// Margins below this are treated as numerical noise, not detections.
constexpr double kDetectTol = 1e-9;

struct CriterionVerdict {
    std::string criterion;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool detected = false;
};

CriterionVerdict make_verdict(const std::string& criterion, double lhs, double rhs);

/// (N_A M_A) x (N_B M_B) matrix of joint outcome probabilities
/// tr[(E_{alpha,k} (x) E_{beta,j}) rho], rows/cols in flat group-major order.
Rmat probability_matrix(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                        const SymmetricPovm& povm_b);
/// Single-threaded reference for the same computation.
Rmat probability_matrix_serial(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                               const SymmetricPovm& povm_b);

/// tr(E_{alpha,k} rho_x) in flat order; rho_x is a single-system state.
Rvec marginal_vector(const Cmat& rho_reduced, const SymmetricPovm& povm);

/// Block matrix [mu*nu*J_lxl, mu*omega_l(sigma)^T; nu*omega_l(tau), P].
Rmat augmented_matrix(const Rmat& p, const Rvec& tau, const Rvec& sigma, double mu,
                      double nu, int l);

/// Per-side factor (d-1)(d^2 + M^2 x) / (d M (M-1)).
double side_factor(int d, int m_outcomes, double x);
/// GSIC specialization (a d^2 + 1) / (d (d+1)).
double side_factor_gsic(int d, double a);
/// MUM specialization 1 + kappa.
double side_factor_mum(double kappa);
/// Factor appropriate to the POVM kind tag.
double side_factor_for(const SymmetricPovm& povm);

/// sqrt((l mu^2 + f_A)(l nu^2 + f_B)).
double bound_from_factors(double f_a, double f_b, double mu, double nu, int l);
double theorem1_bound(int d_a, int m_a, double x_a, int d_b, int m_b, double x_b,
                      double mu, double nu, int l);

CriterionVerdict evaluate_theorem1(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                                   const SymmetricPovm& povm_b, double mu, double nu,
                                   int l);
/// mu = nu = 0 special case: ||P(rho)||_tr against the product of factors.
CriterionVerdict evaluate_p_only(const DensityMatrix& rho, const SymmetricPovm& povm_a,
                                 const SymmetricPovm& povm_b);

/// sum_{alpha,k} tr(rho E_{alpha,k})^2 for a single-system state.
double probability_purity(const Cmat& rho_single, const SymmetricPovm& povm);

/// Realignment-based matrix [alpha*beta, beta*vec(rho_B)^T; alpha*vec(rho_A), R(rho)]
/// against sqrt((alpha^2+1)(beta^2+1)).
CriterionVerdict shi_q_matrix(const DensityMatrix& rho, double alpha, double beta);
/// l-fold bordered variant against sqrt((l alpha^2+1)(l beta^2+1)).
CriterionVerdict sun_q_matrix(const DensityMatrix& rho, double alpha, double beta, int l);

/// Plain realignment criterion ||R(rho)||_tr <= 1.
CriterionVerdict realignment_criterion(const DensityMatrix& rho);

struct Bipartition {
    int singled_out = 0;  // subsystem index q, 0-based
};

/// Full-separability test across the bipartition q | rest. Rows are the
/// singled-out subsystem's outcomes, columns the lexicographic product of the
/// remainder's outcome tuples. One POVM per subsystem, in subsystem order.
CriterionVerdict evaluate_bipartition(const DensityMatrix& rho,
                                      const Bipartition& part,
                                      const std::vector<SymmetricPovm>& povms,
                                      double mu, double nu, int l);

}  // namespace sepscope
