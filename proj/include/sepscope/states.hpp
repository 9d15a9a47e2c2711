#pragma once

#include "sepscope/types.hpp"

#include <cstdint>

namespace sepscope {

/// Trace-1 PSD Hermitian matrix with declared subsystem dimensions.
struct DensityMatrix {
    Cmat mat;
    SubsystemDims dims;

    int total_dim() const { return dims.total(); }
};

/// Validate Hermiticity (1e-12), unit trace (1e-12), PSD (-1e-10).
bool is_valid_density(const DensityMatrix& rho, std::string* why = nullptr);

/// q |Phi+><Phi+| + (1-q) I/d^2 on d x d.
DensityMatrix isotropic(int d, double q);

/// The 3x3 PPT-entangled state built from the five-vector tile UPB.
DensityMatrix tiles_state();

/// (1-p) I/D + p rho.
DensityMatrix white_noise_mix(const DensityMatrix& rho, double p);

/// lambda |w1><w1| + (1-lambda) rho_BE, the rank-5 PPT family on 3 x 3.
DensityMatrix rho1_lambda(double lam);

/// The 9x9 one-parameter PPT-entangled family, normalized by 1/(1+8v).
DensityMatrix horodecki_3x3(double upsilon);

/// y rho_v + (1-y) I/9.
DensityMatrix rho_y(double upsilon, double y);

/// Seeded random fully separable state: convex sum of `terms` products of
/// single-system factors (Haar-random pure or Wishart mixed). The stream is
/// mt19937_64 seeded directly, so samples are reproducible per (dims, terms,
/// seed, pure_factors).
DensityMatrix random_separable(const SubsystemDims& dims, int terms, uint64_t seed,
                               bool pure_factors = false);

/// Minimum eigenvalue of the partial transpose; negative means NPT-entangled.
double ppt_min_eigenvalue(const DensityMatrix& rho);

}  // namespace sepscope
