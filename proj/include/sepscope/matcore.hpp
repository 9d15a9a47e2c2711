#pragma once

#include "sepscope/types.hpp"

namespace sepscope {

constexpr double kHermTol = 1e-12;
constexpr double kPsdTol = -1e-10;

/// All eigenvalues of a Hermitian matrix, ascending.
/// Throws NonSquare / NonHermitian (entrywise tolerance 1e-12).
std::vector<double> hermitian_eigenvalues(const Cmat& m);

/// Sum of singular values. Empty matrix gives 0.
double trace_norm(const Cmat& m);
double trace_norm(const Rmat& m);

/// Kronecker product with composite index (i_A, i_B) -> i_A * d_B + i_B.
Cmat kron(const Cmat& a, const Cmat& b);

/// Reduced matrix over the kept subsystems (original order), trace preserved.
Cmat partial_trace(const Cmat& m, const SubsystemDims& dims, const std::vector<int>& keep);

/// Transposition on one tensor factor of a bipartite-compatible space.
Cmat partial_transpose(const Cmat& m, const SubsystemDims& dims, int which);

/// Column-stacking vectorization, length rows*cols.
Cvec vec(const Cmat& m);

/// Realignment R with the convention R(a (x) b) = vec(a) vec(b)^T.
/// Result is dA^2 x dB^2.
Cmat realign(const Cmat& m, const SubsystemDims& dims);

bool is_hermitian(const Cmat& m, double tol = kHermTol);

}  // namespace sepscope
