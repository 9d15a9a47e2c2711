#pragma once

#include "sepscope/types.hpp"

namespace sepscope {

/// Traceless orthonormal Hermitian operator basis, partitioned into the
/// N groups of M-1 operators that seed a symmetric (N,M)-POVM.
struct HermitianOperatorBasis {
    int dim = 0;
    std::vector<Cmat> ops;                    // d^2 - 1 operators
    std::vector<std::vector<int>> grouping;   // N groups of M-1 indices into ops
    std::string scheme;                       // "sequential" or a fixture name

    int groups() const { return static_cast<int>(grouping.size()); }
    int outcomes() const {
        return grouping.empty() ? 0 : static_cast<int>(grouping.front().size()) + 1;
    }
};

/// Generalized Gell-Mann matrices for dimension d, normalized tr(G^2) = 1.
/// Order: symmetric off-diagonal pairs (ascending (j,k)), antisymmetric
/// pairs (same order), then the d-1 diagonal operators.
std::vector<Cmat> gell_mann(int d);

/// Partition a basis into N groups of M-1 operators.
/// scheme: "sequential" chunks the canonical order; the d=3 fixtures
/// "paper-8-2", "paper-1-9", "paper-4-3" reproduce specific published
/// operator lists.
HermitianOperatorBasis group_for_nm(int d, int N, int M, const std::string& scheme = "sequential");

}  // namespace sepscope
