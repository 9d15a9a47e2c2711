#include "sepscope/basis.hpp"

#include <cmath>

namespace sepscope {

std::vector<Cmat> gell_mann(int d) {
    if (d < 2) throw InvalidDimension("gell_mann: dimension must be >= 2");
    std::vector<Cmat> ops;
    ops.reserve(static_cast<size_t>(d * d - 1));
    const double r2 = 1.0 / std::sqrt(2.0);

    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Cmat g = Cmat::Zero(d, d);
            g(j, k) = r2;
            g(k, j) = r2;
            ops.push_back(g);
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Cmat g = Cmat::Zero(d, d);
            g(j, k) = Complex(0, -r2);
            g(k, j) = Complex(0, r2);
            ops.push_back(g);
        }
    for (int m = 1; m < d; ++m) {
        Cmat g = Cmat::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
        for (int i = 0; i < m; ++i) g(i, i) = norm;
        g(m, m) = -static_cast<double>(m) * norm;
        ops.push_back(g);
    }
    return ops;
}

namespace {

// Canonical d=3 positions: 0 s01, 1 s02, 2 s12, 3 a01, 4 a02, 5 a12, 6 diag1, 7 diag2.
std::vector<std::vector<int>> fixture_grouping(const std::string& scheme) {
    if (scheme == "paper-8-2")
        return {{0}, {3}, {1}, {4}, {2}, {5}, {6}, {7}};
    if (scheme == "paper-1-9")
        return {{6, 0, 1, 3, 7, 2, 4, 5}};
    if (scheme == "paper-4-3")
        return {{0, 3}, {1, 4}, {2, 5}, {6, 7}};
    throw UnknownFixture("group_for_nm: unknown scheme '" + scheme + "'");
}

}  // namespace

HermitianOperatorBasis group_for_nm(int d, int N, int M, const std::string& scheme) {
    if (N * (M - 1) != d * d - 1)
        throw IncompatibleCounts("group_for_nm: N(M-1) must equal d^2-1");

    HermitianOperatorBasis basis;
    basis.dim = d;
    basis.ops = gell_mann(d);
    basis.scheme = scheme;

    if (scheme == "sequential") {
        int idx = 0;
        basis.grouping.resize(static_cast<size_t>(N));
        for (auto& grp : basis.grouping)
            for (int k = 0; k < M - 1; ++k) grp.push_back(idx++);
        return basis;
    }

    if (d != 3) throw UnknownFixture("group_for_nm: fixtures are defined for d=3 only");
    auto grouping = fixture_grouping(scheme);
    if (static_cast<int>(grouping.size()) != N ||
        static_cast<int>(grouping.front().size()) != M - 1)
        throw IncompatibleCounts("group_for_nm: fixture '" + scheme + "' does not fit (N,M)");
    basis.grouping = std::move(grouping);
    return basis;
}

}  // namespace sepscope
