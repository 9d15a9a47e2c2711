#include "sepscope/povm.hpp"

#include "sepscope/matcore.hpp"

#include <cmath>

namespace sepscope {

std::vector<std::vector<Cmat>> build_h_operators(const HermitianOperatorBasis& basis) {
    const int d = basis.dim;
    const int M = basis.outcomes();
    if (basis.groups() * (M - 1) != d * d - 1)
        throw IncompatibleCounts("build_h_operators: grouping does not satisfy N(M-1)=d^2-1");

    const double sM = std::sqrt(static_cast<double>(M));
    std::vector<std::vector<Cmat>> h;
    h.reserve(basis.grouping.size());
    for (const auto& grp : basis.grouping) {
        Cmat g_sum = Cmat::Zero(d, d);
        for (int idx : grp) g_sum += basis.ops[static_cast<size_t>(idx)];
        std::vector<Cmat> row;
        row.reserve(static_cast<size_t>(M));
        for (int idx : grp) row.push_back(g_sum - sM * (sM + 1.0) * basis.ops[static_cast<size_t>(idx)]);
        row.push_back((sM + 1.0) * g_sum);
        h.push_back(std::move(row));
    }
    return h;
}

TRange t_range(const std::vector<std::vector<Cmat>>& h_ops, int M) {
    if (h_ops.empty()) throw IncompatibleCounts("t_range: empty H set");
    double lambda_max = -std::numeric_limits<double>::infinity();
    double lambda_min = std::numeric_limits<double>::infinity();
    for (const auto& row : h_ops)
        for (const auto& h : row) {
            auto ev = hermitian_eigenvalues(h);
            lambda_min = std::min(lambda_min, ev.front());
            lambda_max = std::max(lambda_max, ev.back());
        }
    if (lambda_max <= 0 || lambda_min >= 0)
        throw DegenerateSpectrum("t_range: H spectrum does not straddle zero");
    return {-1.0 / (M * lambda_max), 1.0 / (M * std::abs(lambda_min))};
}

TRange t_range(const HermitianOperatorBasis& basis) {
    return t_range(build_h_operators(basis), basis.outcomes());
}

double efficiency_x(int d, int M, double t) {
    const double sM = std::sqrt(static_cast<double>(M));
    return static_cast<double>(d) / (M * M) + t * t * (M - 1) * (sM + 1.0) * (sM + 1.0);
}

double gsic_a(int d, double t) {
    const double dd = d;
    return 1.0 / (dd * dd * dd) + t * t * (dd - 1.0) * std::pow(dd + 1.0, 3);
}

double mum_kappa(int d, double t) {
    const double sd = std::sqrt(static_cast<double>(d));
    return 1.0 / d + t * t * (1.0 + sd) * (1.0 + sd) * (d - 1);
}

SymmetricPovm build_povm(const NmPovmConfig& config, const HermitianOperatorBasis& basis) {
    if (basis.dim != config.dim || basis.groups() != config.groups ||
        basis.outcomes() != config.outcomes)
        throw IncompatibleCounts("build_povm: basis grouping does not match config");

    auto h = build_h_operators(basis);
    auto range = t_range(h, config.outcomes);
    if (!range.contains(config.t)) throw TOutOfRange("build_povm: t outside admissible range");

    SymmetricPovm p;
    p.config = config;
    p.scheme = basis.scheme;
    p.x = efficiency_x(config.dim, config.outcomes, config.t);
    p.degenerate = config.t == 0.0;
    const Cmat eye_over_m = Cmat::Identity(config.dim, config.dim) / config.outcomes;
    p.operators.reserve(h.size());
    for (const auto& row : h) {
        std::vector<Cmat> ops;
        ops.reserve(row.size());
        for (const auto& hh : row) ops.push_back(eye_over_m + config.t * hh);
        p.operators.push_back(std::move(ops));
    }
    return p;
}

SymmetricPovm build_povm(int d, int N, int M, double t, const std::string& scheme) {
    return build_povm(NmPovmConfig{d, N, M, t}, group_for_nm(d, N, M, scheme));
}

SymmetricPovm build_gsic(int d, double t, const std::string& scheme) {
    std::string s = scheme.empty() ? (d == 3 ? "paper-1-9" : "sequential") : scheme;
    auto p = build_povm(d, 1, d * d, t, s);
    p.kind = PovmKind::gsic;
    return p;
}

SymmetricPovm build_mum(int d, double t, const std::string& scheme) {
    std::string s = scheme.empty() ? (d == 3 ? "paper-4-3" : "sequential") : scheme;
    auto p = build_povm(d, d + 1, d, t, s);
    p.kind = PovmKind::mum;
    return p;
}

ValidationReport validate_povm(const SymmetricPovm& p, double tol) {
    ValidationReport report;
    const int d = p.dim(), N = p.groups(), M = p.outcomes();
    const double trace_target = static_cast<double>(d) / M;
    const double same_group = (d - M * p.x) / (M * (M - 1.0));
    const double cross_group = static_cast<double>(d) / (M * M);

    double r_trace = 0, r_purity = 0, r_same = 0, r_cross = 0, r_complete = 0;
    double min_eig = 0;

    for (int a = 0; a < N; ++a) {
        Cmat sum = Cmat::Zero(d, d);
        for (int k = 0; k < M; ++k) {
            const Cmat& e = p.operators[static_cast<size_t>(a)][static_cast<size_t>(k)];
            sum += e;
            r_trace = std::max(r_trace, std::abs(e.trace().real() - trace_target));
            auto ev = hermitian_eigenvalues(e);
            min_eig = std::min(min_eig, ev.front());
            for (int b = a; b < N; ++b)
                for (int l = (b == a ? k : 0); l < M; ++l) {
                    const Cmat& f = p.operators[static_cast<size_t>(b)][static_cast<size_t>(l)];
                    double overlap = (e * f).trace().real();
                    if (b == a && l == k)
                        r_purity = std::max(r_purity, std::abs(overlap - p.x));
                    else if (b == a)
                        r_same = std::max(r_same, std::abs(overlap - same_group));
                    else
                        r_cross = std::max(r_cross, std::abs(overlap - cross_group));
                }
        }
        r_complete = std::max(r_complete, (sum - Cmat::Identity(d, d)).cwiseAbs().maxCoeff());
    }

    report.add("tr(E) = d/M", r_trace, tol);
    report.add("tr(E^2) = x", r_purity, tol);
    if (M > 1) report.add("tr(E E'), same group", r_same, tol);
    if (N > 1) report.add("tr(E E'), cross group", r_cross, tol);
    report.add("sum_k E = I", r_complete, 1e-12);
    report.add("positive semidefinite", std::max(0.0, -min_eig), -kPsdTol);
    return report;
}

}  // namespace sepscope
