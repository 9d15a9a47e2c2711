#pragma once

#include "sepscope/basis.hpp"

namespace sepscope {

enum class PovmKind { general, gsic, mum };

struct NmPovmConfig {
    int dim = 0;
    int groups = 0;    // N
    int outcomes = 0;  // M
    double t = 0.0;
};

struct TRange {
    double t_min = 0.0;
    double t_max = 0.0;
    bool contains(double t, double slack = 1e-12) const {
        return t >= t_min - slack && t <= t_max + slack;
    }
};

/// One residual per defining relation plus positivity / completeness checks.
struct ValidationReport {
    struct Entry {
        std::string relation;
        double residual = 0.0;
        double tolerance = 0.0;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool pass = true;

    void add(const std::string& relation, double residual, double tolerance) {
        bool ok = residual <= tolerance;
        entries.push_back({relation, residual, tolerance, ok});
        pass = pass && ok;
    }
};

struct SymmetricPovm {
    NmPovmConfig config;
    PovmKind kind = PovmKind::general;
    std::string scheme;
    std::vector<std::vector<Cmat>> operators;  // N groups x M outcomes
    double x = 0.0;                            // tr(E^2), common operator purity
    bool degenerate = false;                   // t == 0: not informationally complete

    int dim() const { return config.dim; }
    int groups() const { return config.groups; }
    int outcomes() const { return config.outcomes; }
    int flat_size() const { return config.groups * config.outcomes; }
    /// Flat row index (alpha, k) -> alpha * M + k (group-major, 0-based).
    const Cmat& flat(int idx) const {
        return operators[static_cast<size_t>(idx / config.outcomes)]
                        [static_cast<size_t>(idx % config.outcomes)];
    }
};

/// H operators of the interpolation E = I/M + t H, grouped like the basis.
std::vector<std::vector<Cmat>> build_h_operators(const HermitianOperatorBasis& basis);

/// Admissible t interval from the extreme eigenvalues over all H operators.
TRange t_range(const std::vector<std::vector<Cmat>>& h_ops, int M);
TRange t_range(const HermitianOperatorBasis& basis);

/// Common operator purity x(d, M, t) = d/M^2 + t^2 (M-1)(sqrt(M)+1)^2.
double efficiency_x(int d, int M, double t);
/// GSIC purity a(d, t) = 1/d^3 + t^2 (d-1)(d+1)^3.
double gsic_a(int d, double t);
/// MUM purity kappa(d, t) = 1/d + t^2 (1+sqrt(d))^2 (d-1).
double mum_kappa(int d, double t);

SymmetricPovm build_povm(const NmPovmConfig& config, const HermitianOperatorBasis& basis);
SymmetricPovm build_povm(int d, int N, int M, double t, const std::string& scheme = "sequential");

/// (1, d^2) special case. For d=3 defaults to the "paper-1-9" fixture.
SymmetricPovm build_gsic(int d, double t, const std::string& scheme = "");
/// (d+1, d) special case. For d=3 defaults to the "paper-4-3" fixture.
SymmetricPovm build_mum(int d, double t, const std::string& scheme = "");

ValidationReport validate_povm(const SymmetricPovm& p, double tol = 1e-10);

}  // namespace sepscope
