#pragma once

#include "sepscope/criteria.hpp"

namespace sepscope {

struct FamilySpec {
    std::string family;  // isotropic | tiles-noise | rho1 | rho-y
    double lo = 0.0;
    double hi = 1.0;
    double upsilon = 0.2;  // rho-y only
};

struct CriterionConfig {
    std::string criterion = "thm1";  // thm1 | p-only | shi | sun | realign | ppt
    std::string povm = "nm-8-2";     // nm-8-2 | gsic | mum (d=3 fixtures)
    double t = 0.01;
    double mu = 0.0;
    double nu = 0.0;
    int l = 1;
    double alpha = 2.0;  // shi / sun only
    double beta = 2.0;
};

struct ScanPoint {
    double param = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool detected = false;
};

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    bool rising = true;  // margin goes negative -> positive with the parameter
};

struct ThresholdResult {
    double threshold = 0.0;
    Bracket bracket;                 // first (lowest-parameter) sign change
    std::vector<Bracket> brackets;   // all sign changes found on the coarse grid
    double slope = 0.0;              // least-squares fit over positive margins
    double intercept = 0.0;
    double max_fit_residual = 0.0;
    std::vector<ScanPoint> samples;
};

DensityMatrix make_family_state(const FamilySpec& family, double param);

CriterionVerdict evaluate_config(const DensityMatrix& rho, const CriterionConfig& cfg);

/// Deterministic margin curve on a uniform grid over [lo, hi].
std::vector<ScanPoint> scan_margin(const FamilySpec& family, const CriterionConfig& cfg,
                                   int grid);

/// Locate every sign change on a coarse grid, bisect the first bracket to
/// |hi - lo| <= tol, and fit margin ~ slope * param + intercept over the
/// detected side. Throws NoSignChange when the margin never crosses zero.
ThresholdResult find_threshold(const FamilySpec& family, const CriterionConfig& cfg,
                               double tol = 1e-7, int grid = 101);

/// Regenerate the worked-example data as CSV files under outdir.
/// target: example1 | example2 | example3 | example4 | table2 | table3.
void reproduce(const std::string& target, const std::string& outdir);

}  // namespace sepscope
