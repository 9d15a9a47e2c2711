#include "sepscope/scan.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sepscope {

DensityMatrix make_family_state(const FamilySpec& family, double param) {
    if (family.family == "isotropic") return isotropic(3, param);
    if (family.family == "tiles-noise") return white_noise_mix(tiles_state(), param);
    if (family.family == "rho1") return rho1_lambda(param);
    if (family.family == "rho-y") return rho_y(family.upsilon, param);
    throw ParamOutOfRange("unknown family '" + family.family + "'");
}

namespace {

SymmetricPovm povm_for(const CriterionConfig& cfg) {
    if (cfg.povm == "nm-8-2") return build_povm(3, 8, 2, cfg.t, "paper-8-2");
    if (cfg.povm == "gsic") return build_gsic(3, cfg.t);
    if (cfg.povm == "mum") return build_mum(3, cfg.t);
    throw ParamOutOfRange("unknown povm '" + cfg.povm + "'");
}

struct Evaluator {
    CriterionConfig cfg;
    SymmetricPovm povm;  // shared A/B measurement, built once
    bool needs_povm;

    explicit Evaluator(const CriterionConfig& c)
        : cfg(c), needs_povm(c.criterion == "thm1" || c.criterion == "p-only") {
        if (needs_povm) povm = povm_for(c);
    }

    CriterionVerdict operator()(const DensityMatrix& rho) const {
        if (cfg.criterion == "thm1")
            return evaluate_theorem1(rho, povm, povm, cfg.mu, cfg.nu, cfg.l);
        if (cfg.criterion == "p-only") return evaluate_p_only(rho, povm, povm);
        if (cfg.criterion == "shi") return shi_q_matrix(rho, cfg.alpha, cfg.beta);
        if (cfg.criterion == "sun")
            return sun_q_matrix(rho, cfg.alpha, cfg.beta, cfg.l);
        if (cfg.criterion == "realign") return realignment_criterion(rho);
        if (cfg.criterion == "ppt")
            return make_verdict("ppt", -ppt_min_eigenvalue(rho), 0.0);
        throw ParamOutOfRange("unknown criterion '" + cfg.criterion + "'");
    }
};

}  // namespace

CriterionVerdict evaluate_config(const DensityMatrix& rho, const CriterionConfig& cfg) {
    return Evaluator(cfg)(rho);
}

std::vector<ScanPoint> scan_margin(const FamilySpec& family, const CriterionConfig& cfg,
                                   int grid) {
    if (grid < 2) throw ParamOutOfRange("scan_margin: grid must be >= 2");
    if (!(family.lo < family.hi)) throw ParamOutOfRange("scan_margin: need lo < hi");
    Evaluator ev(cfg);
    std::vector<ScanPoint> out(static_cast<size_t>(grid));
#ifdef SEPSCOPE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < grid; ++i) {
        double param = family.lo + (family.hi - family.lo) * i / (grid - 1);
        auto v = ev(make_family_state(family, param));
        out[static_cast<size_t>(i)] = {param, v.lhs, v.rhs, v.margin, v.detected};
    }
    return out;
}

ThresholdResult find_threshold(const FamilySpec& family, const CriterionConfig& cfg,
                               double tol, int grid) {
    Evaluator ev(cfg);
    ThresholdResult res;
    res.samples = scan_margin(family, cfg, grid);

    for (size_t i = 0; i + 1 < res.samples.size(); ++i) {
        double m0 = res.samples[i].margin, m1 = res.samples[i + 1].margin;
        if ((m0 <= 0.0) != (m1 <= 0.0))
            res.brackets.push_back(
                {res.samples[i].param, res.samples[i + 1].param, m1 > m0});
    }
    if (res.brackets.empty()) {
        bool all_pos = res.samples.front().margin > 0.0;
        throw NoSignChange(all_pos ? "margin positive over the whole range"
                                   : "margin never positive over the range");
    }

    Bracket b = res.brackets.front();
    auto margin_at = [&](double param) {
        return ev(make_family_state(family, param)).margin;
    };
    double mlo = margin_at(b.lo);
    while (b.hi - b.lo > tol) {
        double mid = 0.5 * (b.lo + b.hi);
        double mm = margin_at(mid);
        if ((mm <= 0.0) == (mlo <= 0.0)) {
            b.lo = mid;
            mlo = mm;
        } else {
            b.hi = mid;
        }
    }
    res.bracket = b;
    res.threshold = 0.5 * (b.lo + b.hi);

    // affine fit over the detected side, for comparison with reported fits
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& s : res.samples)
        if (s.margin > 0.0) {
            sx += s.param;
            sy += s.margin;
            sxx += s.param * s.param;
            sxy += s.param * s.margin;
            ++n;
        }
    if (n >= 2) {
        double det = n * sxx - sx * sx;
        res.slope = (n * sxy - sx * sy) / det;
        res.intercept = (sy * sxx - sx * sxy) / det;
        for (const auto& s : res.samples)
            if (s.margin > 0.0)
                res.max_fit_residual =
                    std::max(res.max_fit_residual,
                             std::abs(res.slope * s.param + res.intercept - s.margin));
    }
    return res;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_curve(const std::string& path, const FamilySpec& family,
                 const CriterionConfig& cfg, const std::vector<ScanPoint>& samples,
                 const ThresholdResult* thr) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "# criterion=" << cfg.criterion << " povm=" << cfg.povm
        << " family=" << family.family << " t=" << fmt(cfg.t) << " mu=" << fmt(cfg.mu)
        << " nu=" << fmt(cfg.nu) << " l=" << cfg.l;
    if (cfg.criterion == "shi" || cfg.criterion == "sun")
        out << " alpha=" << fmt(cfg.alpha) << " beta=" << fmt(cfg.beta);
    if (family.family == "rho-y") out << " upsilon=" << fmt(family.upsilon);
    out << "\n";
    if (thr) {
        out << "# threshold=" << fmt(thr->threshold) << " bracket=["
            << fmt(thr->bracket.lo) << "," << fmt(thr->bracket.hi) << "]"
            << " fit_slope=" << fmt(thr->slope) << " fit_intercept="
            << fmt(thr->intercept) << " fit_max_residual="
            << fmt(thr->max_fit_residual) << "\n";
    }
    out << "param,lhs,rhs,margin,detected\n";
    for (const auto& s : samples)
        out << fmt(s.param) << "," << fmt(s.lhs) << "," << fmt(s.rhs) << ","
            << fmt(s.margin) << "," << (s.detected ? 1 : 0) << "\n";
}

void scan_and_write(const std::string& path, const FamilySpec& family,
                    const CriterionConfig& cfg) {
    ThresholdResult thr;
    bool have_thr = true;
    try {
        thr = find_threshold(family, cfg);
    } catch (const NoSignChange&) {
        have_thr = false;
        thr.samples = scan_margin(family, cfg, 101);
    }
    write_curve(path, family, cfg, thr.samples, have_thr ? &thr : nullptr);
}

const char* kPovmKinds[] = {"nm-8-2", "gsic", "mum"};

}  // namespace

void reproduce(const std::string& target, const std::string& outdir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw IoError("cannot create " + outdir);
    auto path = [&](const std::string& name) { return outdir + "/" + name; };

    if (target == "example1") {
        FamilySpec fam{"tiles-noise", 0.0, 1.0};
        for (const char* kind : kPovmKinds) {
            CriterionConfig cfg;
            cfg.povm = kind;
            cfg.criterion = "thm1";
            cfg.mu = 0.1;
            cfg.nu = 0.05;
            cfg.l = 2;
            scan_and_write(path(std::string("example1_") + kind + "_thm1.csv"), fam, cfg);
            cfg.criterion = "p-only";
            cfg.mu = cfg.nu = 0.0;
            cfg.l = 1;
            scan_and_write(path(std::string("example1_") + kind + "_p-only.csv"), fam,
                           cfg);
        }
        return;
    }
    if (target == "example2" || target == "table3") {
        FamilySpec fam{"rho1", 0.0, 1.0};
        for (const char* kind : kPovmKinds) {
            CriterionConfig cfg;
            cfg.povm = kind;
            cfg.criterion = "thm1";
            cfg.mu = cfg.nu = 0.005;
            cfg.l = 1;
            scan_and_write(path(target + "_" + kind + "_thm1.csv"), fam, cfg);
            cfg.criterion = "p-only";
            cfg.mu = cfg.nu = 0.0;
            scan_and_write(path(target + "_" + kind + "_p-only.csv"), fam, cfg);
        }
        return;
    }
    if (target == "example3") {
        FamilySpec fam{"isotropic", 0.0, 1.0};
        for (const char* kind : kPovmKinds) {
            CriterionConfig cfg;
            cfg.povm = kind;
            cfg.criterion = "thm1";
            cfg.mu = cfg.nu = 2.0;
            cfg.l = 10;
            scan_and_write(path(std::string("example3_") + kind + ".csv"), fam, cfg);
        }
        return;
    }
    if (target == "example4" || target == "table2") {
        std::vector<double> upsilons =
            target == "example4" ? std::vector<double>{0.2}
                                 : std::vector<double>{0.2, 0.4, 0.6, 0.8, 0.9};
        for (double v : upsilons) {
            FamilySpec fam{"rho-y", 0.9, 1.0, v};
            std::ostringstream tag;
            tag << target << "_v" << v;
            CriterionConfig cfg;
            cfg.povm = "nm-8-2";
            cfg.criterion = "thm1";
            cfg.mu = cfg.nu = 2.0;
            cfg.l = 10;
            scan_and_write(path(tag.str() + "_thm1.csv"), fam, cfg);
            // baseline parameters are an assumption; recorded in the header
            cfg.criterion = "sun";
            cfg.alpha = cfg.beta = 2.0;
            scan_and_write(path(tag.str() + "_sun.csv"), fam, cfg);
            cfg.criterion = "shi";
            cfg.l = 1;
            scan_and_write(path(tag.str() + "_shi.csv"), fam, cfg);
        }
        return;
    }
    throw ParamOutOfRange("unknown reproduce target '" + target + "'");
}

}  // namespace sepscope
