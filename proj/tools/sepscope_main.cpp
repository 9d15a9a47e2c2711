#include "sepscope/json_io.hpp"
#include "sepscope/matcore.hpp"
#include "sepscope/scan.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sepscope;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"symmetric (N,M)-POVM separability criteria toolkit"};
    app.require_subcommand(1);

    // basis dump
    auto* basis_cmd = app.add_subcommand("basis", "operator basis utilities");
    auto* basis_dump = basis_cmd->add_subcommand("dump", "emit a grouped basis as JSON");
    int b_dim = 3, b_n = 8, b_m = 2;
    std::string b_scheme = "sequential", b_out;
    basis_dump->add_option("--dim", b_dim, "local dimension");
    basis_dump->add_option("--n", b_n, "number of groups");
    basis_dump->add_option("--m", b_m, "outcomes per group");
    basis_dump->add_option("--scheme", b_scheme, "sequential or fixture name");
    basis_dump->add_option("--out", b_out, "output path (default stdout)");

    // povm build / validate
    auto* povm_cmd = app.add_subcommand("povm", "POVM construction and validation");
    auto* povm_build = povm_cmd->add_subcommand("build", "construct an (N,M)-POVM");
    int p_dim = 3, p_n = 8, p_m = 2;
    double p_t = 0.01;
    std::string p_scheme = "paper-8-2", p_kind = "general", p_out;
    povm_build->add_option("--dim", p_dim, "local dimension");
    povm_build->add_option("--n", p_n, "number of POVMs");
    povm_build->add_option("--m", p_m, "outcomes per POVM");
    povm_build->add_option("--t", p_t, "interpolation parameter");
    povm_build->add_option("--scheme", p_scheme, "basis grouping scheme");
    povm_build->add_option("--kind", p_kind, "general | gsic | mum");
    povm_build->add_option("--out", p_out, "output path (default stdout)");
    auto* povm_validate = povm_cmd->add_subcommand("validate", "check defining relations");
    std::string pv_in;
    double pv_tol = 1e-10;
    povm_validate->add_option("--in", pv_in, "POVM JSON file")->required();
    povm_validate->add_option("--tol", pv_tol, "residual tolerance");

    // state make / check
    auto* state_cmd = app.add_subcommand("state", "density matrix zoo");
    auto* state_make = state_cmd->add_subcommand("make", "construct a named family member");
    std::string s_family = "isotropic", s_out;
    double s_param = 0.5, s_upsilon = 0.2;
    int s_d = 3;
    state_make->add_option("--family", s_family,
                           "isotropic | tiles-noise | rho1 | horodecki | rho-y");
    state_make->add_option("--param", s_param, "family parameter (q, p, lambda, y)");
    state_make->add_option("--upsilon", s_upsilon, "upsilon (horodecki, rho-y)");
    state_make->add_option("--dim", s_d, "local dimension (isotropic)");
    state_make->add_option("--out", s_out, "output path (default stdout)");
    auto* state_check = state_cmd->add_subcommand("check", "invariant and PPT diagnostics");
    std::string sc_in;
    state_check->add_option("--in", sc_in, "density JSON file")->required();

    // criterion eval
    auto* crit_cmd = app.add_subcommand("criterion", "single criterion evaluation");
    auto* crit_eval = crit_cmd->add_subcommand("eval", "evaluate one criterion");
    std::string c_state, c_povm_a, c_povm_b, c_id = "thm1";
    double c_mu = 0.0, c_nu = 0.0, c_alpha = 2.0, c_beta = 2.0;
    int c_l = 1;
    crit_eval->add_option("--state", c_state, "density JSON file")->required();
    crit_eval->add_option("--povm-a", c_povm_a, "POVM JSON (side A)");
    crit_eval->add_option("--povm-b", c_povm_b, "POVM JSON (side B)");
    crit_eval->add_option("--criterion", c_id,
                          "thm1 | p-only | gsic | mum | shi | sun | ppt | realign");
    crit_eval->add_option("--mu", c_mu);
    crit_eval->add_option("--nu", c_nu);
    crit_eval->add_option("--l", c_l);
    crit_eval->add_option("--alpha", c_alpha, "shi/sun border weight");
    crit_eval->add_option("--beta", c_beta, "shi/sun border weight");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "margin curve and threshold scan");
    FamilySpec sc_family{"tiles-noise", 0.0, 1.0, 0.2};
    CriterionConfig sc_cfg;
    int sc_grid = 101;
    double sc_tol = 1e-7;
    std::string sc_out;
    bool sc_no_threshold = false;
    scan_cmd->add_option("--family", sc_family.family,
                         "isotropic | tiles-noise | rho1 | rho-y");
    scan_cmd->add_option("--lo", sc_family.lo);
    scan_cmd->add_option("--hi", sc_family.hi);
    scan_cmd->add_option("--upsilon", sc_family.upsilon);
    scan_cmd->add_option("--criterion", sc_cfg.criterion);
    scan_cmd->add_option("--povm", sc_cfg.povm, "nm-8-2 | gsic | mum");
    scan_cmd->add_option("--t", sc_cfg.t);
    scan_cmd->add_option("--mu", sc_cfg.mu);
    scan_cmd->add_option("--nu", sc_cfg.nu);
    scan_cmd->add_option("--l", sc_cfg.l);
    scan_cmd->add_option("--alpha", sc_cfg.alpha);
    scan_cmd->add_option("--beta", sc_cfg.beta);
    scan_cmd->add_option("--grid", sc_grid);
    scan_cmd->add_option("--tol", sc_tol, "bisection bracket tolerance");
    scan_cmd->add_option("--out", sc_out, "CSV output path (default stdout)");
    scan_cmd->add_flag("--no-threshold", sc_no_threshold, "curve only, skip bisection");

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "regenerate worked-example data");
    std::string r_target, r_out = "out";
    repro_cmd
        ->add_option("target", r_target,
                     "example1 | example2 | example3 | example4 | table2 | table3")
        ->required();
    repro_cmd->add_option("--out", r_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto emit = [](const std::string& path, const Json& j) {
        if (path.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            save_json(path, j);
        }
    };

    if (basis_dump->parsed()) {
        auto basis = group_for_nm(b_dim, b_n, b_m, b_scheme);
        Json ops = Json::array();
        for (const auto& g : basis.ops) ops.push_back(matrix_to_json(g));
        emit(b_out, Json{{"dim", basis.dim},
                         {"scheme", basis.scheme},
                         {"grouping", basis.grouping},
                         {"ops", ops}});
        return 0;
    }
    if (povm_build->parsed()) {
        SymmetricPovm p;
        if (p_kind == "gsic") {
            p = build_gsic(p_dim, p_t, p_scheme == "paper-8-2" ? "" : p_scheme);
        } else if (p_kind == "mum") {
            p = build_mum(p_dim, p_t, p_scheme == "paper-8-2" ? "" : p_scheme);
        } else {
            p = build_povm(p_dim, p_n, p_m, p_t, p_scheme);
        }
        auto report = validate_povm(p);
        if (!report.pass) {
            std::cerr << "constructed POVM failed validation\n";
            return 3;
        }
        emit(p_out, povm_to_json(p));
        return 0;
    }
    if (povm_validate->parsed()) {
        auto p = povm_from_json(load_json(pv_in));
        auto report = validate_povm(p, pv_tol);
        Json entries = Json::array();
        for (const auto& e : report.entries)
            entries.push_back(Json{{"relation", e.relation},
                                   {"residual", e.residual},
                                   {"tolerance", e.tolerance},
                                   {"pass", e.pass}});
        std::cout << Json{{"pass", report.pass}, {"relations", entries}}.dump(2) << "\n";
        return report.pass ? 0 : 3;
    }
    if (state_make->parsed()) {
        DensityMatrix rho;
        if (s_family == "isotropic") {
            rho = isotropic(s_d, s_param);
        } else if (s_family == "tiles-noise") {
            rho = white_noise_mix(tiles_state(), s_param);
        } else if (s_family == "rho1") {
            rho = rho1_lambda(s_param);
        } else if (s_family == "horodecki") {
            rho = horodecki_3x3(s_upsilon);
        } else if (s_family == "rho-y") {
            rho = rho_y(s_upsilon, s_param);
        } else {
            std::cerr << "unknown family '" << s_family << "'\n";
            return 2;
        }
        emit(s_out, density_to_json(rho));
        return 0;
    }
    if (state_check->parsed()) {
        auto rho = density_from_json(load_json(sc_in));
        std::string why;
        bool ok = is_valid_density(rho, &why);
        Json j{{"valid", ok}, {"trace", rho.mat.trace().real()}};
        if (!ok) j["reason"] = why;
        if (rho.dims.size() == 2) {
            double e = ppt_min_eigenvalue(rho);
            j["ppt_min_eigenvalue"] = e;
            j["npt_entangled"] = e < -1e-10;
        }
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 3;
    }
    if (crit_eval->parsed()) {
        auto rho = density_from_json(load_json(c_state));
        CriterionVerdict v;
        if (c_id == "shi") {
            v = shi_q_matrix(rho, c_alpha, c_beta);
        } else if (c_id == "sun") {
            v = sun_q_matrix(rho, c_alpha, c_beta, c_l);
        } else if (c_id == "ppt") {
            v = make_verdict("ppt", -ppt_min_eigenvalue(rho), 0.0);
        } else if (c_id == "realign") {
            v = realignment_criterion(rho);
        } else if (c_id == "thm1" || c_id == "p-only" || c_id == "gsic" ||
                   c_id == "mum") {
            if (c_povm_a.empty() || c_povm_b.empty()) {
                std::cerr << "criterion '" << c_id << "' needs --povm-a and --povm-b\n";
                return 2;
            }
            auto pa = povm_from_json(load_json(c_povm_a));
            auto pb = povm_from_json(load_json(c_povm_b));
            auto want = c_id == "gsic" ? PovmKind::gsic
                        : c_id == "mum" ? PovmKind::mum
                                        : pa.kind;
            if (pa.kind != want || pb.kind != want) {
                std::cerr << "criterion '" << c_id << "' needs POVMs of that kind\n";
                return 2;
            }
            v = c_id == "p-only" ? evaluate_p_only(rho, pa, pb)
                                 : evaluate_theorem1(rho, pa, pb, c_mu, c_nu, c_l);
            v.criterion = c_id;
        } else {
            std::cerr << "unknown criterion '" << c_id << "'\n";
            return 2;
        }
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return 0;
    }
    if (scan_cmd->parsed()) {
        std::ostringstream csv;
        auto fmt = [](double x) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.10g", x);
            return std::string(buf);
        };
        std::vector<ScanPoint> samples;
        csv << "# criterion=" << sc_cfg.criterion << " povm=" << sc_cfg.povm
            << " family=" << sc_family.family << " t=" << fmt(sc_cfg.t)
            << " mu=" << fmt(sc_cfg.mu) << " nu=" << fmt(sc_cfg.nu)
            << " l=" << sc_cfg.l << "\n";
        if (sc_no_threshold) {
            samples = scan_margin(sc_family, sc_cfg, sc_grid);
        } else {
            try {
                auto thr = find_threshold(sc_family, sc_cfg, sc_tol, sc_grid);
                samples = thr.samples;
                csv << "# threshold=" << fmt(thr.threshold) << " bracket=["
                    << fmt(thr.bracket.lo) << "," << fmt(thr.bracket.hi) << "]"
                    << " fit_slope=" << fmt(thr.slope)
                    << " fit_intercept=" << fmt(thr.intercept) << "\n";
            } catch (const NoSignChange& e) {
                samples = scan_margin(sc_family, sc_cfg, sc_grid);
                csv << "# threshold=none (" << e.what() << ")\n";
            }
        }
        csv << "param,lhs,rhs,margin,detected\n";
        for (const auto& s : samples)
            csv << fmt(s.param) << "," << fmt(s.lhs) << "," << fmt(s.rhs) << ","
                << fmt(s.margin) << "," << (s.detected ? 1 : 0) << "\n";
        if (sc_out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(sc_out);
            if (!out) throw IoError("cannot write " + sc_out);
            out << csv.str();
        }
        return 0;
    }
    if (repro_cmd->parsed()) {
        reproduce(r_target, r_out);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParamOutOfRange& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InvalidDimension& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IncompatibleCounts& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownFixture& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const TOutOfRange& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ShapeMismatch& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InvalidPartition& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // numerical failures: degenerate spectra, non-Hermitian inputs,
        // missing sign changes
        std::cerr << e.what() << "\n";
        return 3;
    }
}
