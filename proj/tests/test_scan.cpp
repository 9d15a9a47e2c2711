#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepscope/scan.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sepscope;

namespace {

CriterionConfig baseline_cfg() {
    CriterionConfig cfg;
    cfg.criterion = "p-only";
    cfg.povm = "nm-8-2";
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("family constructors dispatch correctly") {
    CHECK(make_family_state({"isotropic", 0, 1}, 0.0).mat.rows() == 9);
    CHECK(make_family_state({"tiles-noise", 0, 1}, 1.0).mat.rows() == 9);
    CHECK(make_family_state({"rho1", 0, 1}, 0.2).mat.rows() == 9);
    CHECK(make_family_state({"rho-y", 0, 1, 0.4}, 0.5).mat.rows() == 9);
    CHECK_THROWS_AS(make_family_state({"nope", 0, 1}, 0.5), ParamOutOfRange);
}

TEST_CASE("two-point grid returns exactly the endpoint margins") {
    FamilySpec fam{"tiles-noise", 0.0, 1.0};
    auto cfg = baseline_cfg();
    auto pts = scan_margin(fam, cfg, 2);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].param == doctest::Approx(0.0));
    CHECK(pts[1].param == doctest::Approx(1.0));
    auto v0 = evaluate_config(make_family_state(fam, 0.0), cfg);
    auto v1 = evaluate_config(make_family_state(fam, 1.0), cfg);
    CHECK(pts[0].margin == doctest::Approx(v0.margin).epsilon(1e-12));
    CHECK(pts[1].margin == doctest::Approx(v1.margin).epsilon(1e-12));
    CHECK_THROWS_AS(scan_margin(fam, cfg, 1), ParamOutOfRange);
}

TEST_CASE("threshold is grid independent and brackets a sign change") {
    FamilySpec fam{"tiles-noise", 0.0, 1.0};
    auto cfg = baseline_cfg();
    auto coarse = find_threshold(fam, cfg, 1e-7, 51);
    auto fine = find_threshold(fam, cfg, 1e-7, 201);
    CHECK(coarse.threshold == doctest::Approx(fine.threshold).epsilon(1e-6));

    double below = evaluate_config(make_family_state(fam, coarse.threshold - 1e-6), cfg)
                       .margin;
    double above = evaluate_config(make_family_state(fam, coarse.threshold + 1e-6), cfg)
                       .margin;
    CHECK(below < 0.0);
    CHECK(above > 0.0);
    CHECK(coarse.bracket.hi - coarse.bracket.lo <= 1e-7);
    CHECK(coarse.brackets.size() >= 1);
}

TEST_CASE("missing sign change is reported as such") {
    FamilySpec fam{"isotropic", 0.0, 0.2};
    CriterionConfig cfg;
    cfg.criterion = "thm1";
    cfg.povm = "nm-8-2";
    cfg.mu = cfg.nu = 2.0;
    cfg.l = 10;
    CHECK_THROWS_AS(find_threshold(fam, cfg), NoSignChange);
}

TEST_CASE("isotropic threshold lands on the known boundary") {
    FamilySpec fam{"isotropic", 0.0, 1.0};
    CriterionConfig cfg;
    cfg.criterion = "thm1";
    cfg.povm = "mum";
    cfg.mu = cfg.nu = 2.0;
    cfg.l = 10;
    auto res = find_threshold(fam, cfg);
    CHECK(res.threshold == doctest::Approx(0.25).epsilon(1e-4));
    CHECK(res.slope > 0.0);
    CHECK(res.max_fit_residual < 0.1 * res.slope);
}

TEST_CASE("ppt scan flags the NPT region of the isotropic family") {
    FamilySpec fam{"isotropic", 0.0, 1.0};
    CriterionConfig cfg;
    cfg.criterion = "ppt";
    auto res = find_threshold(fam, cfg);
    CHECK(res.threshold == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_CASE("reproduce writes deterministic CSV output") {
    namespace fs = std::filesystem;
    fs::path dir1 = fs::temp_directory_path() / "sepscope_repro_a";
    fs::path dir2 = fs::temp_directory_path() / "sepscope_repro_b";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    reproduce("example3", dir1.string());
    reproduce("example3", dir2.string());

    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir1))
        names.push_back(entry.path().filename().string());
    CHECK(names.size() == 3);
    for (const auto& name : names) {
        auto a = slurp((dir1 / name).string());
        auto b = slurp((dir2 / name).string());
        CHECK(a == b);
        CHECK(a.find("param,lhs,rhs,margin,detected") != std::string::npos);
        CHECK(a.rfind("# criterion=", 0) == 0);
        CHECK(a.find("threshold=") != std::string::npos);
    }
    CHECK_THROWS_AS(reproduce("table9", dir1.string()), ParamOutOfRange);
}
