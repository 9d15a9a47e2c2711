#include "sepscope/criteria.hpp"
#include "sepscope/scan.hpp"

#include <chrono>
#include <cstdio>

using namespace sepscope;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    auto povm = build_povm(3, 8, 2, 0.01, "paper-8-2");
    auto rho = white_noise_mix(tiles_state(), 0.9);

    const int reps = 200;
    auto t0 = std::chrono::steady_clock::now();
    double acc = 0.0;
    for (int r = 0; r < reps; ++r)
        acc += probability_matrix_serial(rho, povm, povm).sum();
    double serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    double acc2 = 0.0;
    for (int r = 0; r < reps; ++r) acc2 += probability_matrix(rho, povm, povm).sum();
    double parallel = seconds_since(t0);

    std::printf("probability_matrix, %d reps (16x16 over 9x9 states)\n", reps);
    std::printf("  serial   %.4f s\n", serial);
    std::printf("  parallel %.4f s  (speedup %.2fx)\n", parallel, serial / parallel);
    std::printf("  checksum delta %.3e\n", acc - acc2);

    FamilySpec fam{"tiles-noise", 0.0, 1.0, 0.2};
    CriterionConfig cfg;
    cfg.criterion = "thm1";
    cfg.povm = "nm-8-2";
    cfg.mu = 0.1;
    cfg.nu = 0.05;
    cfg.l = 2;
    t0 = std::chrono::steady_clock::now();
    auto curve = scan_margin(fam, cfg, 201);
    double scan_t = seconds_since(t0);
    std::printf("scan_margin, 201-point grid: %.4f s (last margin %.6f)\n", scan_t,
                curve.back().margin);
    return 0;
}
