// Compares the serial reference and the OpenMP path of the sandwich-grid
// optimizer.  Usage: bench_sandwich [max_k] [grid_step]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "rdl/sandwich.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int max_k = argc > 1 ? std::atoi(argv[1]) : 5;
    const double grid = argc > 2 ? std::atof(argv[2]) : 0.0025;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-4s %-12s %-12s %-10s %-10s %s\n", "K", "serial[s]", "parallel[s]", "speedup",
                "gamma", "agree");

    for (int k = 2; k <= max_k; ++k) {
        rdl::SandwichSolution serial{rdl::QuantileProfile({0.0, 1.0}), 0.0};
        rdl::SandwichSolution parallel = serial;
        const double ts = time_seconds([&] { serial = rdl::sandwich_optimize_serial(k, grid); });
        const double tp = time_seconds([&] { parallel = rdl::sandwich_optimize(k, grid); });
        const bool agree = serial.ratio == parallel.ratio &&
                           serial.profile.thresholds() == parallel.profile.thresholds();
        std::printf("%-4d %-12.4f %-12.4f %-10.2f %-10.6f %s\n", k, ts, tp,
                    tp > 0.0 ? ts / tp : 0.0, parallel.ratio, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
