// Acceptance suite: one pass/fail line per criterion, details for failures.
// Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <vector>

#include "rdl/verify.hpp"

int main(int argc, char** argv) {
    rdl::verify::Options opts;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--seed") == 0)
            opts.seed = static_cast<std::uint64_t>(std::strtoull(argv[i + 1], nullptr, 10));

    using Checks = std::vector<rdl::verify::Check>;
    struct Criterion {
        const char* title;
        std::function<Checks()> run;
    };
    const std::uint64_t seed = opts.seed;
    const std::vector<Criterion> criteria = {
        {"optimal thresholds and ratios match the reference table (K=1..5)",
         [] { return rdl::verify::check_optimal_table(); }},
        {"uniform profiles achieve exactly 1 + 1/K (K=1..64)",
         [] { return rdl::verify::check_uniform_law(); }},
        {"badge presets reproduce the reference ratios",
         [] { return rdl::verify::check_badge_presets(); }},
        {"gamma* stays within [1 + 1/(4K), 1 + 1/K] (K=1..100)",
         [] { return rdl::verify::check_gamma_bounds(); }},
        {"optimal profiles have strictly decreasing margins (K=2..50)",
         [] { return rdl::verify::check_margins(); }},
        {"interior-bin certificates attain the bin term (200 profiles)",
         [seed] { return rdl::verify::check_interior_bin_certificates(seed); }},
        {"last-bin certificates attain 1 + width - eps (50 profiles)",
         [seed] { return rdl::verify::check_last_bin_certificates(seed); }},
        {"closed-form ratio upper-bounds the oracle; 2-approximation holds (1000 markets)",
         [seed] { return rdl::verify::check_ratio_upper_bound(seed); }},
        {"full information is revenue-optimal (1000 markets)",
         [seed] { return rdl::verify::check_full_info_optimality(seed); }},
        {"posted-price revenue curves are shaped correctly (1000 markets)",
         [seed] { return rdl::verify::check_envelope_properties(seed); }},
        {"single-crossing instance: 1/60, 41/900, ratio 41/15",
         [] { return rdl::verify::check_single_crossing(); }},
        {"quality partitions are capped at factor 2 (hard instances)",
         [seed] { return rdl::verify::check_quality_partition_limit(seed); }},
        {"sandwich optimizer reproduces the reference ratios (K=1..5)",
         [&opts] { return rdl::verify::check_sandwich_table(opts); }},
        {"separable revenue chain holds (500 instances)",
         [seed] { return rdl::verify::check_separable_chain(seed); }},
        {"optimal profiles equalize every bin term with gamma* (K=1..10)",
         [] { return rdl::verify::check_equalization(); }},
    };

    int failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Checks checks = criteria[i].run();
        const bool ok = std::all_of(checks.begin(), checks.end(),
                                    [](const rdl::verify::Check& c) { return c.passed; });
        std::printf("[%s] criterion %2zu: %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].title);
        if (!ok) {
            ++failed;
            for (const auto& c : checks)
                if (!c.passed)
                    std::printf("       %s: expected %s, actual %s (tol %s)\n", c.name.c_str(),
                                c.expected.c_str(), c.actual.c_str(), c.tolerance.c_str());
        }
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = total < 120.0;
    if (!in_budget) ++failed;
    std::printf("[%s] total runtime within the 120 s budget\n", in_budget ? "PASS" : "FAIL");
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
