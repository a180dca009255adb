#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rdl::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    std::string tolerance;
};

struct Options {
    std::uint64_t seed = 0;
    double sandwich_threshold_grid = 0.005;
    double sandwich_c_grid = 0.001;
};

// One function per acceptance criterion.
std::vector<Check> check_optimal_table();                          // 1
std::vector<Check> check_uniform_law();                            // 2
std::vector<Check> check_badge_presets();                          // 3
std::vector<Check> check_gamma_bounds();                           // 4
std::vector<Check> check_margins();                                // 5
std::vector<Check> check_interior_bin_certificates(std::uint64_t seed); // 6
std::vector<Check> check_last_bin_certificates(std::uint64_t seed);     // 7
std::vector<Check> check_ratio_upper_bound(std::uint64_t seed);         // 8
std::vector<Check> check_full_info_optimality(std::uint64_t seed);      // 9
std::vector<Check> check_envelope_properties(std::uint64_t seed);       // 10
std::vector<Check> check_single_crossing();                             // 11
std::vector<Check> check_quality_partition_limit(std::uint64_t seed);   // 12
std::vector<Check> check_sandwich_table(const Options& opts);           // 13
std::vector<Check> check_separable_chain(std::uint64_t seed);           // 14
std::vector<Check> check_equalization();                                // 15

// Module-invariant property suites (Bayes plausibility, envelope/oracle
// agreement, solver monotonicity, hinge tightness, ...).
std::vector<Check> check_module_properties(std::uint64_t seed);

// Feasibility sweep around the optimum (bounds suite extra).
std::vector<Check> check_feasibility();

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite; throws UnknownSuite for anything else.
SuiteResult run_suite(const std::string& name, const Options& opts);

void print_checks(std::ostream& out, const std::vector<Check>& checks);
void print_suite(std::ostream& out, const SuiteResult& result);

} // namespace rdl::verify
