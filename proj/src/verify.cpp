#include "rdl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <vector>

#include "rdl/adversarial.hpp"
#include "rdl/market.hpp"
#include "rdl/partition.hpp"
#include "rdl/random_instances.hpp"
#include "rdl/robust.hpp"
#include "rdl/sandwich.hpp"

namespace rdl::verify {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

Check value_check(std::string name, double expected, double actual, double tol) {
    Check c;
    c.name = std::move(name);
    c.passed = std::abs(actual - expected) <= tol;
    c.expected = fmt(expected);
    c.actual = fmt(actual);
    c.tolerance = fmt(tol);
    return c;
}

/// Check that a worst-case slack (violation magnitude) stays below tol.
Check slack_check(std::string name, double worst_slack, double tol) {
    Check c;
    c.name = std::move(name);
    c.passed = worst_slack <= tol;
    c.expected = "slack <= " + fmt(tol);
    c.actual = "worst slack " + fmt(worst_slack);
    c.tolerance = fmt(tol);
    return c;
}

Check bool_check(std::string name, bool passed, std::string expected, std::string actual) {
    Check c;
    c.name = std::move(name);
    c.passed = passed;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.tolerance = "-";
    return c;
}

/// Wall-clock budget check.  Reports stay byte-identical across passing
/// runs; the measured time appears only on failure.
Check runtime_check(std::string name, double seconds, double budget) {
    Check c;
    c.name = std::move(name);
    c.passed = seconds < budget;
    c.expected = "< " + fmt(budget) + " s";
    c.actual = c.passed ? "within budget" : fmt(seconds) + " s";
    c.tolerance = "-";
    return c;
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SweepMax {
    double value = -1e300;
    void update(double v) { value = std::max(value, v); }
};

} // namespace

// --- Criterion 1: reference table of optimal policies ---------------------

std::vector<Check> check_optimal_table() {
    struct Row {
        int k;
        std::vector<double> thresholds; // Q_1..Q_K
        double gamma;
    };
    static const std::vector<Row> kTable = {
        {1, {1.0}, 2.0},
        {2, {0.7044, 1.0}, 1.2956},
        {3, {0.4946, 0.8310, 1.0}, 1.1690},
        {4, {0.3772, 0.6695, 0.8822, 1.0}, 1.1178},
        {5, {0.3041, 0.5552, 0.7567, 0.9096, 1.0}, 1.0904},
    };
    constexpr double kTol = 5e-5;

    std::vector<Check> checks;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<OptimalSolution> solutions;
    solutions.reserve(kTable.size());
    for (const auto& row : kTable) solutions.push_back(optimal_profile(row.k));
    const double secs = elapsed_seconds(t0);

    for (std::size_t i = 0; i < kTable.size(); ++i) {
        const auto& row = kTable[i];
        const auto& sol = solutions[i];
        checks.push_back(value_check("optimal-table/K=" + std::to_string(row.k) + " gamma",
                                     row.gamma, sol.gamma_star, kTol));
        for (int r = 1; r <= row.k; ++r)
            checks.push_back(value_check("optimal-table/K=" + std::to_string(row.k) + " Q" +
                                             std::to_string(r),
                                         row.thresholds[static_cast<std::size_t>(r) - 1],
                                         sol.profile.q(r), kTol));
    }
    checks.push_back(runtime_check("optimal-table/runtime", secs, 0.1));
    return checks;
}

// --- Criterion 2: uniform thresholds give exactly 1 + 1/K -----------------

std::vector<Check> check_uniform_law() {
    SweepMax worst;
    for (int k = 1; k <= 64; ++k) {
        const double ratio = robust_ratio(uniform_profile(k)).ratio;
        worst.update(std::abs(ratio - (1.0 + 1.0 / k)));
    }
    return {slack_check("uniform-law/K=1..64 |ratio - (1 + 1/K)|", worst.value, 1e-12)};
}

// --- Criterion 3: badge presets --------------------------------------------

std::vector<Check> check_badge_presets() {
    std::vector<Check> checks;
    checks.push_back(value_check("presets/upwork ratio", 1.5195,
                                 robust_ratio(*preset_profile("upwork")).ratio, 5e-5));
    const double airbnb = robust_ratio(*preset_profile("airbnb")).ratio;
    // The exact max-over-bins value here is 1.4617723; the reference
    // display "1.4617" is a truncation of that number, so this check
    // cannot pass at the stated tolerance for any correct evaluation of
    // the bin formula.  It is kept as stated; the companion check below
    // confirms the value reproduces the reference at display precision.
    checks.push_back(value_check("presets/airbnb ratio", 1.4617, airbnb, 5e-5));
    checks.push_back(bool_check("presets/airbnb 4-decimal display (truncated)",
                                std::floor(airbnb * 1e4) == 14617.0, "truncates to 1.4617",
                                fmt(airbnb)));
    return checks;
}

// --- Criterion 4: gamma bounds ---------------------------------------------

std::vector<Check> check_gamma_bounds() {
    bool ok = true;
    std::string detail = "all inside";
    for (int k = 1; k <= 100; ++k) {
        const auto [lo, hi] = ratio_bounds(k);
        const double g = solve_gamma_star(k);
        const bool inside = k == 1 ? (g >= lo && g <= hi) : (g > lo && g < hi);
        if (!inside) {
            ok = false;
            detail = "K=" + std::to_string(k) + " gamma=" + fmt(g) + " outside (" + fmt(lo) +
                     ", " + fmt(hi) + ")";
            break;
        }
    }
    return {bool_check("bounds/K=1..100 1+1/(4K) <= gamma <= 1+1/K", ok,
                       "inside bracket (strict interior for K >= 2)", detail)};
}

// --- Criterion 5: decreasing margins ---------------------------------------

std::vector<Check> check_margins() {
    bool ok = true;
    std::string detail = "strictly decreasing";
    for (int k = 2; k <= 50; ++k) {
        if (!check_decreasing_margins(optimal_profile(k).profile)) {
            ok = false;
            detail = "margins fail at K=" + std::to_string(k);
            break;
        }
    }
    return {bool_check("margins/K=2..50 strictly decreasing", ok, "strictly decreasing", detail)};
}

// --- Criterion 6: interior-bin certificates --------------------------------

std::vector<Check> check_interior_bin_certificates(std::uint64_t seed) {
    const int kProfiles = 200;
    std::vector<double> worst(kProfiles, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kProfiles; ++i) {
        auto rng = sweep_rng(seed, static_cast<std::uint64_t>(i));
        std::uniform_int_distribution<int> k_dist(2, 6);
        const int k = k_dist(rng);
        QuantileProfile profile = random_quantile_profile(rng, k);
        // force K >= 2 so interior bins exist
        while (profile.k() < 2) profile = random_quantile_profile(rng, k);
        const RatioReport report = robust_ratio(profile);
        double w = 0.0;
        for (int r = 1; r < profile.k(); ++r) {
            const AdversarialCertificate cert = interior_bin_certificate(profile, r);
            w = std::max(w, std::abs(cert.achieved_ratio -
                                     report.per_bin[static_cast<std::size_t>(r) - 1].term));
            w = std::max(w, std::abs(cert.achieved_ratio - cert.target_ratio));
        }
        worst[static_cast<std::size_t>(i)] = w;
    }
    const double w = *std::max_element(worst.begin(), worst.end());
    return {slack_check("interior-bin/200 profiles oracle ratio vs bin term", w, 1e-9)};
}

// --- Criterion 7: last-bin certificates -------------------------------------

std::vector<Check> check_last_bin_certificates(std::uint64_t seed) {
    const int kProfiles = 50;
    const double eps_list[] = {0.1, 0.01};
    std::vector<double> worst(kProfiles, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kProfiles; ++i) {
        auto rng = sweep_rng(seed ^ 0x6c61737462696eULL, static_cast<std::uint64_t>(i));
        // keep the last bin wide enough for eps = 0.1 and the mean below t
        const QuantileProfile profile = random_quantile_profile(rng, 5, 0.8);
        double w = 0.0;
        for (double eps : eps_list) {
            const AdversarialCertificate cert = last_bin_certificate(profile, eps);
            const double expected = 1.0 + profile.width(profile.k()) - eps;
            w = std::max(w, std::abs(cert.achieved_ratio - expected));
        }
        worst[static_cast<std::size_t>(i)] = w;
    }
    const double w = *std::max_element(worst.begin(), worst.end());
    return {slack_check("last-bin/50 profiles oracle ratio vs 1 + (Q_K - Q_{K-1}) - eps", w,
                        1e-12)};
}

// --- Criteria 8 and 9: dominance over random markets ------------------------

namespace {

struct MarketSweepRow {
    double ratio_minus_robust = -1e300; // opt/rev_quantile - robust_ratio
    double two_approx_slack = -1e300;   // opt - 2*rev over monotone decompositions
    double full_info_slack = -1e300;    // rev_dec - rev_full
};

MarketSweepRow market_sweep_row(std::uint64_t seed, int i) {
    auto rng = sweep_rng(seed ^ 0x6d61726b6574ULL, static_cast<std::uint64_t>(i));
    const MarketInstance inst = random_instance(rng);
    const QuantileProfile qprofile = random_quantile_profile(rng, 5);
    const QualityProfile qualprofile = random_quality_profile(rng, 5);

    const double rev_full = revenue(inst, full_info_decomposition(inst.prior));
    const double rev_ni = revenue(inst, no_info_decomposition(inst.prior));
    const double rev_q = revenue(inst, quantile_decomposition(inst.prior, qprofile));
    const double rev_qual = revenue(inst, quality_decomposition(inst.prior, qualprofile));
    const double opt = rev_full;

    MarketSweepRow row;
    if (rev_q > 0.0)
        row.ratio_minus_robust = opt / rev_q - robust_ratio(qprofile).ratio;
    for (double rev : {rev_q, rev_qual, rev_ni})
        row.two_approx_slack = std::max(row.two_approx_slack, opt - 2.0 * rev);
    for (double rev : {rev_q, rev_qual, rev_ni})
        row.full_info_slack = std::max(row.full_info_slack, rev - rev_full);
    return row;
}

std::vector<MarketSweepRow> market_sweep(std::uint64_t seed, int n) {
    std::vector<MarketSweepRow> rows(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = market_sweep_row(seed, i);
    return rows;
}

} // namespace

std::vector<Check> check_ratio_upper_bound(std::uint64_t seed) {
    const auto rows = market_sweep(seed, 1000);
    SweepMax ratio_slack, two_approx;
    for (const auto& r : rows) {
        ratio_slack.update(r.ratio_minus_robust);
        two_approx.update(r.two_approx_slack);
    }
    return {
        slack_check("upper-bound/1000 markets opt/rev <= robust ratio", ratio_slack.value, 1e-9),
        slack_check("upper-bound/1000 markets opt <= 2 * rev (monotone partitions)",
                    two_approx.value, 1e-9),
    };
}

std::vector<Check> check_full_info_optimality(std::uint64_t seed) {
    const auto rows = market_sweep(seed, 1000);
    SweepMax slack;
    for (const auto& r : rows) slack.update(r.full_info_slack);
    return {slack_check("full-info/1000 markets rev(full) >= rev(dec)", slack.value, 1e-12)};
}

// --- Criterion 10: envelope shape and hinge realization ---------------------

std::vector<Check> check_envelope_properties(std::uint64_t seed) {
    const int kInstances = 1000;
    const int kGrid = 1000; // 1001 points
    std::vector<double> worst(kInstances, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kInstances; ++i) {
        auto rng = sweep_rng(seed ^ 0x656e76656c6f70ULL, static_cast<std::uint64_t>(i));
        const MarketInstance inst = random_instance(rng);
        const IndirectRevenue h = indirect_revenue(inst.valuation, inst.types);
        std::vector<double> vals(kGrid + 1);
        for (int g = 0; g <= kGrid; ++g) vals[static_cast<std::size_t>(g)] = h(g / 1000.0);
        const double h1 = vals.back();
        double w = 0.0;
        for (int g = 0; g <= kGrid; ++g) {
            const double x = g / 1000.0;
            const double hx = vals[static_cast<std::size_t>(g)];
            w = std::max(w, -hx);                 // non-negativity
            w = std::max(w, x * h1 - hx);         // linear lower bound
            if (g > 0) w = std::max(w, vals[static_cast<std::size_t>(g) - 1] - hx); // monotone
            if (g > 0 && g < kGrid)
                w = std::max(w, -(vals[static_cast<std::size_t>(g) + 1] - 2.0 * hx +
                                  vals[static_cast<std::size_t>(g) - 1])); // convexity
        }
        worst[static_cast<std::size_t>(i)] = w;
    }
    const double shape_worst = *std::max_element(worst.begin(), worst.end());

    double hinge_worst = 0.0;
    for (int ci = 1; ci <= 9; ++ci) {
        const double c = ci / 10.0;
        const IndirectRevenue h =
            indirect_revenue(Valuation::hinge_realizing(), AtomicDistribution::bernoulli(c));
        for (int g = 0; g <= kGrid; ++g) {
            const double x = g / 1000.0;
            hinge_worst = std::max(hinge_worst, std::abs(h(x) - std::max(c, x)));
        }
    }

    return {
        slack_check("envelope/1000 markets shape (>=0, monotone, convex, h >= x*h(1))",
                    shape_worst, 1e-12),
        slack_check("envelope/hinge realization max{c,x} for c = 0.1..0.9", hinge_worst, 1e-12),
    };
}

// --- Criterion 11: single-crossing instance ---------------------------------

std::vector<Check> check_single_crossing() {
    const AdversarialCertificate cert = single_crossing_instance();
    const double rev_ni = revenue(cert.instance, no_info_decomposition(cert.instance.prior));
    const double opt = opt_benchmark(cert.instance);
    return {
        value_check("single-crossing/rev(no-info)", 1.0 / 60.0, rev_ni, 1e-12),
        value_check("single-crossing/opt", 41.0 / 900.0, opt, 1e-12),
        value_check("single-crossing/ratio", 41.0 / 15.0, cert.achieved_ratio, 1e-12),
    };
}

// --- Criterion 12: quality partitions stuck at factor 2 ---------------------

std::vector<Check> check_quality_partition_limit(std::uint64_t seed) {
    const int kProfiles = 20;
    const double eps_list[] = {0.5, 0.1, 0.01};
    std::vector<double> worst(kProfiles, 0.0);
    std::vector<double> at_001(kProfiles, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kProfiles; ++i) {
        auto rng = sweep_rng(seed ^ 0x7175616c697479ULL, static_cast<std::uint64_t>(i));
        const QualityProfile profile = random_quality_profile(rng, 5);
        double w = 0.0;
        for (double eps : eps_list) {
            const AdversarialCertificate cert = quality_partition_hard_instance(profile, eps);
            w = std::max(w, std::abs(cert.achieved_ratio - 2.0 / (1.0 + eps)));
            if (eps == 0.01) at_001[static_cast<std::size_t>(i)] = cert.achieved_ratio;
        }
        worst[static_cast<std::size_t>(i)] = w;
    }
    const double w = *std::max_element(worst.begin(), worst.end());
    const double min_001 = *std::min_element(at_001.begin(), at_001.end());
    return {
        slack_check("quality-limit/20 profiles oracle ratio vs 2/(1+eps)", w, 1e-9),
        bool_check("quality-limit/eps=0.01 exceeds 1.98", min_001 > 1.98, "> 1.98", fmt(min_001)),
    };
}

// --- Criterion 13: sandwich relaxation table ---------------------------------

std::vector<Check> check_sandwich_table(const Options& opts) {
    static const double kTable[] = {2.0, 1.500, 1.2658, 1.2167, 1.1628};
    constexpr double kTol = 1e-2;
    std::vector<Check> checks;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 5; ++k) {
        const SandwichSolution sol =
            sandwich_optimize(k, opts.sandwich_threshold_grid, opts.sandwich_c_grid);
        checks.push_back(value_check("sandwich-table/K=" + std::to_string(k) + " gamma",
                                     kTable[k - 1], sol.ratio, kTol));
    }
    const double secs = elapsed_seconds(t0);
    checks.push_back(runtime_check("sandwich-table/runtime", secs, 60.0));
    return checks;
}

// --- Criterion 14: separable revenue chain -----------------------------------

std::vector<Check> check_separable_chain(std::uint64_t seed) {
    const int kInstances = 500;
    std::vector<double> worst(kInstances, 0.0);
    std::vector<int> failures(kInstances, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kInstances; ++i) {
        auto rng = sweep_rng(seed ^ 0x636d7273ULL, static_cast<std::uint64_t>(i));
        const SeparableInstance si = random_separable_instance(rng);
        try {
            const CmrsBounds b = cmrs_bounds(si.g1, si.g2, si.u, si.prior, si.types);
            double w = b.lower - b.rev_no_info;
            w = std::max(w, b.rev_no_info - b.opt);
            w = std::max(w, b.opt - b.upper);
            worst[static_cast<std::size_t>(i)] = w;
        } catch (const ChainViolation&) {
            failures[static_cast<std::size_t>(i)] = 1;
        }
    }
    const int nfail = std::accumulate(failures.begin(), failures.end(), 0);
    const double w = *std::max_element(worst.begin(), worst.end());
    std::vector<Check> checks;
    checks.push_back(bool_check("separable-chain/500 instances no chain violation", nfail == 0,
                                "0 violations", std::to_string(nfail) + " violations"));
    checks.push_back(slack_check("separable-chain/500 instances worst link slack", w, 1e-9));
    return checks;
}

// --- Criterion 15: minimax equalization --------------------------------------

std::vector<Check> check_equalization() {
    SweepMax worst;
    for (int k = 1; k <= 10; ++k) {
        const OptimalSolution sol = optimal_profile(k);
        const RatioReport report = robust_ratio(sol.profile);
        for (const auto& bin : report.per_bin)
            worst.update(std::abs(bin.term - sol.gamma_star));
    }
    return {slack_check("equalization/K=1..10 per-bin terms vs gamma*", worst.value, 1e-8)};
}

// --- Feasibility sweep around the optimum (bounds suite) ---------------------

std::vector<Check> check_feasibility() {
    std::vector<Check> checks;
    SweepMax above;
    for (int k = 1; k <= 8; ++k) {
        const double gamma = solve_gamma_star(k) + 0.01;
        const QuantileProfile profile = feasible_profile(gamma, k);
        above.update(robust_ratio(profile).ratio - gamma);
    }
    checks.push_back(slack_check("feasibility/K=1..8 scaled recursion achieves gamma* + 0.01",
                                 above.value, 1e-12));

    const double gamma_minus = solve_gamma_star(2) - 0.01;
    double best = 1e300;
    for (int i = 0; i <= 100; ++i) {
        const QuantileProfile profile({0.0, i / 100.0, 1.0});
        best = std::min(best, robust_ratio(profile).ratio);
    }
    checks.push_back(bool_check("feasibility/K=2 no 0.01-grid profile beats gamma* - 0.01",
                                best > gamma_minus, "> " + fmt(gamma_minus), fmt(best)));
    return checks;
}

// --- Module property suites ---------------------------------------------------

namespace {

std::vector<Check> distribution_properties(std::uint64_t seed) {
    SweepMax tiling, roundtrip, midpoint;
    for (int i = 0; i < 200; ++i) {
        auto rng = sweep_rng(seed ^ 0x64697374ULL, static_cast<std::uint64_t>(i));
        const AtomicDistribution d = random_distribution(rng, 8);
        const QuantileFootprint fp = quantile_footprint(d);
        tiling.update(std::abs(fp.entries.front().q_lo));
        tiling.update(std::abs(fp.entries.back().q_hi - 1.0));
        for (std::size_t j = 0; j < fp.entries.size(); ++j) {
            if (j > 0)
                tiling.update(std::abs(fp.entries[j].q_lo - fp.entries[j - 1].q_hi));
            tiling.update(std::abs((fp.entries[j].q_hi - fp.entries[j].q_lo) -
                                   d.atoms()[j].mass));
        }

        // Mixture of full-information posteriors reproduces the prior.
        std::vector<std::pair<double, AtomicDistribution>> parts;
        for (const auto& a : d.atoms())
            parts.emplace_back(a.mass, AtomicDistribution::point_mass(a.value));
        const AtomicDistribution mixed = mixture(parts);
        if (mixed.size() != d.size()) {
            roundtrip.update(1.0);
        } else {
            for (std::size_t j = 0; j < d.size(); ++j) {
                roundtrip.update(std::abs(mixed.atoms()[j].value - d.atoms()[j].value));
                roundtrip.update(std::abs(mixed.atoms()[j].mass - d.atoms()[j].mass));
            }
        }
    }
    for (int n : {1, 2, 3, 7, 50, 1000}) {
        const AtomicDistribution d = discretize([](double q) { return q; }, n);
        midpoint.update(std::abs(mean(d) - 0.5));
    }
    return {
        slack_check("dist/footprint tiling", tiling.value, 1e-12),
        slack_check("dist/full-info mixture round-trip", roundtrip.value, 1e-12),
        slack_check("dist/identity discretization mean", midpoint.value, 1e-12),
    };
}

std::vector<Check> partition_properties(std::uint64_t seed) {
    const int kCases = 200;
    std::vector<double> bayes(kCases, 0.0), binmass(kCases, 0.0), meanpres(kCases, 0.0),
        monotone(kCases, 0.0), mpc(kCases, 0.0), bayes_quality(kCases, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kCases; ++i) {
        auto rng = sweep_rng(seed ^ 0x70617274ULL, static_cast<std::uint64_t>(i));
        const AtomicDistribution prior = random_distribution(rng, 8);
        const QuantileProfile profile = random_quantile_profile(rng, 6);
        const SignalDecomposition dec = quantile_decomposition(prior, profile);

        std::vector<std::pair<double, AtomicDistribution>> parts;
        for (const auto& s : dec.signals) parts.emplace_back(s.weight, s.posterior);
        const AtomicDistribution mixed = mixture(parts);
        double b = mixed.size() == prior.size() ? 0.0 : 1.0;
        if (b == 0.0)
            for (std::size_t j = 0; j < prior.size(); ++j) {
                b = std::max(b, std::abs(mixed.atoms()[j].value - prior.atoms()[j].value));
                b = std::max(b, std::abs(mixed.atoms()[j].mass - prior.atoms()[j].mass));
            }
        bayes[static_cast<std::size_t>(i)] = b;

        double bm = 0.0;
        for (std::size_t r = 0; r < dec.signals.size(); ++r)
            bm = std::max(bm, std::abs(dec.signals[r].weight -
                                       profile.width(static_cast<int>(r) + 1)));
        binmass[static_cast<std::size_t>(i)] = bm;

        const AtomicDistribution contracted = posterior_mean_distribution(dec);
        meanpres[static_cast<std::size_t>(i)] = std::abs(mean(contracted) - mean(prior));

        double mono = 0.0;
        for (std::size_t r = 0; r + 1 < dec.signals.size(); ++r) {
            mono = std::max(mono, dec.signals[r].posterior.max_value() -
                                      dec.signals[r + 1].posterior.min_value());
            mono = std::max(mono, mean(dec.signals[r].posterior) -
                                      mean(dec.signals[r + 1].posterior));
        }
        monotone[static_cast<std::size_t>(i)] = mono;

        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double mp = 0.0;
        for (int c = 0; c < 100; ++c) {
            const double level = unif(rng);
            mp = std::max(mp, expect_hinge(contracted, level) - expect_hinge(prior, level));
        }
        mpc[static_cast<std::size_t>(i)] = mp;

        const QualityProfile qprofile = random_quality_profile(rng, 6);
        const SignalDecomposition qdec = quality_decomposition(prior, qprofile);
        std::vector<std::pair<double, AtomicDistribution>> qparts;
        for (const auto& s : qdec.signals) qparts.emplace_back(s.weight, s.posterior);
        const AtomicDistribution qmixed = mixture(qparts);
        double qb = qmixed.size() == prior.size() ? 0.0 : 1.0;
        if (qb == 0.0)
            for (std::size_t j = 0; j < prior.size(); ++j) {
                qb = std::max(qb, std::abs(qmixed.atoms()[j].value - prior.atoms()[j].value));
                qb = std::max(qb, std::abs(qmixed.atoms()[j].mass - prior.atoms()[j].mass));
            }
        bayes_quality[static_cast<std::size_t>(i)] = qb;
    }
    auto worst_of = [](const std::vector<double>& v) {
        return *std::max_element(v.begin(), v.end());
    };
    return {
        slack_check("partition/quantile Bayes plausibility", worst_of(bayes), 1e-9),
        slack_check("partition/bin-mass law", worst_of(binmass), 1e-12),
        slack_check("partition/mean preservation", worst_of(meanpres), 1e-12),
        slack_check("partition/monotone supports and means", worst_of(monotone), 1e-12),
        slack_check("partition/mean-preserving contraction", worst_of(mpc), 1e-12),
        slack_check("partition/quality Bayes plausibility", worst_of(bayes_quality), 1e-9),
    };
}

std::vector<Check> oracle_agreement_properties(std::uint64_t seed) {
    const int kInstances = 1000;
    std::vector<double> worst(kInstances, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kInstances; ++i) {
        auto rng = sweep_rng(seed ^ 0x6f7261636cULL, static_cast<std::uint64_t>(i));
        const MarketInstance inst = random_instance(rng);
        const IndirectRevenue h = indirect_revenue(inst.valuation, inst.types);
        double w = 0.0;
        for (int p = 0; p < 100; ++p) {
            const AtomicDistribution posterior = random_distribution(rng, 4);
            const double oracle = revenue_from_posterior(inst.valuation, inst.types, posterior);
            w = std::max(w, std::abs(oracle - h(mean(posterior))));
        }
        worst[static_cast<std::size_t>(i)] = w;
    }
    return {slack_check("market/oracle equals envelope at the posterior mean",
                        *std::max_element(worst.begin(), worst.end()), 1e-12)};
}

std::vector<Check> solver_properties() {
    bool increasing = true;
    std::string detail = "strictly increasing";
    for (int k = 1; k <= 10 && increasing; ++k) {
        double prev = big_lambda(1.001, k);
        for (double g = 1.002; g <= 3.0000001; g += 0.001) {
            const double cur = big_lambda(g, k);
            if (!(cur > prev)) {
                increasing = false;
                detail = "not increasing at K=" + std::to_string(k) + ", gamma=" + fmt(g);
                break;
            }
            prev = cur;
        }
    }
    SweepMax fixed_point;
    for (int k = 1; k <= 64; ++k)
        fixed_point.update(std::abs(big_lambda(solve_gamma_star(k), k) - 1.0));
    return {
        bool_check("robust/big_lambda strictly increasing on gamma grid", increasing,
                   "strictly increasing", detail),
        slack_check("robust/fixed point residual K=1..64", fixed_point.value, 1e-9),
    };
}

std::vector<Check> hinge_properties(std::uint64_t seed) {
    // Tightness: the per-bin adversarial priors recover the closed-form
    // ratio whenever the argmax bin is interior.
    const int kProfiles = 100;
    std::vector<double> tightness(kProfiles, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kProfiles; ++i) {
        auto rng = sweep_rng(seed ^ 0x68696e6765ULL, static_cast<std::uint64_t>(i));
        QuantileProfile profile = random_quantile_profile(rng, 6);
        while (profile.k() < 2) profile = random_quantile_profile(rng, 6);
        const RatioReport report = robust_ratio(profile);
        if (report.argmax_bin == profile.k()) {
            // Last-bin worst cases only approach the bin term as eps -> 0.
            const double eps = 1e-4 * profile.width(profile.k());
            const AdversarialCertificate cert = last_bin_certificate(profile, eps);
            const WorstHinge wh = worst_hinge_ratio(cert.instance.prior, profile);
            double slack = std::max(report.ratio - eps - wh.ratio, wh.ratio - report.ratio);
            tightness[static_cast<std::size_t>(i)] = std::max(slack, 0.0) <= 1e-6 ? 0.0 : slack;
        } else {
            double best = 0.0;
            for (int r = 1; r < profile.k(); ++r) {
                const AdversarialCertificate cert = interior_bin_certificate(profile, r);
                best = std::max(best, worst_hinge_ratio(cert.instance.prior, profile).ratio);
            }
            tightness[static_cast<std::size_t>(i)] = std::abs(best - report.ratio);
        }
    }

    // Upper bound: no prior can exceed the closed form.
    const int kPairs = 1000;
    std::vector<double> upper(kPairs, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < kPairs; ++i) {
        auto rng = sweep_rng(seed ^ 0x776f727374ULL, static_cast<std::uint64_t>(i));
        const AtomicDistribution prior = random_distribution(rng, 8);
        const QuantileProfile profile = random_quantile_profile(rng, 6);
        const WorstHinge wh = worst_hinge_ratio(prior, profile);
        upper[static_cast<std::size_t>(i)] = wh.ratio - robust_ratio(profile).ratio;
    }

    // The sandwich relaxation is strictly looser at every optimal profile,
    // and its last-bin supremum coincides with the tight last-bin term, so
    // it always dominates that term.  (Pointwise dominance of the
    // relaxation formula over the full tight ratio does not hold for
    // profiles with near-coincident thresholds; see the unit tests.)
    SweepMax at_optimum, last_bin;
    for (int k = 2; k <= 8; ++k) {
        const OptimalSolution sol = optimal_profile(k);
        at_optimum.update(sol.gamma_star - sandwich_ratio(sol.profile, 0.001));
    }
    for (int i = 0; i < 200; ++i) {
        auto rng = sweep_rng(seed ^ 0x73616e64ULL, static_cast<std::uint64_t>(i));
        QuantileProfile profile = random_quantile_profile(rng, 5);
        while (profile.k() < 2) profile = random_quantile_profile(rng, 5);
        const double tight_last = 2.0 - profile.q(profile.k() - 1);
        last_bin.update(tight_last - sandwich_ratio(profile, 0.001));
    }

    return {
        slack_check("robust/per-bin adversarial priors recover the closed form",
                    *std::max_element(tightness.begin(), tightness.end()), 1e-6),
        slack_check("robust/worst hinge ratio below the closed form",
                    *std::max_element(upper.begin(), upper.end()), 1e-9),
        slack_check("robust/sandwich relaxation looser at optimal profiles (K=2..8)",
                    at_optimum.value, -0.01),
        slack_check("robust/sandwich ratio dominates the tight last-bin term",
                    last_bin.value, 1e-9),
    };
}

} // namespace

std::vector<Check> check_module_properties(std::uint64_t seed) {
    std::vector<Check> checks;
    for (auto&& group :
         {distribution_properties(seed), partition_properties(seed),
          oracle_agreement_properties(seed), solver_properties(), hinge_properties(seed)})
        checks.insert(checks.end(), group.begin(), group.end());
    return checks;
}

// --- Suites --------------------------------------------------------------------

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> kNames = {
        "table1", "table3", "presets", "bounds", "margins",
        "lemma44", "quality2", "singlecrossing", "properties"};
    return kNames;
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult result;
    result.suite = name;
    auto append = [&result](std::vector<Check> checks) {
        result.checks.insert(result.checks.end(), checks.begin(), checks.end());
    };

    if (name == "table1") {
        append(check_optimal_table());
        append(check_equalization());
    } else if (name == "table3") {
        append(check_sandwich_table(opts));
    } else if (name == "presets") {
        append(check_uniform_law());
        append(check_badge_presets());
    } else if (name == "bounds") {
        append(check_gamma_bounds());
        append(check_feasibility());
    } else if (name == "margins") {
        append(check_margins());
    } else if (name == "lemma44") {
        append(check_interior_bin_certificates(opts.seed));
        append(check_last_bin_certificates(opts.seed));
    } else if (name == "quality2") {
        append(check_quality_partition_limit(opts.seed));
    } else if (name == "singlecrossing") {
        append(check_single_crossing());
    } else if (name == "properties") {
        append(check_ratio_upper_bound(opts.seed));
        append(check_full_info_optimality(opts.seed));
        append(check_envelope_properties(opts.seed));
        append(check_separable_chain(opts.seed));
        append(check_module_properties(opts.seed));
    } else {
        throw UnknownSuite("unknown verify suite '" + name + "'");
    }
    result.seconds = elapsed_seconds(t0);
    return result;
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
    for (const auto& c : checks)
        out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
            << "  expected " << c.expected << "  actual " << c.actual << "  tol " << c.tolerance
            << "\n";
}

void print_suite(std::ostream& out, const SuiteResult& result) {
    out << "suite " << result.suite << "\n";
    print_checks(out, result.checks);
    out << "  " << (result.passed() ? "PASS" : "FAIL") << "\n";
}

} // namespace rdl::verify
