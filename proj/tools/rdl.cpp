#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rdl/adversarial.hpp"
#include "rdl/json_io.hpp"
#include "rdl/market.hpp"
#include "rdl/partition.hpp"
#include "rdl/robust.hpp"
#include "rdl/sandwich.hpp"
#include "rdl/verify.hpp"

namespace {

using rdl::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputSettings {
    std::string format; // json | csv | text
    std::string out_path;
    std::string precision = "4";

    bool full() const { return precision == "full"; }
    int digits() const { return full() ? 17 : std::max(0, std::atoi(precision.c_str())); }
};

std::string fmt_num(double v, const OutputSettings& s) {
    char buf[64];
    if (s.full()) std::snprintf(buf, sizeof(buf), "%.17g", v);
    else std::snprintf(buf, sizeof(buf), "%.*f", s.digits(), v);
    return buf;
}

void resolve_format(OutputSettings& s) {
    if (s.format.empty()) {
        const char* env = std::getenv("RDL_DEFAULT_FORMAT");
        s.format = env ? env : "text";
    }
    if (s.format != "json" && s.format != "csv" && s.format != "text")
        throw UsageError("unknown format '" + s.format + "' (expected json, csv or text)");
    if (!s.full() && s.digits() <= 0)
        throw UsageError("precision must be a positive digit count or 'full'");
}

void emit(const OutputSettings& s, const std::string& payload) {
    if (s.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(s.out_path);
    if (!out) throw rdl::ParseError("cannot write '" + s.out_path + "'");
    out << payload;
}

std::string csv_threshold_table(const std::vector<double>& thresholds, double gamma,
                                const OutputSettings& s) {
    std::ostringstream out;
    const int k = static_cast<int>(thresholds.size()) - 1;
    out << "K";
    for (int r = 1; r <= k; ++r) out << ",Q_" << r;
    out << ",gamma,inverse_gamma\n" << k;
    for (int r = 1; r <= k; ++r) out << "," << fmt_num(thresholds[static_cast<std::size_t>(r)], s);
    out << "," << fmt_num(gamma, s) << "," << fmt_num(1.0 / gamma, s) << "\n";
    return out.str();
}

rdl::ProfileSpec profile_from_flags(const std::string& thresholds, const std::string& preset) {
    if (!thresholds.empty() && !preset.empty())
        throw UsageError("--thresholds and --preset are mutually exclusive");
    if (thresholds.empty() && preset.empty())
        throw UsageError("one of --thresholds or --preset is required");
    return rdl::parse_profile(thresholds.empty() ? preset : thresholds);
}

// --- optimal ----------------------------------------------------------------

int run_optimal(int k, double tol, const OutputSettings& s) {
    const rdl::OptimalSolution sol = rdl::optimal_profile(k, tol);
    const rdl::RatioReport report = rdl::robust_ratio(sol.profile);

    if (s.format == "json") {
        Json j = {{"gamma_star", sol.gamma_star},
                  {"thresholds", sol.profile.thresholds()},
                  {"per_bin", rdl::to_json(report)["per_bin"]},
                  {"argmax_bin", report.argmax_bin}};
        emit(s, j.dump(2) + "\n");
    } else if (s.format == "csv") {
        emit(s, csv_threshold_table(sol.profile.thresholds(), sol.gamma_star, s));
    } else {
        std::ostringstream out;
        out << "K = " << k << "\n";
        out << "gamma = " << fmt_num(sol.gamma_star, s) << " (1/gamma = "
            << fmt_num(1.0 / sol.gamma_star, s) << ")\n";
        out << "thresholds =";
        for (double q : sol.profile.thresholds()) out << " " << fmt_num(q, s);
        out << "\n";
        emit(s, out.str());
    }
    return 0;
}

// --- evaluate ---------------------------------------------------------------

int run_evaluate(const std::string& thresholds, const std::string& preset,
                 const OutputSettings& s) {
    const rdl::ProfileSpec spec = profile_from_flags(thresholds, preset);

    if (std::holds_alternative<rdl::QualityProfile>(spec)) {
        // Every quality partition has worst-case competitive ratio 2,
        // independent of its thresholds and splits.
        const double ratio = 2.0;
        if (s.format == "json") {
            Json j = {{"ratio", ratio},
                      {"note", "every quality partition has robust competitive ratio 2"}};
            emit(s, j.dump(2) + "\n");
        } else if (s.format == "csv") {
            emit(s, "ratio\n" + fmt_num(ratio, s) + "\n");
        } else {
            emit(s, "ratio = " + fmt_num(ratio, s) +
                        " (every quality partition has robust competitive ratio 2)\n");
        }
        return 0;
    }

    const auto& profile = std::get<rdl::QuantileProfile>(spec);
    const rdl::RatioReport report = rdl::robust_ratio(profile);
    if (s.format == "json") {
        Json j = rdl::to_json(report);
        j["thresholds"] = profile.thresholds();
        emit(s, j.dump(2) + "\n");
    } else if (s.format == "csv") {
        emit(s, csv_threshold_table(profile.thresholds(), report.ratio, s));
    } else {
        std::ostringstream out;
        for (const auto& b : report.per_bin)
            out << "bin " << b.r << ": term = " << fmt_num(b.term, s) << "\n";
        out << "ratio = " << fmt_num(report.ratio, s) << " (argmax bin " << report.argmax_bin
            << ")\n";
        emit(s, out.str());
    }
    return 0;
}

// --- adversarial -------------------------------------------------------------

int run_adversarial(const std::string& thresholds, const std::string& preset, int bin,
                    double eps, double t, const OutputSettings& s) {
    const rdl::ProfileSpec spec = profile_from_flags(thresholds, preset);

    const rdl::AdversarialCertificate cert = [&] {
        if (std::holds_alternative<rdl::QualityProfile>(spec)) {
            if (eps <= 0.0)
                throw UsageError("quality profiles require --eps for the hard instance");
            return rdl::quality_partition_hard_instance(std::get<rdl::QualityProfile>(spec),
                                                        eps);
        }
        const auto& profile = std::get<rdl::QuantileProfile>(spec);
        if (bin > 0 && eps > 0.0) throw UsageError("--bin and --eps are mutually exclusive");
        if (bin > 0) return rdl::interior_bin_certificate(profile, bin);
        if (eps > 0.0) return rdl::last_bin_certificate(profile, eps, t);
        throw UsageError("one of --bin or --eps is required");
    }();

    if (s.format == "json") {
        emit(s, rdl::to_json(cert).dump(2) + "\n");
    } else if (s.format == "csv") {
        emit(s, "construction,target_ratio,achieved_ratio\n" +
                    rdl::construction_tag(cert.construction) + "," +
                    fmt_num(cert.target_ratio, s) + "," + fmt_num(cert.achieved_ratio, s) + "\n");
    } else {
        std::ostringstream out;
        out << "construction = " << rdl::construction_tag(cert.construction) << "\n";
        out << "target ratio = " << fmt_num(cert.target_ratio, s) << "\n";
        out << "achieved ratio = " << fmt_num(cert.achieved_ratio, s) << "\n";
        emit(s, out.str());
    }
    return 0;
}

// --- simulate ------------------------------------------------------------------

int run_simulate(const std::string& instance_path, const std::string& policy,
                 const OutputSettings& s) {
    if (instance_path.empty()) throw UsageError("--instance is required");
    const rdl::MarketInstance instance = rdl::load_instance(instance_path);

    rdl::SignalDecomposition dec;
    std::string tag;
    if (policy.empty() || policy == "none") {
        dec = rdl::no_info_decomposition(instance.prior);
        tag = "no_info";
    } else if (policy == "full") {
        dec = rdl::full_info_decomposition(instance.prior);
        tag = "full_info";
    } else {
        const rdl::ProfileSpec spec = rdl::parse_profile(policy);
        if (std::holds_alternative<rdl::QuantileProfile>(spec)) {
            dec = rdl::quantile_decomposition(instance.prior,
                                              std::get<rdl::QuantileProfile>(spec));
            tag = "quantile";
        } else {
            dec = rdl::quality_decomposition(instance.prior,
                                             std::get<rdl::QualityProfile>(spec));
            tag = "quality";
        }
    }

    const double rev = rdl::revenue(instance, dec);
    const double opt = rdl::opt_benchmark(instance);
    const double ratio = rev > 0.0 ? opt / rev
                                   : (opt > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);

    if (s.format == "json") {
        Json j = {{"policy", tag}, {"rev", rev}, {"opt", opt}, {"ratio", ratio}};
        emit(s, j.dump(2) + "\n");
    } else if (s.format == "csv") {
        emit(s, "policy,rev,opt,ratio\n" + tag + "," + fmt_num(rev, s) + "," + fmt_num(opt, s) +
                    "," + fmt_num(ratio, s) + "\n");
    } else {
        char buf[256];
        if (s.full()) {
            std::snprintf(buf, sizeof(buf), "rev_%s = %.17g, opt = %.17g, ratio = %.17g\n",
                          tag.c_str(), rev, opt, ratio);
        } else {
            std::snprintf(buf, sizeof(buf), "rev_%s = %.6f, opt = %.6f, ratio = %.4f\n",
                          tag.c_str(), rev, opt, ratio);
        }
        emit(s, buf);
    }
    return 0;
}

// --- sandwich --------------------------------------------------------------------

int run_sandwich(int k, double grid_thresholds, double grid_c, const OutputSettings& s) {
    const rdl::SandwichSolution sol = rdl::sandwich_optimize(k, grid_thresholds, grid_c);
    if (s.format == "json") {
        Json j = {{"thresholds", sol.profile.thresholds()}, {"gamma", sol.ratio}};
        emit(s, j.dump(2) + "\n");
    } else if (s.format == "csv") {
        emit(s, csv_threshold_table(sol.profile.thresholds(), sol.ratio, s));
    } else {
        std::ostringstream out;
        out << "K = " << k << "\n";
        out << "gamma = " << fmt_num(sol.ratio, s) << "\n";
        out << "thresholds =";
        for (double q : sol.profile.thresholds()) out << " " << fmt_num(q, s);
        out << "\n";
        emit(s, out.str());
    }
    return 0;
}

// --- verify ----------------------------------------------------------------------

int run_verify(std::vector<std::string> suites, std::uint64_t seed, double grid_thresholds,
               double grid_c, const OutputSettings& s) {
    if (suites.empty()) suites = rdl::verify::suite_names();
    rdl::verify::Options opts;
    opts.seed = seed;
    opts.sandwich_threshold_grid = grid_thresholds;
    opts.sandwich_c_grid = grid_c;

    std::vector<rdl::verify::SuiteResult> results;
    results.reserve(suites.size());
    for (const auto& name : suites) {
        results.push_back(rdl::verify::run_suite(name, opts));
        // timing is diagnostic only; reports stay byte-identical
        std::fprintf(stderr, "suite %s finished in %.3f s\n", name.c_str(),
                     results.back().seconds);
    }
    const bool all_passed =
        std::all_of(results.begin(), results.end(),
                    [](const rdl::verify::SuiteResult& r) { return r.passed(); });

    if (s.format == "json") {
        Json out = Json::array();
        for (const auto& r : results) {
            Json checks = Json::array();
            for (const auto& c : r.checks)
                checks.push_back({{"name", c.name},
                                  {"passed", c.passed},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"tolerance", c.tolerance}});
            out.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
        }
        emit(s, out.dump(2) + "\n");
    } else if (s.format == "csv") {
        std::ostringstream out;
        out << "suite,check,passed,expected,actual,tolerance\n";
        for (const auto& r : results)
            for (const auto& c : r.checks)
                out << r.suite << ",\"" << c.name << "\"," << (c.passed ? "1" : "0") << ",\""
                    << c.expected << "\",\"" << c.actual << "\",\"" << c.tolerance << "\"\n";
        emit(s, out.str());
    } else {
        std::ostringstream out;
        for (const auto& r : results) rdl::verify::print_suite(out, r);
        out << (all_passed ? "all suites passed" : "some checks failed") << "\n";
        emit(s, out.str());
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust quantile-partition disclosure policies: solver, evaluator and "
                 "verification suites"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputSettings settings;
    app.add_option("--format", settings.format, "output format: json, csv or text");
    app.add_option("--out", settings.out_path, "write the report to this file");
    app.add_option("--precision", settings.precision,
                   "decimal places for csv/text output, or 'full'");

    // Output options live on the parent; let them fall through from
    // subcommand argument lists.
    int k = 1;
    double tol = 1e-12;
    std::string thresholds, preset, instance_path, policy;
    int bin = 0;
    double eps = 0.0, t_point = 0.5;
    double grid_thresholds = 0.005, grid_c = 0.001;
    std::uint64_t seed = 0;
    std::vector<std::string> suites;

    auto* cmd_optimal = app.add_subcommand("optimal", "solve for the optimal robust policy");
    cmd_optimal->add_option("--k", k, "number of signals")->required();
    cmd_optimal->add_option("--tol", tol, "solver bracket tolerance");

    auto* cmd_evaluate =
        app.add_subcommand("evaluate", "robust competitive ratio of a threshold profile");
    cmd_evaluate->add_option("--thresholds", thresholds,
                             "comma-separated quantile thresholds, or a profile JSON file");
    cmd_evaluate->add_option("--preset", preset, "uniform:K, upwork or airbnb");

    auto* cmd_adversarial =
        app.add_subcommand("adversarial", "construct a worst-case market certificate");
    cmd_adversarial->add_option("--thresholds", thresholds,
                                "comma-separated quantile thresholds, or a profile JSON file");
    cmd_adversarial->add_option("--preset", preset, "uniform:K, upwork or airbnb");
    cmd_adversarial->add_option("--bin", bin, "target an interior bin r < K");
    cmd_adversarial->add_option("--eps", eps, "target the last bin with slack eps");
    cmd_adversarial->add_option("--t", t_point, "middle support point for the last-bin prior");

    auto* cmd_simulate = app.add_subcommand("simulate", "revenue of a policy on an instance");
    cmd_simulate->add_option("--instance", instance_path, "market instance JSON file")
        ->required();
    cmd_simulate->add_option("--policy", policy,
                             "none, full, a preset, thresholds, or a profile JSON file");

    auto* cmd_sandwich =
        app.add_subcommand("sandwich", "optimize the sandwich-relaxation ratio over profiles");
    cmd_sandwich->add_option("--k", k, "number of signals")->required();
    cmd_sandwich->add_option("--grid-thresholds", grid_thresholds, "threshold grid step");
    cmd_sandwich->add_option("--grid-c", grid_c, "hinge-level grid step");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("suites", suites,
                           "suites to run (default: all): table1 table3 presets bounds margins "
                           "lemma44 quality2 singlecrossing properties");
    cmd_verify->add_option("--seed", seed, "seed for the randomized property suites");
    cmd_verify->add_option("--grid-thresholds", grid_thresholds,
                           "threshold grid step for the table3 suite");
    cmd_verify->add_option("--grid-c", grid_c, "hinge-level grid step for the table3 suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        resolve_format(settings);
        if (app.got_subcommand(cmd_optimal)) return run_optimal(k, tol, settings);
        if (app.got_subcommand(cmd_evaluate)) return run_evaluate(thresholds, preset, settings);
        if (app.got_subcommand(cmd_adversarial))
            return run_adversarial(thresholds, preset, bin, eps, t_point, settings);
        if (app.got_subcommand(cmd_simulate)) return run_simulate(instance_path, policy, settings);
        if (app.got_subcommand(cmd_sandwich))
            return run_sandwich(k, grid_thresholds, grid_c, settings);
        if (app.got_subcommand(cmd_verify))
            return run_verify(suites, seed, grid_thresholds, grid_c, settings);
        std::cerr << "Usage: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "Usage: " << e.what() << "\n";
        return 2;
    } catch (const rdl::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
