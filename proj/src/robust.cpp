#include "rdl/robust.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdl/partition.hpp"

namespace rdl {

double lambda_step(double z, double gamma) {
    if (z < 0.0) throw NegativeInput("lambda_step requires z >= 0, got " + std::to_string(z));
    if (gamma < 1.0) throw NegativeInput("lambda_step requires gamma >= 1, got " + std::to_string(gamma));
    double s = 1.0 + std::sqrt(z);
    return z + (gamma - 1.0) * s * s;
}

double big_lambda(double gamma, int k) {
    if (k < 1) throw InvariantViolation("big_lambda requires k >= 1");
    double z = 0.0;
    for (int i = 0; i < k; ++i) z = lambda_step(z, gamma);
    return z;
}

std::pair<double, double> ratio_bounds(int k) {
    if (k < 1) throw InvariantViolation("ratio_bounds requires k >= 1");
    return {1.0 + 1.0 / (4.0 * k), 1.0 + 1.0 / k};
}

double solve_gamma_star(int k, double tol) {
    if (k < 1) throw InvariantViolation("solve_gamma_star requires k >= 1");
    if (!(tol > 0.0)) throw InvariantViolation("solve_gamma_star requires tol > 0");
    auto [lo, hi] = ratio_bounds(k);
    const double f_lo = big_lambda(lo, k) - 1.0;
    const double f_hi = big_lambda(hi, k) - 1.0;
    if (f_lo > 0.0 || f_hi < 0.0)
        throw BracketFailure("big_lambda does not bracket 1 on [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi; // K = 1: the root is the bracket edge, exactly
    // big_lambda is strictly increasing in gamma; plain bisection also
    // converges when the root sits on the bracket edge (K = 1).
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket at floating resolution
        (big_lambda(mid, k) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

OptimalSolution optimal_profile(int k, double tol) {
    auto run_recursion = [k](double gamma) {
        std::vector<double> t(static_cast<std::size_t>(k) + 1);
        t[static_cast<std::size_t>(k)] = 1.0;
        double z = 0.0; // z = 1 - Q_r, walked backwards
        for (int r = k; r >= 1; --r) {
            z = lambda_step(z, gamma);
            t[static_cast<std::size_t>(r) - 1] = 1.0 - z;
        }
        return t;
    };

    double gamma = solve_gamma_star(k, tol);
    std::vector<double> t = run_recursion(gamma);
    if (std::abs(t.front()) > 1e-10) {
        // Residual too large for the recursion-consistency guarantee:
        // re-solve at floating-point bracket resolution before declaring
        // the recursion inconsistent.
        gamma = solve_gamma_star(k, 1e-300);
        t = run_recursion(gamma);
    }
    const double q0 = t.front();
    if (std::abs(q0) > 1e-9)
        throw RecursionInconsistency("recursion residual Q_0 = " + std::to_string(q0));
    t.front() = 0.0;
    return {gamma, QuantileProfile(std::move(t))};
}

namespace {

double bin_term(double q_prev, double q_cur) {
    double s = 1.0 + std::sqrt(1.0 - q_cur);
    return 1.0 + (q_cur - q_prev) / (s * s);
}

} // namespace

RatioReport robust_ratio(const QuantileProfile& profile) {
    RatioReport report;
    report.per_bin.reserve(static_cast<std::size_t>(profile.k()));
    for (int r = 1; r <= profile.k(); ++r) {
        double term = bin_term(profile.q(r - 1), profile.q(r));
        report.per_bin.push_back({r, term});
        if (term > report.ratio) {
            report.ratio = term;
            report.argmax_bin = r;
        }
    }
    return report;
}

bool check_decreasing_margins(const QuantileProfile& profile) {
    for (int r = 1; r <= profile.k() - 1; ++r)
        if (!(profile.width(r) > profile.width(r + 1))) return false;
    return true;
}

QuantileProfile feasible_profile(double gamma, int k) {
    if (k < 1) throw InvariantViolation("feasible_profile requires k >= 1");
    if (gamma <= 1.0) throw InvariantViolation("feasible_profile requires gamma > 1");
    std::vector<double> s(static_cast<std::size_t>(k) + 1);
    s[static_cast<std::size_t>(k)] = 0.0;
    for (int r = k; r >= 1; --r)
        s[static_cast<std::size_t>(r) - 1] = lambda_step(s[static_cast<std::size_t>(r)], gamma);
    std::vector<double> t(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r)
        t[static_cast<std::size_t>(r)] = 1.0 - s[static_cast<std::size_t>(r)] / s.front();
    return QuantileProfile(std::move(t));
}

double hinge_ratio(const AtomicDistribution& prior, const QuantileProfile& profile, double c) {
    if (c < 0.0 || c > 1.0) throw OutOfRange("hinge level must lie in [0,1]");
    const AtomicDistribution contracted =
        posterior_mean_distribution(quantile_decomposition(prior, profile));
    const double denom = expect_hinge(contracted, c);
    if (denom <= 0.0) return 1.0; // both sides vanish only at the delta_0, c = 0 corner
    return expect_hinge(prior, c) / denom;
}

namespace {

/// Golden-section maximization on [lo, hi]; the objective is unimodal or
/// monotone on every interval we pass in, so this converges to the
/// interval max either way.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

WorstHinge worst_hinge_ratio(const AtomicDistribution& prior, const QuantileProfile& profile) {
    const AtomicDistribution contracted =
        posterior_mean_distribution(quantile_decomposition(prior, profile));

    std::vector<double> candidates = {0.0, 1.0};
    for (const auto& a : prior.atoms()) candidates.push_back(a.value);
    for (const auto& a : contracted.atoms()) candidates.push_back(a.value);
    for (int r = 1; r <= profile.k(); ++r) {
        double root = std::sqrt(1.0 - profile.q(r));
        double z_star = root / (1.0 + root);
        candidates.push_back(z_star * value_at_quantile(prior, profile.q(r)));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto objective = [&](double c) {
        const double denom = expect_hinge(contracted, c);
        if (denom <= 0.0) return 1.0;
        return expect_hinge(prior, c) / denom;
    };

    WorstHinge best{objective(candidates.front()), candidates.front()};
    auto consider = [&](double c) {
        double v = objective(c);
        if (v > best.ratio) best = {v, c};
    };
    for (double c : candidates) consider(c);
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
        double c = golden_max(objective, candidates[i], candidates[i + 1], 1e-10);
        consider(c);
    }
    return best;
}

} // namespace rdl
