#include "rdl/sandwich.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rdl/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdl {

namespace detail {

double sandwich_bin_value(double a, double b, double d, double c) {
    if (b >= 1.0) {
        // d is forced to 1; the quotient reduces to a + (2-c)(1-a).
        return a + (2.0 - c) * (1.0 - a);
    }
    const double num = c * a + (c * (1.0 - c) + c) * (b - a) + (1.0 + c) * (1.0 - b);
    const double den = c * b + (d - b) + (1.0 + c) * (1.0 - d);
    return num / den;
}

double sandwich_bin_sup(double a, double b, double d) {
    if (b >= 1.0) return 2.0 - a; // attained at c = 0
    const double beta = 1.0 - b;
    const double m = 1.0 + b - d;
    const double p = b - a;
    if (p <= 0.0) {
        // Zero-width bin: (c + beta) / (m*c + beta) is monotone in c.
        return std::max(1.0, (1.0 + beta) / (m + beta));
    }
    // Stationary point of the concave-quadratic over affine quotient:
    // p*m*c^2 + 2*p*beta*c - beta*(d - a) = 0.
    double best = std::max(sandwich_bin_value(a, b, d, 0.0), sandwich_bin_value(a, b, d, 1.0));
    const double disc = p * p * beta * beta + p * m * beta * (d - a);
    if (disc >= 0.0 && m > 0.0) {
        double c = (-p * beta + std::sqrt(disc)) / (p * m);
        if (c > 0.0 && c < 1.0) best = std::max(best, sandwich_bin_value(a, b, d, c));
    }
    return best;
}

namespace {

/// Golden-section refinement of the bin sup around the best grid cell.
double grid_sup(double a, double b, double d, double c_step) {
    const int n = std::max(1, static_cast<int>(std::llround(1.0 / c_step)));
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        double v = sandwich_bin_value(a, b, d, static_cast<double>(i) / n);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = static_cast<double>(std::max(0, best_i - 1)) / n;
    double hi = static_cast<double>(std::min(n, best_i + 1)) / n;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = sandwich_bin_value(a, b, d, x1);
    double f2 = sandwich_bin_value(a, b, d, x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = sandwich_bin_value(a, b, d, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = sandwich_bin_value(a, b, d, x1);
        }
    }
    return std::max(best, sandwich_bin_value(a, b, d, 0.5 * (lo + hi)));
}

} // namespace

} // namespace detail

double sandwich_bin_ratio(const QuantileProfile& profile, int r, double c) {
    if (r < 1 || r > profile.k())
        throw InvalidBin("bin index " + std::to_string(r) + " outside [1, K]");
    if (c < 0.0 || c > 1.0) throw OutOfRange("sandwich level must lie in [0,1]");
    const double d = r == profile.k() ? 1.0 : profile.q(r + 1);
    return detail::sandwich_bin_value(profile.q(r - 1), profile.q(r), d, c);
}

double sandwich_ratio(const QuantileProfile& profile, double c_grid) {
    if (!(c_grid > 0.0) || c_grid > 1.0)
        throw InvariantViolation("c grid step must lie in (0, 1]");
    double best = 0.0;
    for (int r = 1; r <= profile.k(); ++r) {
        const double d = r == profile.k() ? 1.0 : profile.q(r + 1);
        best = std::max(best, detail::grid_sup(profile.q(r - 1), profile.q(r), d, c_grid));
    }
    return best;
}

namespace {

struct DpResult {
    std::vector<double> thresholds;
};

/// Minimax recursion over threshold pairs.  State (i, j) holds the best
/// achievable max over finalized bins for a profile whose two most recent
/// thresholds are grid[i] <= grid[j]; placing the next threshold finalizes
/// one more bin, whose ratio depends on exactly three consecutive
/// thresholds.  This yields the same minimum as enumerating all grid
/// profiles.
template <bool Parallel>
DpResult optimize_on_grid(int k, int n) {
    const auto g = [n](int i) { return static_cast<double>(i) / n; };
    const int width = n + 1;
    const auto at = [width](int i, int j) { return static_cast<std::size_t>(i) * width + j; };

    if (k == 1) return {{0.0, 1.0}};

    constexpr double kInf = 1e100;
    std::vector<double> value(static_cast<std::size_t>(width) * width, kInf);
    // backptr[level][state]: the threshold index preceding the state pair.
    std::vector<std::vector<std::uint16_t>> backptr;

    // Bin 1 uses (0, Q_1, Q_2).
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
#endif
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            value[at(i, j)] = detail::sandwich_bin_sup(0.0, g(i), g(j));

    // Bins 2..K-1: extend by one threshold at a time.
    for (int level = 2; level <= k - 1; ++level) {
        std::vector<double> next(static_cast<std::size_t>(width) * width, kInf);
        std::vector<std::uint16_t> bp(static_cast<std::size_t>(width) * width, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (Parallel)
#endif
        for (int j = 0; j <= n; ++j) {     // Q_level
            for (int l = j; l <= n; ++l) { // Q_{level+1}
                double best = kInf;
                int best_i = 0;
                for (int i = 0; i <= j; ++i) { // Q_{level-1}
                    double v = std::max(value[at(i, j)],
                                        detail::sandwich_bin_sup(g(i), g(j), g(l)));
                    if (v < best) {
                        best = v;
                        best_i = i;
                    }
                }
                next[at(j, l)] = best;
                bp[at(j, l)] = static_cast<std::uint16_t>(best_i);
            }
        }
        value = std::move(next);
        backptr.push_back(std::move(bp));
    }

    // Bin K uses (Q_{K-1}, 1, 1); states must end at Q_K = 1.
    double best = kInf;
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        double v = std::max(value[at(i, n)], detail::sandwich_bin_sup(g(i), 1.0, 1.0));
        if (v < best) {
            best = v;
            best_i = i;
        }
    }

    // Walk the backpointers to recover Q_{K-2}..Q_1.
    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    idx[static_cast<std::size_t>(k)] = n;
    idx[static_cast<std::size_t>(k) - 1] = best_i;
    for (int r = k - 2; r >= 1; --r) {
        const auto& bp = backptr[static_cast<std::size_t>(r) - 1];
        idx[static_cast<std::size_t>(r)] =
            bp[at(idx[static_cast<std::size_t>(r) + 1], idx[static_cast<std::size_t>(r) + 2])];
    }

    DpResult res;
    res.thresholds.resize(static_cast<std::size_t>(k) + 1);
    res.thresholds[0] = 0.0;
    for (int r = 1; r <= k; ++r) res.thresholds[static_cast<std::size_t>(r)] = g(idx[static_cast<std::size_t>(r)]);
    return res;
}

SandwichSolution finish(int k, double threshold_grid, double c_grid, bool parallel) {
    if (k < 1) throw InvariantViolation("sandwich_optimize requires k >= 1");
    if (!(threshold_grid > 0.0) || threshold_grid > 1.0)
        throw InvariantViolation("threshold grid step must lie in (0, 1]");
    const int n = std::max(1, static_cast<int>(std::llround(1.0 / threshold_grid)));
    if (n > 65535) throw InvariantViolation("threshold grid too fine");
    DpResult dp = parallel ? optimize_on_grid<true>(k, n) : optimize_on_grid<false>(k, n);
    QuantileProfile profile(std::move(dp.thresholds));
    double ratio = sandwich_ratio(profile, c_grid);
    return {std::move(profile), ratio};
}

} // namespace

SandwichSolution sandwich_optimize(int k, double threshold_grid, double c_grid) {
    return finish(k, threshold_grid, c_grid, true);
}

SandwichSolution sandwich_optimize_serial(int k, double threshold_grid, double c_grid) {
    return finish(k, threshold_grid, c_grid, false);
}

} // namespace rdl
