#pragma once

#include <utility>
#include <vector>

#include "rdl/distribution.hpp"
#include "rdl/profiles.hpp"

namespace rdl {

/// One step of the threshold recursion: z + (gamma - 1)*(1 + sqrt(z))^2.
double lambda_step(double z, double gamma);

/// K-fold composition of lambda_step starting from 0.
double big_lambda(double gamma, int k);

/// Lower/upper bounds on the optimal ratio: (1 + 1/(4k), 1 + 1/k).
std::pair<double, double> ratio_bounds(int k);

/// Unique root of big_lambda(gamma, k) = 1, found by bisection on the
/// ratio_bounds bracket (big_lambda is strictly increasing in gamma).
/// tol bounds the final bracket width.
double solve_gamma_star(int k, double tol = 1e-12);

struct OptimalSolution {
    double gamma_star = 0.0;
    QuantileProfile profile;
};

/// Optimal thresholds via the backward recursion
/// Q_K = 1, Q_{r-1} = 1 - lambda_step(1 - Q_r, gamma_star).
/// The recursion lands at Q_0 within solver tolerance of zero, which is
/// clamped to exactly 0; larger residues raise RecursionInconsistency.
OptimalSolution optimal_profile(int k, double tol = 1e-12);

/// Worst-case competitive ratio of a quantile profile, bin by bin:
/// term_r = 1 + (Q_r - Q_{r-1}) / (1 + sqrt(1 - Q_r))^2.
struct RatioReport {
    struct BinTerm {
        int r = 0;
        double term = 1.0;
    };
    std::vector<BinTerm> per_bin;
    double ratio = 1.0;
    int argmax_bin = 1; // smallest maximizing index
};

RatioReport robust_ratio(const QuantileProfile& profile);

/// True iff Q_r - Q_{r-1} > Q_{r+1} - Q_r for every interior r.
bool check_decreasing_margins(const QuantileProfile& profile);

/// The scaled recursion witness: for any gamma with big_lambda >= 1 it
/// produces a profile whose robust ratio is at most gamma
/// (s_K = 0, s_{r-1} = lambda_step(s_r), Q_r = 1 - s_r/s_0).
QuantileProfile feasible_profile(double gamma, int k);

/// E_F[max{c,x}] / E_G[max{c,x}] where G is the posterior-mean
/// distribution of the quantile decomposition of the prior.  The fully
/// degenerate corner (both sides zero) returns 1 by convention.
double hinge_ratio(const AtomicDistribution& prior, const QuantileProfile& profile, double c);

struct WorstHinge {
    double ratio = 1.0;
    double c_star = 0.0;
};

/// Maximizes hinge_ratio over c in [0,1].  Candidates: {0, 1}, prior atom
/// values, bin posterior means, and per-bin z*_r * F^{-1}(Q_r) with
/// z*_r = sqrt(1-Q_r)/(1+sqrt(1-Q_r)); each bracketing interval is then
/// refined by golden-section search to 1e-10.
WorstHinge worst_hinge_ratio(const AtomicDistribution& prior, const QuantileProfile& profile);

} // namespace rdl
