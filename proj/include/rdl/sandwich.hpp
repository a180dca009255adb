#pragma once

#include "rdl/profiles.hpp"

namespace rdl {

/// Per-bin ratio of the sandwich relaxation, with the convention
/// Q_{K+1} := 1 for the last bin:
///
///   c*Q_{r-1} + (c(1-c) + c)(Q_r - Q_{r-1}) + (1+c)(1-Q_r)
///   -----------------------------------------------------
///   c*Q_r + (Q_{r+1} - Q_r) + (1+c)(1-Q_{r+1})
///
/// When Q_r = 1 the quotient has a removable singularity at c = 0 and is
/// evaluated through its continuous extension Q_{r-1} + (2-c)(1-Q_{r-1}).
double sandwich_bin_ratio(const QuantileProfile& profile, int r, double c);

/// max over bins of sup over c in [0,1] of sandwich_bin_ratio, the sup
/// taken on a c-grid of the given step with golden-section refinement
/// around the best cell.
double sandwich_ratio(const QuantileProfile& profile, double c_grid = 0.001);

struct SandwichSolution {
    QuantileProfile profile;
    double ratio = 0.0;
};

/// Minimizes sandwich_ratio over all weakly increasing threshold profiles
/// on a uniform grid of the given step.  Because each bin's ratio depends
/// only on three consecutive thresholds, the grid minimum is found exactly
/// by a minimax recursion over threshold pairs instead of enumerating
/// profiles; the inner sup over c uses the stationary point of the
/// rational bin function in closed form.  Grid cells are evaluated in
/// parallel when OpenMP is enabled; ties break to the smallest indices, so
/// the result does not depend on thread count.
SandwichSolution sandwich_optimize(int k, double threshold_grid = 0.005,
                                   double c_grid = 0.001);

/// Plain serial implementation of the same recursion, kept as the
/// reference for tests and benchmarks.
SandwichSolution sandwich_optimize_serial(int k, double threshold_grid = 0.005,
                                          double c_grid = 0.001);

namespace detail {

/// sup over c in [0,1] of the bin ratio with thresholds (a, b, d).
double sandwich_bin_sup(double a, double b, double d);

/// Raw bin ratio for thresholds (a, b, d) at level c.
double sandwich_bin_value(double a, double b, double d, double c);

} // namespace detail

} // namespace rdl
