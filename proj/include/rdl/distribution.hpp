#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rdl/errors.hpp"

namespace rdl {

/// Atom values closer than this are merged into one atom.  After
/// construction, values are compared exactly.
inline constexpr double kValueMergeTol = 1e-12;

/// Tolerance on mass/weight sums (inputs are renormalized, so this only
/// gates preconditions such as mixture weights).
inline constexpr double kMassTol = 1e-9;

struct Atom {
    double value = 0.0;
    double mass = 0.0;
};

/// Finite-support probability distribution on [0,1].
///
/// Invariants (enforced on construction): values strictly increasing in
/// [0,1], masses strictly positive and summing to one.  Immutable after
/// construction; all operations on it are pure.
class AtomicDistribution {
public:
    /// Sorts, merges duplicate values (tolerance kValueMergeTol), drops
    /// zero-mass atoms and renormalizes.  Throws EmptySupport if nothing
    /// remains, OutOfRange if a value lies outside [0,1].
    explicit AtomicDistribution(std::vector<Atom> atoms);

    static AtomicDistribution point_mass(double value);
    /// Two-point distribution on {0,1} with the given mass at 1.
    static AtomicDistribution bernoulli(double mass_at_one);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }

    double min_value() const noexcept { return atoms_.front().value; }
    double max_value() const noexcept { return atoms_.back().value; }

private:
    std::vector<Atom> atoms_;
};

/// Quantile interval [q_lo, q_hi] occupied by each atom under the
/// left-continuous CDF convention; intervals tile [0,1] contiguously.
struct QuantileFootprint {
    struct Entry {
        double value = 0.0;
        double q_lo = 0.0;
        double q_hi = 0.0;
    };
    std::vector<Entry> entries;
};

AtomicDistribution make_distribution(std::vector<Atom> pairs);

double mean(const AtomicDistribution& d);

QuantileFootprint quantile_footprint(const AtomicDistribution& d);

/// Smallest atom value whose cumulative mass reaches q (generalized
/// inverse CDF).  q must lie in [0,1].
double value_at_quantile(const AtomicDistribution& d, double q);

/// Discretizes a non-decreasing quantile function by the mass-midpoint
/// rule: n atoms at q((i-0.5)/n), mass 1/n each, then merged.  Throws
/// NonMonotone if sampled values decrease by more than kValueMergeTol.
AtomicDistribution discretize(const std::function<double(double)>& quantile_fn, int n);

/// Weighted union of atoms; weights must be non-negative and sum to one
/// within kMassTol.  Zero-weight parts are ignored.
AtomicDistribution mixture(const std::vector<std::pair<double, AtomicDistribution>>& parts);

/// E[max{c, x}] under d.  The workhorse expectation behind every hinge
/// revenue computation.
double expect_hinge(const AtomicDistribution& d, double c);

} // namespace rdl
