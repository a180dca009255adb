#pragma once

#include <vector>

#include "rdl/distribution.hpp"
#include "rdl/profiles.hpp"

namespace rdl {

/// Reduced form of a signaling scheme: signal weights plus the posterior
/// each signal induces.  The mixture of posteriors weighted by the signal
/// weights recovers the source prior (Bayes plausibility); zero-weight
/// signals are never stored.
struct Signal {
    double weight = 0.0;
    AtomicDistribution posterior;
};

struct SignalDecomposition {
    std::vector<Signal> signals;
};

/// Pools prior mass by quantile: bin r receives, from each atom, the
/// overlap length of the atom's quantile footprint with [Q_{r-1}, Q_r].
/// Atoms straddling a threshold are split by overlap; zero-width bins are
/// dropped.
SignalDecomposition quantile_decomposition(const AtomicDistribution& prior,
                                           const QuantileProfile& profile);

/// Pools prior mass by raw quality: bin r receives all atoms strictly
/// inside (w_{r-1}, w_r), a fraction (1 - xi_{r-1}) of any atom at
/// w_{r-1} and a fraction xi_r of any atom at w_r.  Empty bins dropped.
SignalDecomposition quality_decomposition(const AtomicDistribution& prior,
                                          const QualityProfile& profile);

SignalDecomposition full_info_decomposition(const AtomicDistribution& prior);
SignalDecomposition no_info_decomposition(const AtomicDistribution& prior);

/// Distribution of per-signal posterior means, weighted by signal weight.
AtomicDistribution posterior_mean_distribution(const SignalDecomposition& dec);

} // namespace rdl
