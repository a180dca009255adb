#include "rdl/partition.hpp"

#include <algorithm>
#include <cmath>

namespace rdl {

SignalDecomposition quantile_decomposition(const AtomicDistribution& prior,
                                           const QuantileProfile& profile) {
    const QuantileFootprint fp = quantile_footprint(prior);
    SignalDecomposition dec;
    for (int r = 1; r <= profile.k(); ++r) {
        const double lo = profile.q(r - 1);
        const double hi = profile.q(r);
        const double width = hi - lo;
        if (width <= 0.0) continue; // zero-width bin carries no signal

        std::vector<Atom> in_bin;
        for (const auto& e : fp.entries) {
            double overlap = std::min(e.q_hi, hi) - std::max(e.q_lo, lo);
            if (overlap > 0.0) in_bin.push_back({e.value, overlap / width});
        }
        dec.signals.push_back({width, AtomicDistribution(std::move(in_bin))});
    }
    return dec;
}

SignalDecomposition quality_decomposition(const AtomicDistribution& prior,
                                          const QualityProfile& profile) {
    const int k = profile.k();
    // Per-bin atom accumulators, indexed 1..K.
    std::vector<std::vector<Atom>> bins(static_cast<std::size_t>(k) + 1);

    for (const auto& a : prior.atoms()) {
        // An atom sitting exactly on a threshold is split by that
        // threshold's fraction; with duplicated thresholds the last
        // matching index governs (earlier copies bound empty bins).
        int match = -1;
        for (int j = k; j >= 0; --j) {
            if (std::abs(a.value - profile.w(j)) <= kValueMergeTol) {
                match = j;
                break;
            }
        }
        if (match >= 0) {
            const double xi = profile.xi(match);
            if (match >= 1 && xi > 0.0)
                bins[static_cast<std::size_t>(match)].push_back({a.value, a.mass * xi});
            if (match < k && xi < 1.0)
                bins[static_cast<std::size_t>(match) + 1].push_back({a.value, a.mass * (1.0 - xi)});
            continue;
        }
        // Strictly interior: the unique bin with w_{r-1} < value < w_r.
        for (int r = 1; r <= k; ++r) {
            if (a.value > profile.w(r - 1) && a.value < profile.w(r)) {
                bins[static_cast<std::size_t>(r)].push_back({a.value, a.mass});
                break;
            }
        }
    }

    SignalDecomposition dec;
    for (int r = 1; r <= k; ++r) {
        auto& atoms = bins[static_cast<std::size_t>(r)];
        double w = 0.0;
        for (const auto& a : atoms) w += a.mass;
        if (w <= 0.0) continue;
        dec.signals.push_back({w, AtomicDistribution(std::move(atoms))});
    }
    return dec;
}

SignalDecomposition full_info_decomposition(const AtomicDistribution& prior) {
    SignalDecomposition dec;
    dec.signals.reserve(prior.size());
    for (const auto& a : prior.atoms())
        dec.signals.push_back({a.mass, AtomicDistribution::point_mass(a.value)});
    return dec;
}

SignalDecomposition no_info_decomposition(const AtomicDistribution& prior) {
    return {{{1.0, prior}}};
}

AtomicDistribution posterior_mean_distribution(const SignalDecomposition& dec) {
    std::vector<Atom> atoms;
    atoms.reserve(dec.signals.size());
    for (const auto& s : dec.signals) atoms.push_back({mean(s.posterior), s.weight});
    return AtomicDistribution(std::move(atoms));
}

} // namespace rdl
